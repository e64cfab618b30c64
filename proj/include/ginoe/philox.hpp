#ifndef GINOE_PHILOX_HPP
#define GINOE_PHILOX_HPP

#include <array>
#include <cstdint>

namespace ginoe {

// Philox-4x32-10 counter-based generator.  A stream is addressed by
// (seed, sample id); draws within the stream are addressed by a counter, so
// any sample can be generated independently of scheduling.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  // 64 uniform bits for draw index `ctr`
  std::uint64_t bits64(std::uint64_t ctr) const {
    std::array<std::uint32_t, 4> x = {static_cast<std::uint32_t>(ctr),
                                      static_cast<std::uint32_t>(ctr >> 32), stream_lo_,
                                      stream_hi_};
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int round = 0; round < 10; ++round) {
      std::uint64_t p0 = 0xD2511F53ull * x[0];
      std::uint64_t p1 = 0xCD9E8D57ull * x[2];
      std::array<std::uint32_t, 4> y;
      y[0] = static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k0;
      y[1] = static_cast<std::uint32_t>(p1);
      y[2] = static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k1;
      y[3] = static_cast<std::uint32_t>(p0);
      x = y;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return (static_cast<std::uint64_t>(x[0]) << 32) | x[1];
  }

  // uniform in (0,1): (n + 1/2) 2^-53 from the top 53 bits
  double uniform(std::uint64_t ctr) const {
    std::uint64_t u = bits64(ctr) >> 11;
    return (static_cast<double>(u) + 0.5) * 0x1p-53;
  }

 private:
  std::uint32_t key0_, key1_, stream_lo_, stream_hi_;
};

// Box-Muller pair from draws (2i, 2i+1) of the stream.
struct GaussianStream {
  Philox rng;
  explicit GaussianStream(std::uint64_t seed, std::uint64_t stream) : rng(seed, stream) {}

  std::pair<double, double> pair(std::uint64_t i) const;
  // n i.i.d. standard normals, deterministic in (seed, stream)
  void fill(double* out, std::size_t n) const;
};

}  // namespace ginoe

#endif
