#ifndef GINOE_PRECISION_HPP
#define GINOE_PRECISION_HPP

#include "ginoe/errors.hpp"

namespace ginoe {

// All floating results are claimed accurate to target_bits only; computation
// runs at target_bits + guard_bits and the final rounding inflates the error
// bound accordingly.
struct PrecisionContext {
  long target_bits = 128;
  long guard_bits = 64;

  PrecisionContext() = default;
  explicit PrecisionContext(long target, long guard = 64)
      : target_bits(target), guard_bits(guard) {
    if (target_bits < 32) throw DomainError("PrecisionContext: target_bits must be >= 32");
    if (guard_bits < 32) throw DomainError("PrecisionContext: guard_bits must be >= 32");
  }

  long working_bits() const { return target_bits + guard_bits; }

  // Context for inner computations feeding a result that is itself rounded to
  // target_bits: keep the full working precision across module boundaries.
  PrecisionContext inner() const { return PrecisionContext(working_bits(), guard_bits); }

  // Same target, doubled working precision (self-check evaluations).
  PrecisionContext doubled() const { return PrecisionContext(2 * target_bits, guard_bits); }
};

}  // namespace ginoe

#endif
