#ifndef GINOE_RECOGNIZE_HPP
#define GINOE_RECOGNIZE_HPP

#include <optional>

#include "ginoe/bigreal.hpp"
#include "ginoe/rational.hpp"

namespace ginoe {

// Try to recognize x as a + b*sqrt(2) with small rational a, b by lattice
// reduction on the integer relation (c0, c1, c2) . (1, sqrt2, x) ~ 0.
// x should carry ~512 bits; the candidate is NOT verified here.
std::optional<Sqrt2Rational> recognize_sqrt2(const BigReal& x);

}  // namespace ginoe

#endif
