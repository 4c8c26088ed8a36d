#pragma once

#include <cstdint>
#include <vector>

#include "rasacx/convex_function.hpp"

namespace rasacx {

// Grid {0, 1/d, ..., 1}; d >= 1.
std::vector<Rational> rational_grid(unsigned denominator);

// The standard battery on [0, 1]: hinges and absolute deviations centered at
// every lattice point j/lattice_den, the square, and twenty seeded random
// convex piecewise-linear functions with breakpoints on the same lattice.
// Ids: "hinge:j/d", "abs:j/d", "square", "pwl:01".."pwl:20".
std::vector<LabeledFunction> standard_battery(unsigned lattice_den, std::uint64_t seed);

}  // namespace rasacx
