#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rasacx/convex_function.hpp"
#include "rasacx/distribution.hpp"

namespace rasacx {

// Witness of a failed stop-loss comparison: at point t the left distribution's
// stop-loss value lhs exceeds the right one's rhs.
struct StopLossWitness {
  Rational t;
  Rational lhs;
  Rational rhs;
  bool operator==(const StopLossWitness&) const = default;
};

struct CxVerdict {
  bool dominated = false;
  // "holds", "means-differ" or "stop-loss-violation".
  std::string reason;
  std::optional<StopLossWitness> witness;
};

// Decides whether a is dominated by b in the convex order, i.e. whether
// E f(A) <= E f(B) for every convex f. Exact: equal means plus stop-loss
// dominance checked at every point of the union of supports. On violation
// the witness carries the smallest violating t.
CxVerdict is_cx_dominated(const DiscreteDistribution& a, const DiscreteDistribution& b);

// Randomized falsification oracle, independent of is_cx_dominated: samples
// seeded random convex piecewise-linear functions on the union of supports
// and returns the first f with E f(A) > E f(B), if any. trials >= 1.
std::optional<ConvexTestFunction> cx_falsify_random(const DiscreteDistribution& a,
                                                    const DiscreteDistribution& b,
                                                    std::uint64_t seed, unsigned trials);

}  // namespace rasacx
