#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rasacx/distribution.hpp"
#include "rasacx/rational.hpp"

namespace rasacx {

// Thrown when a majorization precondition (q majorizes p) is violated.
class order_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Vector of success probabilities, each in [0, 1]. Order carries no meaning
// for the operations below; they work on sorted copies.
class ProbVector {
 public:
  explicit ProbVector(std::vector<Rational> entries);

  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Rational sum() const;
  Rational mean() const;
  // Sum of squared deviations from the mean.
  Rational sum_squared_deviation() const;
  std::vector<Rational> sorted_descending() const;

  bool operator==(const ProbVector&) const = default;

 private:
  std::vector<Rational> entries_;
};

// One Robin-Hood transfer applied to the sorted-descending working vector:
// positions s < t, amount delta moved from entry s to entry t.
struct PinchStep {
  std::size_t s;
  std::size_t t;
  Rational delta;
  std::pair<Rational, Rational> before;  // (entry s, entry t) before the move
  std::pair<Rational, Rational> after;
};

// Whether q majorizes p: equal totals and the sorted-descending prefix sums
// of q dominate those of p at every index. Lengths must match.
bool majorizes(const ProbVector& q, const ProbVector& p);

// Finite chain of pinches carrying sorted(p) to sorted(p_prime); empty when
// the vectors agree up to permutation. Requires p to majorize p_prime
// (order_error otherwise). At most size() - 1 steps; every intermediate stays
// sorted descending and is majorized by p and majorizes p_prime.
std::vector<PinchStep> pinch_chain(const ProbVector& p, const ProbVector& p_prime);

// Alternating-sum criterion on elementary symmetric functions: requires equal
// first symmetric functions, then for every k in 2..m checks
//   sum_{j=k}^{m} (-1)^{j-k} C(j-2, k-2) (e_j(p') - e_j(p)) >= 0.
// Lengths must match and be >= 2.
bool sigma_criterion(const ProbVector& p, const ProbVector& p_prime);

// Law of X_1 + ... + X_m with independent X_i ~ Bernoulli(p_i).
DiscreteDistribution bernoulli_convolution(const ProbVector& p);

}  // namespace rasacx
