#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rasacx/distribution.hpp"
#include "rasacx/rational.hpp"

namespace rasacx {

class ProbVector;

// Deterministic seeded generator. Range reduction is plain modulo on the raw
// mt19937_64 stream so the draw sequence is identical on every platform;
// std::uniform_int_distribution is implementation-defined and avoided.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }  // n >= 1
  long integer_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Uniform-ish rational in [0, 1]: denominator in 2..max_den, numerator 0..den.
Rational random_unit_rational(SeededRng& rng, unsigned max_den);

// m entries in [0, 1] with denominators bounded by max_den.
std::vector<Rational> random_unit_vector(SeededRng& rng, std::size_t m, unsigned max_den);

// Applies `steps` random pinches (Robin-Hood transfers between two entries)
// to p. The result is majorized by p and has the same total and length.
std::vector<Rational> random_pinched(SeededRng& rng, const std::vector<Rational>& p,
                                     unsigned steps);

// Random distribution supported on integers {0, ..., max_point}.
DiscreteDistribution random_integer_distribution(SeededRng& rng, unsigned max_point);

// Mean-preserving spread: moves part of one atom's mass outward to x - a and
// x + b with the balancing weights. Support stays within {0, ..., max_point}.
// Returns d unchanged when no atom can be spread.
DiscreteDistribution mean_preserving_spread(SeededRng& rng, const DiscreteDistribution& d,
                                            unsigned max_point);

// Mean-preserving contraction: collapses mass from two atoms >= 2 apart onto
// an interior integer point. Returns d unchanged when no pair qualifies.
DiscreteDistribution mean_preserving_contraction(SeededRng& rng, const DiscreteDistribution& d);

// Pair of distributions on {0, ..., max_point} with exactly equal means,
// built from a common base by independent chains of spreads/contractions.
std::pair<DiscreteDistribution, DiscreteDistribution> random_equal_mean_pair(SeededRng& rng,
                                                                             unsigned max_point);

}  // namespace rasacx
