#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rasacx/convex_function.hpp"
#include "rasacx/rational.hpp"

namespace rasacx {

// Finitely supported probability distribution on the rationals, kept
// canonical: points strictly increasing, every mass > 0, masses sum to 1
// exactly. Two distributions are equal iff their atom lists are equal.
class DiscreteDistribution {
 public:
  struct Atom {
    Rational point;
    Rational mass;
    bool operator==(const Atom&) const = default;
  };

  // Merges duplicate points, drops zero masses, rejects negative masses and
  // any total other than 1 (std::domain_error).
  static DiscreteDistribution from_atoms(std::vector<Atom> atoms);
  static DiscreteDistribution point_mass(const Rational& c);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Rational& min_support() const { return atoms_.front().point; }
  const Rational& max_support() const { return atoms_.back().point; }

  Rational mean() const;
  // E max(X - t, 0), the stop-loss transform at t.
  Rational stop_loss(const Rational& t) const;
  // E f(X); every support point must lie in f's domain.
  Rational expect(const ConvexTestFunction& f) const;

  bool operator==(const DiscreteDistribution&) const = default;

 private:
  DiscreteDistribution() = default;
  std::vector<Atom> atoms_;
};

// Law of a Bernoulli(p) variable; requires 0 <= p <= 1.
DiscreteDistribution bernoulli(const Rational& p);

// Law of a Binomial(n, p) variable; requires n >= 1 and 0 <= p <= 1.
DiscreteDistribution binomial(unsigned n, const Rational& p);

// Law of the sum of independent draws from a and b.
DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b);

// Weighted mixture; weights must be nonnegative and sum to 1.
DiscreteDistribution mixture(
    const std::vector<std::pair<Rational, DiscreteDistribution>>& components);

// Law of scale * X + shift.
DiscreteDistribution affine_pushforward(const DiscreteDistribution& d, const Rational& scale,
                                        const Rational& shift);

}  // namespace rasacx
