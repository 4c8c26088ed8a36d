#pragma once

#include <string>
#include <vector>

#include "rasacx/rational.hpp"

namespace rasacx {

struct Interval {
  Rational lo;
  Rational hi;

  static Interval unit() { return {Rational(0), Rational(1)}; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool operator==(const Interval&) const = default;
};

// A convex test function on a closed rational interval, evaluated exactly.
// Convexity is validated at construction; evaluation outside the domain
// throws std::domain_error.
class ConvexTestFunction {
 public:
  enum class Kind { hinge, abs_dev, piecewise_linear, polynomial };

  // x -> max(x - t, 0)
  static ConvexTestFunction hinge(Rational t, Interval domain = Interval::unit());
  // x -> |x - t|
  static ConvexTestFunction abs_dev(Rational t, Interval domain = Interval::unit());
  // Linear interpolation through (breakpoints[i], values[i]); breakpoints
  // strictly increasing, at least two, segment slopes nondecreasing.
  // Domain is [breakpoints.front(), breakpoints.back()].
  static ConvexTestFunction piecewise_linear(std::vector<Rational> breakpoints,
                                             std::vector<Rational> values);
  // coefficients[i] multiplies x^i. Accepted when convex on the whole line
  // (degree <= 2 with nonnegative leading term) or when all coefficients of
  // degree >= 2 are nonnegative and the domain lies in [0, inf).
  static ConvexTestFunction polynomial(std::vector<Rational> coefficients,
                                       Interval domain = Interval::unit());
  static ConvexTestFunction square(Interval domain = Interval::unit());

  Kind kind() const { return kind_; }
  const Interval& domain() const { return domain_; }
  const Rational& center() const { return t_; }  // hinge / abs_dev
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& x) const;

 private:
  ConvexTestFunction() = default;

  Kind kind_ = Kind::hinge;
  Interval domain_ = Interval::unit();
  Rational t_;
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
  std::vector<Rational> coefficients_;
};

// A test function together with the short identifier used in reports,
// e.g. "hinge:1/2", "square", "pwl:07".
struct LabeledFunction {
  std::string id;
  ConvexTestFunction fn;
};

}  // namespace rasacx
