#include "rasacx/convex_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace rasacx {

static void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

ConvexTestFunction ConvexTestFunction::hinge(Rational t, Interval domain) {
  require(domain.lo <= domain.hi, "hinge: empty domain");
  ConvexTestFunction f;
  f.kind_ = Kind::hinge;
  f.domain_ = std::move(domain);
  f.t_ = std::move(t);
  return f;
}

ConvexTestFunction ConvexTestFunction::abs_dev(Rational t, Interval domain) {
  require(domain.lo <= domain.hi, "abs_dev: empty domain");
  ConvexTestFunction f;
  f.kind_ = Kind::abs_dev;
  f.domain_ = std::move(domain);
  f.t_ = std::move(t);
  return f;
}

ConvexTestFunction ConvexTestFunction::piecewise_linear(std::vector<Rational> breakpoints,
                                                        std::vector<Rational> values) {
  require(breakpoints.size() >= 2, "piecewise_linear: need at least two breakpoints");
  require(breakpoints.size() == values.size(),
          "piecewise_linear: breakpoints and values differ in length");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    require(breakpoints[i - 1] < breakpoints[i],
            "piecewise_linear: breakpoints must be strictly increasing");
  }
  for (std::size_t i = 2; i < breakpoints.size(); ++i) {
    Rational prev = (values[i - 1] - values[i - 2]) / (breakpoints[i - 1] - breakpoints[i - 2]);
    Rational next = (values[i] - values[i - 1]) / (breakpoints[i] - breakpoints[i - 1]);
    require(prev <= next, "piecewise_linear: slopes decrease, function not convex");
  }
  ConvexTestFunction f;
  f.kind_ = Kind::piecewise_linear;
  f.domain_ = {breakpoints.front(), breakpoints.back()};
  f.breakpoints_ = std::move(breakpoints);
  f.values_ = std::move(values);
  return f;
}

ConvexTestFunction ConvexTestFunction::polynomial(std::vector<Rational> coefficients,
                                                  Interval domain) {
  require(domain.lo <= domain.hi, "polynomial: empty domain");
  while (!coefficients.empty() && coefficients.back() == Rational(0)) coefficients.pop_back();
  std::size_t degree = coefficients.empty() ? 0 : coefficients.size() - 1;
  if (degree >= 2) {
    bool nonneg_high = std::all_of(coefficients.begin() + 2, coefficients.end(),
                                   [](const Rational& c) { return c.sign() >= 0; });
    if (degree == 2) {
      require(coefficients[2].sign() >= 0, "polynomial: concave quadratic");
    } else {
      require(nonneg_high && domain.lo.sign() >= 0,
              "polynomial: convexity not certified for these coefficients on this domain");
    }
  }
  ConvexTestFunction f;
  f.kind_ = Kind::polynomial;
  f.domain_ = std::move(domain);
  f.coefficients_ = std::move(coefficients);
  return f;
}

ConvexTestFunction ConvexTestFunction::square(Interval domain) {
  return polynomial({Rational(0), Rational(0), Rational(1)}, std::move(domain));
}

Rational ConvexTestFunction::operator()(const Rational& x) const {
  if (!domain_.contains(x)) {
    throw std::domain_error("convex test function evaluated at " + x.str() +
                            " outside domain [" + domain_.lo.str() + ", " + domain_.hi.str() + "]");
  }
  switch (kind_) {
    case Kind::hinge:
      return x > t_ ? x - t_ : Rational(0);
    case Kind::abs_dev:
      return abs(x - t_);
    case Kind::piecewise_linear: {
      auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
      std::size_t hi = std::min<std::size_t>(it - breakpoints_.begin(), breakpoints_.size() - 1);
      std::size_t lo = hi - 1;
      Rational slope = (values_[hi] - values_[lo]) / (breakpoints_[hi] - breakpoints_[lo]);
      return values_[lo] + slope * (x - breakpoints_[lo]);
    }
    case Kind::polynomial: {
      Rational acc(0);
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace rasacx
