#include "rasacx/bernstein.hpp"

#include <numeric>
#include <stdexcept>

namespace rasacx {

Rational bernstein_basis(unsigned n, unsigned i, const Rational& x) {
  if (i > n) throw std::out_of_range("bernstein_basis index exceeds degree");
  if (x.sign() < 0 || x > Rational(1)) {
    throw std::domain_error("bernstein_basis point " + x.str() + " outside [0, 1]");
  }
  return binomial_coefficient(n, i) * pow(x, i) * pow(Rational(1) - x, n - i);
}

Rational bernstein_apply(unsigned n, const ConvexTestFunction& f, const Rational& x) {
  if (n < 1) throw std::domain_error("bernstein_apply requires degree >= 1");
  if (!f.domain().contains(Interval::unit())) {
    throw std::domain_error("bernstein_apply needs the function defined on [0, 1]");
  }
  Rational s(0);
  for (unsigned i = 0; i <= n; ++i) {
    s += bernstein_basis(n, i, x) * f(Rational(static_cast<long>(i), static_cast<long>(n)));
  }
  return s;
}

DiscreteDistribution tensor_sum_law(const std::vector<unsigned>& ns,
                                    const std::vector<Rational>& xs) {
  if (ns.empty() || ns.size() != xs.size()) {
    throw std::domain_error("tensor sum needs matching nonempty parameter lists");
  }
  unsigned m = std::accumulate(ns.begin(), ns.end(), 0u);
  DiscreteDistribution d = binomial(ns[0], xs[0]);
  for (std::size_t i = 1; i < ns.size(); ++i) d = convolve(d, binomial(ns[i], xs[i]));
  return affine_pushforward(d, Rational(1, static_cast<long>(m)), Rational(0));
}

Rational tensor_sum(const std::vector<unsigned>& ns, const std::vector<Rational>& xs,
                    const ConvexTestFunction& f) {
  return tensor_sum_law(ns, xs).expect(f);
}

}  // namespace rasacx
