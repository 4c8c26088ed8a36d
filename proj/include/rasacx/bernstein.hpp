#pragma once

#include <vector>

#include "rasacx/convex_function.hpp"
#include "rasacx/distribution.hpp"
#include "rasacx/rational.hpp"

namespace rasacx {

// C(n, i) x^i (1 - x)^(n - i). Requires 0 <= i <= n (std::out_of_range) and
// x in [0, 1] (std::domain_error).
Rational bernstein_basis(unsigned n, unsigned i, const Rational& x);

// (B_n f)(x) = sum_i p_{n,i}(x) f(i / n). Requires n >= 1, x in [0, 1] and
// f's domain to contain [0, 1].
Rational bernstein_apply(unsigned n, const ConvexTestFunction& f, const Rational& x);

// E f((X_1 + ... + X_k) / m) with independent X_i ~ Binomial(n_i, x_i) and
// m = n_1 + ... + n_k, computed through the exact convolution law. ns and xs
// must have equal nonzero length, each n_i >= 1, each x_i in [0, 1].
Rational tensor_sum(const std::vector<unsigned>& ns, const std::vector<Rational>& xs,
                    const ConvexTestFunction& f);

// The convolution law of (X_1 + ... + X_k) / m itself.
DiscreteDistribution tensor_sum_law(const std::vector<unsigned>& ns,
                                    const std::vector<Rational>& xs);

}  // namespace rasacx
