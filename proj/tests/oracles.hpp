#pragma once

// Reference implementations used only to cross-check the library. They stay
// off the library's computation paths on purpose: binomial coefficients come
// from a Pascal triangle, expectations from direct multi-index summation,
// symmetric functions from explicit subset enumeration.

#include <cstddef>
#include <vector>

#include "rasacx/convex_function.hpp"
#include "rasacx/rational.hpp"

namespace oracle {

using rasacx::ConvexTestFunction;
using rasacx::Rational;

inline Rational rpow(const Rational& x, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

inline Rational pascal(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  std::vector<Rational> row{Rational(1)};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Rational> next(i + 1, Rational(1));
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

inline Rational basis(unsigned n, unsigned i, const Rational& x) {
  return pascal(n, i) * rpow(x, i) * rpow(Rational(1) - x, n - i);
}

inline Rational bernstein(unsigned n, const ConvexTestFunction& f, const Rational& x) {
  Rational s(0);
  for (unsigned i = 0; i <= n; ++i) {
    s += basis(n, i, x) * f(Rational(static_cast<long>(i), static_cast<long>(n)));
  }
  return s;
}

// E f((j_1 + ... + j_k) / m) by summing over every index tuple directly.
inline Rational tensor(const std::vector<unsigned>& ns, const std::vector<Rational>& xs,
                       const ConvexTestFunction& f) {
  unsigned m = 0;
  for (unsigned n : ns) m += n;
  std::vector<unsigned> j(ns.size(), 0);
  Rational s(0);
  while (true) {
    Rational prob(1);
    unsigned total = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      prob *= basis(ns[i], j[i], xs[i]);
      total += j[i];
    }
    s += prob * f(Rational(static_cast<long>(total), static_cast<long>(m)));
    std::size_t d = ns.size();
    while (d-- > 0) {
      if (++j[d] <= ns[d]) break;
      j[d] = 0;
      if (d == 0) return s;
    }
  }
}

// The symmetric two-sample quadratic form: for independent n-sample halves
// at x and y, sum over all (i, j) of
//   [p_i(x) p_j(x) + p_i(y) p_j(y) - 2 p_i(x) p_j(y)] f((i + j) / 2n).
inline Rational two_sample_form(unsigned n, const Rational& x, const Rational& y,
                                const ConvexTestFunction& f) {
  Rational s(0);
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = 0; j <= n; ++j) {
      Rational w = basis(n, i, x) * basis(n, j, x) + basis(n, i, y) * basis(n, j, y) -
                   Rational(2) * basis(n, i, x) * basis(n, j, y);
      s += w * f(Rational(static_cast<long>(i + j), static_cast<long>(2 * n)));
    }
  }
  return s;
}

// e_k by enumerating all k-element subsets; fine for small m.
inline Rational subset_esym(const std::vector<Rational>& v, std::size_t k) {
  const std::size_t m = v.size();
  Rational s(0);
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    Rational prod(1);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t(1) << i)) prod *= v[i];
    }
    s += prod;
  }
  return s;
}

}  // namespace oracle
