#include "rasacx/majorization.hpp"

#include <algorithm>
#include <functional>

namespace rasacx {

ProbVector::ProbVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::domain_error("probability vector must be nonempty");
  for (const Rational& p : entries_) {
    if (p.sign() < 0 || p > Rational(1)) {
      throw std::domain_error("probability " + p.str() + " outside [0, 1]");
    }
  }
}

Rational ProbVector::sum() const {
  Rational s(0);
  for (const Rational& p : entries_) s += p;
  return s;
}

Rational ProbVector::mean() const { return sum() / Rational(static_cast<long>(size())); }

Rational ProbVector::sum_squared_deviation() const {
  Rational m = mean();
  Rational s(0);
  for (const Rational& p : entries_) s += (p - m) * (p - m);
  return s;
}

std::vector<Rational> ProbVector::sorted_descending() const {
  std::vector<Rational> v = entries_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

bool majorizes(const ProbVector& q, const ProbVector& p) {
  if (q.size() != p.size()) {
    throw std::domain_error("majorization compares vectors of equal length");
  }
  std::vector<Rational> qs = q.sorted_descending();
  std::vector<Rational> ps = p.sorted_descending();
  Rational qsum(0), psum(0);
  for (std::size_t k = 0; k < qs.size(); ++k) {
    qsum += qs[k];
    psum += ps[k];
    if (qsum < psum) return false;
  }
  return qsum == psum;
}

std::vector<PinchStep> pinch_chain(const ProbVector& p, const ProbVector& p_prime) {
  if (!majorizes(p, p_prime)) {
    throw order_error("pinch_chain requires the first vector to majorize the second");
  }
  std::vector<Rational> v = p.sorted_descending();
  std::vector<Rational> w = p_prime.sorted_descending();
  std::vector<PinchStep> steps;
  const std::size_t m = v.size();
  // Transfer from the last surplus entry to the first deficit entry after it.
  // Each step zeroes at least one difference, keeps v sorted descending and
  // preserves the majorization sandwich p >= v >= p_prime.
  for (std::size_t guard = 0; v != w; ++guard) {
    if (guard >= m) throw std::logic_error("pinch chain failed to terminate");
    std::size_t s = m;
    for (std::size_t i = m; i-- > 0;) {
      if (v[i] > w[i]) {
        s = i;
        break;
      }
    }
    std::size_t t = m;
    for (std::size_t i = s + 1; i < m; ++i) {
      if (v[i] < w[i]) {
        t = i;
        break;
      }
    }
    if (s == m || t == m) throw std::logic_error("pinch chain lost majorization invariant");
    Rational delta = min(v[s] - w[s], w[t] - v[t]);
    PinchStep step{s, t, delta, {v[s], v[t]}, {v[s] - delta, v[t] + delta}};
    v[s] -= delta;
    v[t] += delta;
    steps.push_back(std::move(step));
  }
  return steps;
}

bool sigma_criterion(const ProbVector& p, const ProbVector& p_prime) {
  if (p.size() != p_prime.size()) {
    throw std::domain_error("sigma criterion compares vectors of equal length");
  }
  const std::size_t m = p.size();
  if (m < 2) throw std::domain_error("sigma criterion requires at least two entries");
  std::vector<Rational> e = elementary_symmetric_all(p.entries());
  std::vector<Rational> ep = elementary_symmetric_all(p_prime.entries());
  if (e[1] != ep[1]) return false;
  for (std::size_t k = 2; k <= m; ++k) {
    Rational acc(0);
    int sign = 1;
    for (std::size_t j = k; j <= m; ++j) {
      Rational term = binomial_coefficient(static_cast<long>(j) - 2, static_cast<long>(k) - 2) *
                      (ep[j] - e[j]);
      acc += sign > 0 ? term : -term;
      sign = -sign;
    }
    if (acc.sign() < 0) return false;
  }
  return true;
}

DiscreteDistribution bernoulli_convolution(const ProbVector& p) {
  DiscreteDistribution d = bernoulli(p.entries().front());
  for (std::size_t i = 1; i < p.size(); ++i) d = convolve(d, bernoulli(p.entries()[i]));
  return d;
}

}  // namespace rasacx
