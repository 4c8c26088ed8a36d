#include "rasacx/inequalities.hpp"

#include <numeric>
#include <stdexcept>

namespace rasacx {

bool ChainValues::nondecreasing() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] > values[i]) return false;
  }
  return true;
}

std::vector<InequalityMargin> ChainValues::stages() const {
  std::vector<InequalityMargin> rows;
  rows.reserve(values.size() - 1);
  for (std::size_t i = 1; i < values.size(); ++i) {
    Params with_stage = params;
    with_stage.emplace_back("stage", std::to_string(i));
    rows.push_back({chain_id, point, std::move(with_stage), f_id, values[i - 1], values[i],
                    values[i] - values[i - 1]});
  }
  return rows;
}

namespace {

Rational nr(unsigned n) { return Rational(static_cast<long>(n)); }

DiscreteDistribution scaled(const DiscreteDistribution& d, unsigned m) {
  return affine_pushforward(d, Rational(1, static_cast<long>(m)), Rational(0));
}

void check_two_sample(unsigned n, const Rational& x, const Rational& y) {
  if (n < 1) throw std::domain_error("two-sample inequality requires n >= 1");
  Interval unit = Interval::unit();
  if (!unit.contains(x) || !unit.contains(y)) {
    throw std::domain_error("sample points must lie in [0, 1]");
  }
}

Params two_sample_params(unsigned n, const Rational& x, const Rational& y) {
  return {{"n", std::to_string(n)}, {"x", x.str()}, {"y", y.str()}};
}

struct MultiSample {
  unsigned m;
  Rational xbar;
  std::vector<Rational> point;
  Params params;
};

MultiSample check_multi_sample(const std::vector<unsigned>& ns, const std::vector<Rational>& xs) {
  if (ns.empty() || ns.size() != xs.size()) {
    throw std::domain_error("sample counts and points must have equal nonzero length");
  }
  Interval unit = Interval::unit();
  MultiSample ms;
  ms.m = 0;
  Rational weighted(0);
  std::string ns_text, xs_text;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw std::domain_error("every sample count must be >= 1");
    if (!unit.contains(xs[i])) throw std::domain_error("sample points must lie in [0, 1]");
    ms.m += ns[i];
    weighted += nr(ns[i]) * xs[i];
    ns_text += (i ? "," : "") + std::to_string(ns[i]);
    xs_text += (i ? "," : "") + xs[i].str();
  }
  ms.xbar = weighted / nr(ms.m);
  for (unsigned n : ns) ms.point.push_back(nr(n));
  ms.point.insert(ms.point.end(), xs.begin(), xs.end());
  ms.params = {{"ns", ns_text}, {"xs", xs_text}};
  return ms;
}

}  // namespace

InequalityMargin rasa_original(unsigned n, const Rational& x, const Rational& y,
                               const LabeledFunction& f) {
  check_two_sample(n, x, y);
  DiscreteDistribution cross = scaled(convolve(binomial(n, x), binomial(n, y)), 2 * n);
  DiscreteDistribution mix = mixture({{Rational(1, 2), scaled(convolve(binomial(n, x), binomial(n, x)), 2 * n)},
                                      {Rational(1, 2), scaled(convolve(binomial(n, y), binomial(n, y)), 2 * n)}});
  Rational lhs = cross.expect(f.fn);
  Rational rhs = mix.expect(f.fn);
  return {"rasa", {nr(n), x, y}, two_sample_params(n, x, y), f.id, lhs, rhs, rhs - lhs};
}

CxVerdict prop_concentration(unsigned n, const Rational& x, const Rational& y) {
  check_two_sample(n, x, y);
  DiscreteDistribution cross = scaled(convolve(binomial(n, x), binomial(n, y)), 2 * n);
  DiscreteDistribution mid = scaled(binomial(2 * n, (x + y) / 2), 2 * n);
  return is_cx_dominated(cross, mid);
}

CxVerdict prop_mixture(unsigned n, const Rational& x, const Rational& y) {
  check_two_sample(n, x, y);
  DiscreteDistribution mid = scaled(binomial(2 * n, (x + y) / 2), 2 * n);
  DiscreteDistribution mix = mixture({{Rational(1, 2), scaled(binomial(2 * n, x), 2 * n)},
                                      {Rational(1, 2), scaled(binomial(2 * n, y), 2 * n)}});
  return is_cx_dominated(mid, mix);
}

std::vector<InequalityMargin> split_inequalities(unsigned n, const Rational& x, const Rational& y,
                                                 const LabeledFunction& f) {
  check_two_sample(n, x, y);
  Rational mid = (x + y) / 2;
  Rational at_x = bernstein_apply(2 * n, f.fn, x);
  Rational at_y = bernstein_apply(2 * n, f.fn, y);
  Rational at_mid = bernstein_apply(2 * n, f.fn, mid);
  Rational cross = scaled(convolve(binomial(n, x), binomial(n, y)), 2 * n).expect(f.fn);
  std::vector<Rational> point{nr(n), x, y};
  Params params = two_sample_params(n, x, y);
  std::vector<InequalityMargin> rows;
  rows.push_back({"split-jensen", point, params, f.id, at_mid + at_mid, at_x + at_y,
                  at_x + at_y - at_mid - at_mid});
  rows.push_back({"split-midpoint", point, params, f.id, cross, at_mid, at_mid - cross});
  rows.push_back({"split-combined", point, params, f.id, cross + cross, at_x + at_y,
                  at_x + at_y - cross - cross});
  return rows;
}

std::vector<InequalityMargin> generalized_inequalities(const std::vector<unsigned>& ns,
                                                       const std::vector<Rational>& xs,
                                                       const LabeledFunction& f) {
  MultiSample ms = check_multi_sample(ns, xs);
  Rational tensor = tensor_sum(ns, xs, f.fn);
  Rational at_xbar = bernstein_apply(ms.m, f.fn, ms.xbar);

  Rational weighted_apply(0);
  Rational weighted_law(0);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    Rational w(static_cast<long>(ns[i]), static_cast<long>(ms.m));
    weighted_apply += w * bernstein_apply(ms.m, f.fn, xs[i]);
    weighted_law += w * scaled(binomial(ms.m, xs[i]), ms.m).expect(f.fn);
  }
  // Same weighted side once more as the literal basis double sum, kept as an
  // independent route; its margin must match general-combined exactly.
  Rational weighted_basis(0);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    Rational w(static_cast<long>(ns[i]), static_cast<long>(ms.m));
    Rational inner(0);
    for (unsigned j = 0; j <= ms.m; ++j) {
      inner += bernstein_basis(ms.m, j, xs[i]) *
               f.fn(Rational(static_cast<long>(j), static_cast<long>(ms.m)));
    }
    weighted_basis += w * inner;
  }

  std::vector<InequalityMargin> rows;
  rows.push_back({"general-concentration", ms.point, ms.params, f.id, tensor, at_xbar,
                  at_xbar - tensor});
  rows.push_back({"general-jensen", ms.point, ms.params, f.id, at_xbar, weighted_apply,
                  weighted_apply - at_xbar});
  rows.push_back({"general-combined", ms.point, ms.params, f.id, tensor, weighted_law,
                  weighted_law - tensor});
  rows.push_back({"general-expanded", ms.point, ms.params, f.id, tensor, weighted_basis,
                  weighted_basis - tensor});
  return rows;
}

InequalityMargin hlp_sum(unsigned n, const ProbVector& p, const ProbVector& p_prime,
                         const LabeledFunction& f) {
  if (n < 1) throw std::domain_error("hlp_sum requires n >= 1");
  if (!majorizes(p, p_prime)) {
    throw order_error("hlp_sum requires the first vector to majorize the second");
  }
  Rational lhs(0), rhs(0);
  for (const Rational& v : p_prime.entries()) lhs += bernstein_apply(n, f.fn, v);
  for (const Rational& v : p.entries()) rhs += bernstein_apply(n, f.fn, v);
  std::vector<Rational> point{nr(n)};
  point.insert(point.end(), p.entries().begin(), p.entries().end());
  point.insert(point.end(), p_prime.entries().begin(), p_prime.entries().end());
  auto join = [](const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s;
  };
  Params params{{"n", std::to_string(n)}, {"p", join(p.entries())},
                {"p_prime", join(p_prime.entries())}};
  return {"hlp-sum", std::move(point), std::move(params), f.id, lhs, rhs, rhs - lhs};
}

ChainValues chain_coarsening(const std::vector<unsigned>& ns, const std::vector<Rational>& xs,
                             const LabeledFunction& f) {
  MultiSample ms = check_multi_sample(ns, xs);
  const std::size_t k = ns.size();
  if (k < 2) throw std::domain_error("chains need at least two samples");
  std::vector<Rational> values;
  values.reserve(k);
  unsigned n_head = 0;
  Rational weighted_head(0);
  for (std::size_t j = 0; j < k; ++j) {
    n_head += ns[j];
    weighted_head += nr(ns[j]) * xs[j];
    std::vector<unsigned> stage_ns{n_head};
    std::vector<Rational> stage_xs{weighted_head / nr(n_head)};
    for (std::size_t i = j + 1; i < k; ++i) {
      stage_ns.push_back(ns[i]);
      stage_xs.push_back(xs[i]);
    }
    values.push_back(tensor_sum(stage_ns, stage_xs, f.fn));
  }
  return {"chain-coarsening", ms.point, ms.params, f.id, std::move(values)};
}

ChainValues chain_jensen(const std::vector<unsigned>& ns, const std::vector<Rational>& xs,
                         const LabeledFunction& f) {
  MultiSample ms = check_multi_sample(ns, xs);
  const std::size_t k = ns.size();
  if (k < 2) throw std::domain_error("chains need at least two samples");
  std::vector<Rational> tails(k + 1, Rational(0));
  for (std::size_t i = k; i-- > 0;) {
    Rational w(static_cast<long>(ns[i]), static_cast<long>(ms.m));
    tails[i] = tails[i + 1] + w * bernstein_apply(ms.m, f.fn, xs[i]);
  }
  std::vector<Rational> values;
  values.reserve(k);
  unsigned n_head = 0;
  Rational weighted_head(0);
  std::vector<Rational> merged;
  for (std::size_t j = 0; j < k; ++j) {
    n_head += ns[j];
    weighted_head += nr(ns[j]) * xs[j];
    Rational w(static_cast<long>(n_head), static_cast<long>(ms.m));
    merged.push_back(w * bernstein_apply(ms.m, f.fn, weighted_head / nr(n_head)) + tails[j + 1]);
  }
  // Fully merged term first, fully split weighted sum last.
  for (std::size_t j = k; j-- > 0;) values.push_back(merged[j]);
  return {"chain-jensen", ms.point, ms.params, f.id, std::move(values)};
}

}  // namespace rasacx
