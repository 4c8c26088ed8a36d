#include "rasacx/convex_order.hpp"

#include <algorithm>
#include <stdexcept>

#include "rasacx/generators.hpp"

namespace rasacx {

static std::vector<Rational> support_union(const DiscreteDistribution& a,
                                           const DiscreteDistribution& b) {
  std::vector<Rational> pts;
  pts.reserve(a.size() + b.size());
  for (const auto& at : a.atoms()) pts.push_back(at.point);
  for (const auto& at : b.atoms()) pts.push_back(at.point);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

CxVerdict is_cx_dominated(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  if (a.mean() != b.mean()) return {false, "means-differ", std::nullopt};
  // Both stop-loss transforms are piecewise linear with kinks only at support
  // points, agree for t below both supports (equal means) and vanish above,
  // so comparing at the union of supports decides domination exactly.
  for (const Rational& t : support_union(a, b)) {
    Rational lhs = a.stop_loss(t);
    Rational rhs = b.stop_loss(t);
    if (lhs > rhs) {
      return {false, "stop-loss-violation", StopLossWitness{t, std::move(lhs), std::move(rhs)}};
    }
  }
  return {true, "holds", std::nullopt};
}

std::optional<ConvexTestFunction> cx_falsify_random(const DiscreteDistribution& a,
                                                    const DiscreteDistribution& b,
                                                    std::uint64_t seed, unsigned trials) {
  if (trials < 1) throw std::domain_error("cx_falsify_random requires trials >= 1");
  std::vector<Rational> pts = support_union(a, b);
  if (pts.size() < 2) pts.push_back(pts.back() + Rational(1));
  SeededRng rng(seed);
  const std::size_t segments = pts.size() - 1;
  for (unsigned trial = 0; trial < trials; ++trial) {
    Rational den(rng.integer_in(1, 4));
    std::vector<Rational> slopes(segments, Rational(rng.integer_in(-8, 8)) / den);
    // Few active kinks: near-hinge shapes are the extreme rays of the convex
    // cone and expose single-point stop-loss violations most often.
    if (segments >= 2) {
      std::uint64_t interior = segments - 1;
      unsigned kinks = 1 + static_cast<unsigned>(rng.below(std::min<std::uint64_t>(3, interior)));
      for (unsigned k = 0; k < kinks; ++k) {
        std::size_t at = 1 + static_cast<std::size_t>(rng.below(interior));
        Rational jump = Rational(rng.integer_in(1, 8)) / den;
        for (std::size_t s = at; s < segments; ++s) slopes[s] += jump;
      }
    }
    std::vector<Rational> values{Rational(0)};
    values.reserve(pts.size());
    for (std::size_t s = 0; s < segments; ++s) {
      values.push_back(values.back() + slopes[s] * (pts[s + 1] - pts[s]));
    }
    ConvexTestFunction f = ConvexTestFunction::piecewise_linear(pts, std::move(values));
    if (a.expect(f) > b.expect(f)) return f;
  }
  return std::nullopt;
}

}  // namespace rasacx
