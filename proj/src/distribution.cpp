#include "rasacx/distribution.hpp"

#include <map>
#include <stdexcept>

namespace rasacx {

DiscreteDistribution DiscreteDistribution::from_atoms(std::vector<Atom> atoms) {
  std::map<Rational, Rational> merged;
  for (Atom& a : atoms) {
    if (a.mass.sign() < 0) {
      throw std::domain_error("negative mass " + a.mass.str() + " at point " + a.point.str());
    }
    if (a.mass.sign() == 0) continue;
    merged[std::move(a.point)] += a.mass;
  }
  Rational total(0);
  for (const auto& [pt, mass] : merged) total += mass;
  if (total != Rational(1)) {
    throw std::domain_error("atom masses sum to " + total.str() + ", expected 1");
  }
  DiscreteDistribution d;
  d.atoms_.reserve(merged.size());
  for (auto& [pt, mass] : merged) d.atoms_.push_back({pt, mass});
  return d;
}

DiscreteDistribution DiscreteDistribution::point_mass(const Rational& c) {
  return from_atoms({{c, Rational(1)}});
}

Rational DiscreteDistribution::mean() const {
  Rational m(0);
  for (const Atom& a : atoms_) m += a.point * a.mass;
  return m;
}

Rational DiscreteDistribution::stop_loss(const Rational& t) const {
  Rational s(0);
  for (auto it = atoms_.rbegin(); it != atoms_.rend() && it->point > t; ++it) {
    s += (it->point - t) * it->mass;
  }
  return s;
}

Rational DiscreteDistribution::expect(const ConvexTestFunction& f) const {
  Rational s(0);
  for (const Atom& a : atoms_) s += f(a.point) * a.mass;
  return s;
}

DiscreteDistribution bernoulli(const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) {
    throw std::domain_error("bernoulli parameter " + p.str() + " outside [0, 1]");
  }
  return DiscreteDistribution::from_atoms({{Rational(0), Rational(1) - p}, {Rational(1), p}});
}

DiscreteDistribution binomial(unsigned n, const Rational& p) {
  if (n < 1) throw std::domain_error("binomial requires n >= 1");
  if (p.sign() < 0 || p > Rational(1)) {
    throw std::domain_error("binomial parameter " + p.str() + " outside [0, 1]");
  }
  Rational q = Rational(1) - p;
  std::vector<DiscreteDistribution::Atom> atoms;
  atoms.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    atoms.push_back({Rational(static_cast<long>(i)),
                     binomial_coefficient(n, i) * pow(p, i) * pow(q, n - i)});
  }
  return DiscreteDistribution::from_atoms(std::move(atoms));
}

DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  std::vector<DiscreteDistribution::Atom> atoms;
  atoms.reserve(a.size() * b.size());
  for (const auto& x : a.atoms()) {
    for (const auto& y : b.atoms()) {
      atoms.push_back({x.point + y.point, x.mass * y.mass});
    }
  }
  return DiscreteDistribution::from_atoms(std::move(atoms));
}

DiscreteDistribution mixture(
    const std::vector<std::pair<Rational, DiscreteDistribution>>& components) {
  std::vector<DiscreteDistribution::Atom> atoms;
  Rational total(0);
  for (const auto& [w, d] : components) {
    if (w.sign() < 0) throw std::domain_error("negative mixture weight " + w.str());
    total += w;
    for (const auto& a : d.atoms()) atoms.push_back({a.point, w * a.mass});
  }
  if (total != Rational(1)) {
    throw std::domain_error("mixture weights sum to " + total.str() + ", expected 1");
  }
  return DiscreteDistribution::from_atoms(std::move(atoms));
}

DiscreteDistribution affine_pushforward(const DiscreteDistribution& d, const Rational& scale,
                                        const Rational& shift) {
  std::vector<DiscreteDistribution::Atom> atoms;
  atoms.reserve(d.size());
  for (const auto& a : d.atoms()) atoms.push_back({scale * a.point + shift, a.mass});
  return DiscreteDistribution::from_atoms(std::move(atoms));
}

}  // namespace rasacx
