#include "rasacx/generators.hpp"

namespace rasacx {

Rational random_unit_rational(SeededRng& rng, unsigned max_den) {
  unsigned den = max_den <= 2 ? 2 : 2 + static_cast<unsigned>(rng.below(max_den - 1));
  unsigned num = static_cast<unsigned>(rng.below(den + 1));
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

std::vector<Rational> random_unit_vector(SeededRng& rng, std::size_t m, unsigned max_den) {
  std::vector<Rational> v;
  v.reserve(m);
  for (std::size_t i = 0; i < m; ++i) v.push_back(random_unit_rational(rng, max_den));
  return v;
}

std::vector<Rational> random_pinched(SeededRng& rng, const std::vector<Rational>& p,
                                     unsigned steps) {
  std::vector<Rational> v = p;
  if (v.size() < 2) return v;
  for (unsigned step = 0; step < steps; ++step) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::size_t s = static_cast<std::size_t>(rng.below(v.size()));
      std::size_t t = static_cast<std::size_t>(rng.below(v.size()));
      if (s == t || v[s] == v[t]) continue;
      if (v[s] < v[t]) std::swap(s, t);
      Rational lambda(rng.integer_in(1, 4), 4);
      Rational delta = (v[s] - v[t]) / 2 * lambda;
      v[s] -= delta;
      v[t] += delta;
      break;
    }
  }
  return v;
}

DiscreteDistribution random_integer_distribution(SeededRng& rng, unsigned max_point) {
  std::vector<DiscreteDistribution::Atom> atoms;
  std::vector<long> weights(max_point + 1, 0);
  bool any = false;
  for (unsigned x = 0; x <= max_point; ++x) {
    if (rng.coin()) {
      weights[x] = rng.integer_in(1, 12);
      any = true;
    }
  }
  if (!any) weights[rng.below(max_point + 1)] = 1;
  long total = 0;
  for (long w : weights) total += w;
  for (unsigned x = 0; x <= max_point; ++x) {
    if (weights[x] > 0) {
      atoms.push_back({Rational(static_cast<long>(x)), Rational(weights[x], total)});
    }
  }
  return DiscreteDistribution::from_atoms(std::move(atoms));
}

DiscreteDistribution mean_preserving_spread(SeededRng& rng, const DiscreteDistribution& d,
                                            unsigned max_point) {
  const Rational lo(0);
  const Rational hi(static_cast<long>(max_point));
  for (int attempt = 0; attempt < 16; ++attempt) {
    const auto& atom = d.atoms()[rng.below(d.size())];
    if (atom.point <= lo || atom.point >= hi) continue;
    long x = static_cast<long>(atom.point.numerator().get_si());
    long a = rng.integer_in(1, x);
    long b = rng.integer_in(1, static_cast<long>(max_point) - x);
    Rational moved = atom.mass * Rational(rng.integer_in(1, 4), 4);
    std::vector<DiscreteDistribution::Atom> atoms = d.atoms();
    for (auto& at : atoms) {
      if (at.point == atom.point) at.mass -= moved;
    }
    atoms.push_back({Rational(x - a), moved * Rational(b, a + b)});
    atoms.push_back({Rational(x + b), moved * Rational(a, a + b)});
    return DiscreteDistribution::from_atoms(std::move(atoms));
  }
  return d;
}

DiscreteDistribution mean_preserving_contraction(SeededRng& rng, const DiscreteDistribution& d) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d.atoms()[j].point - d.atoms()[i].point >= Rational(2)) pairs.emplace_back(i, j);
    }
  }
  if (pairs.empty()) return d;
  auto [i, j] = pairs[rng.below(pairs.size())];
  const Rational& x1 = d.atoms()[i].point;
  const Rational& x2 = d.atoms()[j].point;
  long gap = static_cast<long>((x2 - x1).numerator().get_si());
  Rational c = x1 + Rational(rng.integer_in(1, gap - 1));
  Rational mu_max = min(d.atoms()[i].mass / (x2 - c), d.atoms()[j].mass / (c - x1));
  Rational mu = mu_max * Rational(rng.integer_in(1, 4), 4);
  std::vector<DiscreteDistribution::Atom> atoms = d.atoms();
  atoms[i].mass -= mu * (x2 - c);
  atoms[j].mass -= mu * (c - x1);
  atoms.push_back({c, mu * (x2 - x1)});
  return DiscreteDistribution::from_atoms(std::move(atoms));
}

std::pair<DiscreteDistribution, DiscreteDistribution> random_equal_mean_pair(SeededRng& rng,
                                                                             unsigned max_point) {
  DiscreteDistribution base = random_integer_distribution(rng, max_point);
  auto evolve = [&](DiscreteDistribution d, unsigned moves, bool allow_contraction) {
    for (unsigned k = 0; k < moves; ++k) {
      if (allow_contraction && rng.coin()) {
        d = mean_preserving_contraction(rng, d);
      } else {
        d = mean_preserving_spread(rng, d, max_point);
      }
    }
    return d;
  };
  unsigned ka = static_cast<unsigned>(rng.below(3));
  unsigned kb = 1 + static_cast<unsigned>(rng.below(3));
  DiscreteDistribution a = evolve(base, ka, true);
  DiscreteDistribution b = evolve(base, kb, true);
  return {std::move(a), std::move(b)};
}

}  // namespace rasacx
