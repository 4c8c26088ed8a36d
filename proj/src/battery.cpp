#include "rasacx/battery.hpp"

#include <cstdio>
#include <stdexcept>

#include "rasacx/generators.hpp"

namespace rasacx {

std::vector<Rational> rational_grid(unsigned denominator) {
  if (denominator < 1) throw std::domain_error("grid denominator must be >= 1");
  std::vector<Rational> grid;
  grid.reserve(denominator + 1);
  for (unsigned j = 0; j <= denominator; ++j) {
    grid.emplace_back(static_cast<long>(j), static_cast<long>(denominator));
  }
  return grid;
}

std::vector<LabeledFunction> standard_battery(unsigned lattice_den, std::uint64_t seed) {
  std::vector<Rational> lattice = rational_grid(lattice_den);
  std::vector<LabeledFunction> fns;
  fns.reserve(2 * lattice.size() + 21);
  for (const Rational& t : lattice) {
    fns.push_back({"hinge:" + t.str(), ConvexTestFunction::hinge(t)});
  }
  for (const Rational& t : lattice) {
    fns.push_back({"abs:" + t.str(), ConvexTestFunction::abs_dev(t)});
  }
  fns.push_back({"square", ConvexTestFunction::square()});
  SeededRng rng(seed);
  const std::size_t segments = lattice.size() - 1;
  for (int idx = 1; idx <= 20; ++idx) {
    Rational den(rng.integer_in(1, 4));
    std::vector<Rational> slopes(segments, Rational(rng.integer_in(-8, 8)) / den);
    for (std::size_t at = 1; at < segments; ++at) {
      if (rng.coin()) {
        Rational jump = Rational(rng.integer_in(1, 8)) / den;
        for (std::size_t s = at; s < segments; ++s) slopes[s] += jump;
      }
    }
    std::vector<Rational> values{Rational(0)};
    values.reserve(lattice.size());
    for (std::size_t s = 0; s < segments; ++s) {
      values.push_back(values.back() + slopes[s] * (lattice[s + 1] - lattice[s]));
    }
    char id[16];
    std::snprintf(id, sizeof id, "pwl:%02d", idx);
    fns.push_back({id, ConvexTestFunction::piecewise_linear(lattice, std::move(values))});
  }
  return fns;
}

}  // namespace rasacx
