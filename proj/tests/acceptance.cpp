// Acceptance suite: one line per criterion, PASS or FAIL, with wall time.
// Every tolerance here is exact equality of rationals; runtime bounds are the
// only approximate checks and they are asserted as stated.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rasacx/battery.hpp"
#include "rasacx/bernstein.hpp"
#include "rasacx/convex_order.hpp"
#include "rasacx/generators.hpp"
#include "rasacx/inequalities.hpp"
#include "rasacx/json_io.hpp"
#include "rasacx/majorization.hpp"
#include "rasacx/sweep.hpp"

using namespace rasacx;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

void expect(bool ok, const std::string& what) {
  if (!ok) note(what);
}

void criterion(int index, const std::string& title, const std::function<void()>& body,
               double budget_seconds = 0.0) {
  g_notes.clear();
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0 && dt >= budget_seconds) {
    note("runtime " + std::to_string(dt) + " s exceeds " + std::to_string(budget_seconds) + " s");
  }
  bool pass = g_notes.empty();
  if (!pass) ++g_failures;
  std::printf("[%s] %d. %s (%.3f s)\n", pass ? "PASS" : "FAIL", index, title.c_str(), dt);
  for (const std::string& m : g_notes) std::printf("       - %s\n", m.c_str());
  std::fflush(stdout);
}

ProbVector pv(std::vector<const char*> entries) {
  std::vector<Rational> v;
  for (const char* e : entries) v.push_back(Rational::parse(e));
  return ProbVector(std::move(v));
}

bool atoms_equal(const DiscreteDistribution& d,
                 std::vector<std::pair<const char*, const char*>> expected) {
  if (d.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (d.atoms()[i].point != Rational::parse(expected[i].first)) return false;
    if (d.atoms()[i].mass != Rational::parse(expected[i].second)) return false;
  }
  return true;
}

// Full replay of a pinch chain against every stated invariant.
bool replay_ok(const ProbVector& p, const ProbVector& pp, const std::vector<PinchStep>& steps,
               std::string* why) {
  std::vector<Rational> v = p.sorted_descending();
  const std::vector<Rational> target = pp.sorted_descending();
  if (steps.size() > v.size() - 1) {
    *why = "chain longer than size - 1";
    return false;
  }
  for (const PinchStep& st : steps) {
    if (st.s >= st.t || st.t >= v.size()) {
      *why = "bad step indices";
      return false;
    }
    if (v[st.s] != st.before.first || v[st.t] != st.before.second) {
      *why = "recorded before-values do not match the working vector";
      return false;
    }
    if (st.delta.sign() <= 0 || st.delta + st.delta > st.before.first - st.before.second) {
      *why = "transfer is not a pinch";
      return false;
    }
    v[st.s] -= st.delta;
    v[st.t] += st.delta;
    if (v[st.s] != st.after.first || v[st.t] != st.after.second) {
      *why = "recorded after-values do not match";
      return false;
    }
    if (!std::is_sorted(v.begin(), v.end(), std::greater<>())) {
      *why = "intermediate lost descending order";
      return false;
    }
    if (!majorizes(p, ProbVector(v)) || !majorizes(ProbVector(v), pp)) {
      *why = "intermediate escaped the majorization sandwich";
      return false;
    }
  }
  if (v != target) {
    *why = "chain did not reach the target";
    return false;
  }
  return true;
}

// Same-sum random walk used for the sigma cross-validation population: each
// move either pinches two entries together or spreads them apart within
// [0, 1], so the first symmetric function never changes while the convex
// order relation can go either way.
std::vector<Rational> sum_preserving_walk(SeededRng& rng, const std::vector<Rational>& start,
                                          unsigned moves) {
  std::vector<Rational> v = start;
  for (unsigned k = 0; k < moves; ++k) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::size_t s = static_cast<std::size_t>(rng.below(v.size()));
      std::size_t t = static_cast<std::size_t>(rng.below(v.size()));
      if (s == t) continue;
      if (v[s] < v[t]) std::swap(s, t);
      Rational lambda(rng.integer_in(1, 4), 4);
      if (rng.coin()) {
        Rational delta = (v[s] - v[t]) / 2 * lambda;
        if (delta.sign() == 0) continue;
        v[s] -= delta;
        v[t] += delta;
      } else {
        Rational room = min(Rational(1) - v[s], v[t]);
        Rational delta = room * lambda;
        if (delta.sign() == 0) continue;
        v[s] += delta;
        v[t] -= delta;
      }
      break;
    }
  }
  return v;
}

std::string render(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace

int main() {
  criterion(
      1,
      "first pair: convolution goldens, domination holds, majorization fails",
      [] {
        ProbVector p = pv({"3/4", "3/4", "0"});
        ProbVector ppr = pv({"5/6", "1/2", "1/6"});
        DiscreteDistribution mu = bernoulli_convolution(p);
        DiscreteDistribution nu = bernoulli_convolution(ppr);
        expect(atoms_equal(mu, {{"0", "1/16"}, {"1", "3/8"}, {"2", "9/16"}}),
               "law of p has wrong atoms");
        expect(atoms_equal(nu, {{"0", "5/72"}, {"1", "31/72"}, {"2", "31/72"}, {"3", "5/72"}}),
               "law of p' has wrong atoms");
        CxVerdict v = is_cx_dominated(mu, nu);
        expect(v.dominated && v.reason == "holds", "domination should hold");
        expect(!majorizes(p, ppr), "p must not majorize p'");
        expect(!majorizes(ppr, p), "p' must not majorize p");
        expect(!cx_falsify_random(mu, nu, 7, 1000).has_value(),
               "falsifier found a spurious counterexample");
      },
      1.0);

  criterion(
      2,
      "second pair: dispersion ordered, domination refuted with witness t = 2",
      [] {
        ProbVector p = pv({"1", "1/2", "1/2", "0"});
        ProbVector ppr = pv({"5/6", "5/6", "1/6", "1/6"});
        DiscreteDistribution mu = bernoulli_convolution(p);
        DiscreteDistribution nu = bernoulli_convolution(ppr);
        expect(atoms_equal(mu, {{"1", "1/4"}, {"2", "1/2"}, {"3", "1/4"}}),
               "law of p has wrong atoms");
        expect(atoms_equal(nu, {{"0", "25/1296"},
                                {"1", "260/1296"},
                                {"2", "726/1296"},
                                {"3", "260/1296"},
                                {"4", "25/1296"}}),
               "law of p' has wrong atoms");
        expect(mu.mean() == Rational(2) && nu.mean() == Rational(2), "means must both be 2");
        expect(p.sum_squared_deviation() == Rational(1, 2) &&
                   ppr.sum_squared_deviation() == Rational(4, 9),
               "squared deviations must be 1/2 and 4/9");
        ConvexTestFunction f = ConvexTestFunction::abs_dev(Rational(2), {Rational(0), Rational(4)});
        expect(mu.expect(f) == Rational(1, 2) && nu.expect(f) == Rational(155, 324),
               "E|X - 2| must be 1/2 and 155/324");
        CxVerdict v = is_cx_dominated(mu, nu);
        expect(!v.dominated && v.reason == "stop-loss-violation", "domination must fail");
        expect(v.witness && v.witness->t == Rational(2) && v.witness->lhs == Rational(1, 4) &&
                   v.witness->rhs == Rational(155, 648),
               "witness must be t = 2 with sides 1/4 and 155/648");
        auto found = cx_falsify_random(mu, nu, 7, 1000);
        expect(found.has_value(), "falsifier must find a counterexample function");
        if (found) expect(mu.expect(*found) > nu.expect(*found), "falsifier witness does not violate");
        expect(!sigma_criterion(p, ppr), "sigma criterion must reject this pair");
      },
      1.0);

  criterion(
      3,
      "two-sample sweep n in 1..5 on the eighths grid, full battery, single-threaded",
      [] {
        RasaSweepConfig cfg;
        cfg.n_lo = 1;
        cfg.n_hi = 5;
        cfg.grid_denominator = 8;
        cfg.seed = 0;
        cfg.exec = {ExecMode::serial, 0};
        cfg.collect_rows = false;
        Report r = rasa_sweep(cfg);
        expect(r.total == 81u * (27 + 31 + 35 + 39 + 43), "unexpected case count");
        expect(r.failures == 0, std::to_string(r.failures) + " margins negative");
      },
      60.0);

  criterion(4, "split and generalized sweeps, k in {2, 3}, with route agreement", [] {
    RasaSweepConfig scfg;
    scfg.n_lo = 1;
    scfg.n_hi = 5;
    scfg.grid_denominator = 8;
    scfg.seed = 0;
    scfg.collect_rows = false;
    Report split = split_sweep(scfg);
    expect(split.failures == 0, std::to_string(split.failures) + " split margins negative");

    std::vector<std::vector<unsigned>> tuples;
    for (unsigned a = 1; a <= 3; ++a) {
      for (unsigned b = 1; b <= 3; ++b) {
        tuples.push_back({a, b});
        for (unsigned c = 1; c <= 3; ++c) tuples.push_back({a, b, c});
      }
    }
    // Same enumeration general_sweep uses, but with the route-equality check
    // made per case before the rows are discarded.
    std::atomic<long> route_mismatches{0};
    std::vector<Rational> grid = rational_grid(8);
    std::size_t total = 0, failures = 0;
    for (const auto& ns : tuples) {
      unsigned m = 0;
      for (unsigned n : ns) m += n;
      std::vector<LabeledFunction> battery = standard_battery(m, 0);
      std::vector<std::vector<Rational>> points;
      std::vector<std::size_t> idx(ns.size(), 0);
      while (true) {
        std::vector<Rational> xs;
        for (std::size_t d : idx) xs.push_back(grid[d]);
        points.push_back(std::move(xs));
        std::size_t d = ns.size();
        bool carry = true;
        while (d-- > 0) {
          if (++idx[d] < grid.size()) {
            carry = false;
            break;
          }
          idx[d] = 0;
        }
        if (carry) break;
      }
      std::vector<std::size_t> case_failures(points.size() * battery.size(), 0);
      for_each_index(points.size() * battery.size(), ExecOptions{}, [&](std::size_t i) {
        const auto& xs = points[i / battery.size()];
        const auto& f = battery[i % battery.size()];
        std::vector<InequalityMargin> rows = generalized_inequalities(ns, xs, f);
        Rational combined, expanded;
        for (const InequalityMargin& r : rows) {
          if (!r.holds()) ++case_failures[i];
          if (r.inequality_id == "general-combined") combined = r.margin;
          if (r.inequality_id == "general-expanded") expanded = r.margin;
        }
        if (combined != expanded) ++route_mismatches;
      });
      total += points.size() * battery.size();
      for (std::size_t f : case_failures) failures += f;
    }
    expect(failures == 0, std::to_string(failures) + " generalized margins negative");
    expect(route_mismatches.load() == 0,
           std::to_string(route_mismatches.load()) + " route disagreements between the two "
                                                     "weighted-side computations");
    expect(total == 711504u, "unexpected case count: " + std::to_string(total));
  });

  criterion(5, "300 majorizing pairs: chains replay and domination follows", [] {
    SeededRng rng(2024);
    int checked_pairs = 0;
    LabeledFunction sq{"square", ConvexTestFunction::square()};
    for (int rep = 0; rep < 300; ++rep) {
      std::size_t m = 2 + static_cast<std::size_t>(rng.below(5));
      ProbVector p(random_unit_vector(rng, m, 12));
      ProbVector pp(random_pinched(rng, p.entries(), 1 + static_cast<unsigned>(rng.below(m))));
      if (!majorizes(p, pp)) {
        note("constructed pair fails majorizes at rep " + std::to_string(rep));
        return;
      }
      std::vector<PinchStep> chain = pinch_chain(p, pp);
      std::string why;
      if (!replay_ok(p, pp, chain, &why)) {
        note("replay failed at rep " + std::to_string(rep) + ": " + why);
        return;
      }
      // Each single transfer spreads the convolution; the whole chain gives
      // the end-to-end domination.
      std::vector<Rational> v = p.sorted_descending();
      for (const PinchStep& st : chain) {
        std::vector<Rational> next = v;
        next[st.s] -= st.delta;
        next[st.t] += st.delta;
        if (!is_cx_dominated(bernoulli_convolution(ProbVector(v)),
                             bernoulli_convolution(ProbVector(next)))
                 .dominated) {
          note("single pinch failed to spread at rep " + std::to_string(rep));
          return;
        }
        v = std::move(next);
      }
      if (!is_cx_dominated(bernoulli_convolution(p), bernoulli_convolution(pp)).dominated) {
        note("end-to-end domination failed at rep " + std::to_string(rep));
        return;
      }
      if (!hlp_sum(2, p, pp, sq).holds()) {
        note("sum bound failed at rep " + std::to_string(rep));
        return;
      }
      // Specialization to the constant vector: the equal-parameter binomial
      // is the most spread out law with this mean.
      ProbVector constant(std::vector<Rational>(m, p.mean()));
      if (!majorizes(p, constant)) {
        note("p does not majorize its own average at rep " + std::to_string(rep));
        return;
      }
      if (!is_cx_dominated(bernoulli_convolution(p),
                           binomial(static_cast<unsigned>(m), p.mean()))
               .dominated) {
        note("binomial concentration failed at rep " + std::to_string(rep));
        return;
      }
      ++checked_pairs;
    }
    expect(checked_pairs == 300, "expected 300 pairs");
  });

  criterion(6, "300 equal-sum pairs: sigma criterion matches the exact decision", [] {
    expect(sigma_criterion(pv({"3/4", "3/4", "0"}), pv({"5/6", "1/2", "1/6"})),
           "criterion must accept the first example pair");
    expect(!sigma_criterion(pv({"1", "1/2", "1/2", "0"}), pv({"5/6", "5/6", "1/6", "1/6"})),
           "criterion must reject the second example pair");
    SeededRng rng(5150);
    int agree_true = 0, agree_false = 0, disagreements = 0;
    for (int rep = 0; rep < 300; ++rep) {
      std::size_t m = 2 + static_cast<std::size_t>(rng.below(4));
      ProbVector p(random_unit_vector(rng, m, 10));
      std::vector<Rational> other =
          rep < 150 ? random_pinched(rng, p.entries(), 1 + static_cast<unsigned>(rng.below(3)))
                    : sum_preserving_walk(rng, p.entries(), 1 + static_cast<unsigned>(rng.below(4)));
      ProbVector pp(other);
      bool predicted = sigma_criterion(p, pp);
      bool exact =
          is_cx_dominated(bernoulli_convolution(p), bernoulli_convolution(pp)).dominated;
      if (predicted != exact) {
        ++disagreements;
        if (disagreements == 1) {
          std::string entries;
          for (const Rational& e : p.entries()) entries += e.str() + " ";
          note("sigma-criterion discrepancy at rep " + std::to_string(rep) + ": p = " + entries);
        }
      } else {
        ++(exact ? agree_true : agree_false);
      }
    }
    expect(disagreements == 0,
           std::to_string(disagreements) + " sigma-criterion discrepancies in 300 pairs");
    expect(agree_true > 0 && agree_false > 0,
           "population degenerate: " + std::to_string(agree_true) + " true / " +
               std::to_string(agree_false) + " false");
  });

  criterion(7, "500 equal-mean pairs: decision procedure agrees with the falsifier", [] {
    SeededRng rng(99);
    int dominated_count = 0, refuted_count = 0;
    for (int rep = 0; rep < 500; ++rep) {
      auto [a, b] = random_equal_mean_pair(rng, 6);
      if (a.mean() != b.mean()) {
        note("generator produced unequal means at rep " + std::to_string(rep));
        return;
      }
      bool dominated = is_cx_dominated(a, b).dominated;
      auto f = cx_falsify_random(a, b, 7000 + static_cast<std::uint64_t>(rep), 2000);
      if (dominated) {
        ++dominated_count;
        if (f.has_value()) {
          note("falsifier contradicted a positive decision at rep " + std::to_string(rep));
          return;
        }
      } else {
        ++refuted_count;
        if (!f.has_value()) {
          note("falsifier missed a violation at rep " + std::to_string(rep));
          return;
        }
        if (!(a.expect(*f) > b.expect(*f))) {
          note("falsifier returned a non-violating function at rep " + std::to_string(rep));
          return;
        }
      }
    }
    expect(dominated_count + refuted_count == 500, "expected 500 pairs");
    expect(dominated_count > 0 && refuted_count > 0,
           "population degenerate: " + std::to_string(dominated_count) + " dominated / " +
               std::to_string(refuted_count) + " refuted");
  });

  criterion(8, "chains for ns = (1,1,2) and (1,2,3) on the quarters grid", [] {
    for (const std::vector<unsigned>& ns :
         std::vector<std::vector<unsigned>>{{1, 1, 2}, {1, 2, 3}}) {
      unsigned m = 0;
      for (unsigned n : ns) m += n;
      std::vector<LabeledFunction> battery = standard_battery(m, 0);
      std::vector<Rational> grid = rational_grid(4);
      for (const Rational& x1 : grid) {
        for (const Rational& x2 : grid) {
          for (const Rational& x3 : grid) {
            std::vector<Rational> xs{x1, x2, x3};
            Rational xbar(0);
            for (std::size_t i = 0; i < 3; ++i) {
              xbar += Rational(static_cast<long>(ns[i])) * xs[i];
            }
            xbar /= Rational(static_cast<long>(m));
            for (const LabeledFunction& f : battery) {
              ChainValues coarse = chain_coarsening(ns, xs, f);
              ChainValues jensen = chain_jensen(ns, xs, f);
              bool ok = coarse.nondecreasing() && jensen.nondecreasing() &&
                        coarse.values.front() == tensor_sum(ns, xs, f.fn) &&
                        coarse.values.back() == bernstein_apply(m, f.fn, xbar) &&
                        jensen.values.front() == coarse.values.back();
              Rational weighted(0);
              for (std::size_t i = 0; i < 3; ++i) {
                weighted += Rational(static_cast<long>(ns[i]), static_cast<long>(m)) *
                            bernstein_apply(m, f.fn, xs[i]);
              }
              ok = ok && jensen.values.back() == weighted;
              if (!ok) {
                note("chain check failed for f = " + f.id);
                return;
              }
            }
          }
        }
      }
    }
  });

  criterion(9, "one report, byte for byte, whatever the parallelism", [] {
    RasaSweepConfig cfg;
    cfg.n_lo = 1;
    cfg.n_hi = 3;
    cfg.grid_denominator = 4;
    cfg.seed = 7;
    cfg.exec = {ExecMode::serial, 0};
    std::string reference = render(rasa_sweep(cfg));
    expect(!reference.empty(), "empty report");
    for (int threads : {1, 2, 8}) {
      cfg.exec = {ExecMode::openmp, threads};
      if (render(rasa_sweep(cfg)) != reference) {
        note("report differs with " + std::to_string(threads) + " threads");
      }
    }
    cfg.exec = {ExecMode::openmp, 2};
    if (render(rasa_sweep(cfg)) != render(rasa_sweep(cfg))) {
      note("same settings, different bytes");
    }
  });

  std::printf("%d of 9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
