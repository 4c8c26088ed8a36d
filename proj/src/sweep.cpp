#include "rasacx/sweep.hpp"

#include <omp.h>

#include <exception>
#include <stdexcept>

#include "rasacx/battery.hpp"
#include "rasacx/generators.hpp"

namespace rasacx {

void for_each_index(std::size_t count, const ExecOptions& exec,
                    const std::function<void(std::size_t)>& body) {
  if (exec.mode == ExecMode::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(rasacx_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

Report run_cases(std::size_t count,
                 const std::function<std::vector<InequalityMargin>(std::size_t)>& eval,
                 const ExecOptions& exec, bool collect_rows) {
  std::vector<std::vector<InequalityMargin>> slots(count);
  for_each_index(count, exec, [&](std::size_t i) { slots[i] = eval(i); });
  Report report;
  report.failures_only = !collect_rows;
  for (std::vector<InequalityMargin>& slot : slots) {
    for (InequalityMargin& row : slot) {
      ++report.total;
      if (!row.holds()) ++report.failures;
      if (collect_rows || !row.holds()) report.rows.push_back(std::move(row));
    }
  }
  sort_rows(report.rows);
  return report;
}

namespace {

struct TwoSampleCases {
  struct Case {
    unsigned n;
    Rational x;
    Rational y;
    std::size_t battery_index;  // into batteries[n - n_lo]
    std::size_t f_index;
  };
  std::vector<std::vector<LabeledFunction>> batteries;
  std::vector<Case> cases;
};

// Batteries are built serially up front (one per n, lattice 2n) so the
// parallel phase only reads shared state.
TwoSampleCases two_sample_cases(const RasaSweepConfig& cfg) {
  if (cfg.n_lo < 1 || cfg.n_hi < cfg.n_lo) {
    throw std::domain_error("sweep needs 1 <= n_lo <= n_hi");
  }
  TwoSampleCases out;
  std::vector<Rational> grid = rational_grid(cfg.grid_denominator);
  for (unsigned n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    out.batteries.push_back(cfg.functions.empty() ? standard_battery(2 * n, cfg.seed)
                                                  : cfg.functions);
  }
  for (unsigned n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    std::size_t bi = n - cfg.n_lo;
    for (const Rational& x : grid) {
      for (const Rational& y : grid) {
        for (std::size_t fi = 0; fi < out.batteries[bi].size(); ++fi) {
          out.cases.push_back({n, x, y, bi, fi});
        }
      }
    }
  }
  return out;
}

}  // namespace

Report rasa_sweep(const RasaSweepConfig& cfg) {
  TwoSampleCases tc = two_sample_cases(cfg);
  return run_cases(
      tc.cases.size(),
      [&](std::size_t i) {
        const auto& c = tc.cases[i];
        return std::vector<InequalityMargin>{
            rasa_original(c.n, c.x, c.y, tc.batteries[c.battery_index][c.f_index])};
      },
      cfg.exec, cfg.collect_rows);
}

Report split_sweep(const RasaSweepConfig& cfg) {
  TwoSampleCases tc = two_sample_cases(cfg);
  return run_cases(
      tc.cases.size(),
      [&](std::size_t i) {
        const auto& c = tc.cases[i];
        return split_inequalities(c.n, c.x, c.y, tc.batteries[c.battery_index][c.f_index]);
      },
      cfg.exec, cfg.collect_rows);
}

namespace {

struct MultiSampleCases {
  struct Case {
    std::size_t ns_index;
    std::vector<Rational> xs;
    std::size_t f_index;
  };
  std::vector<std::vector<LabeledFunction>> batteries;  // one per ns tuple
  std::vector<Case> cases;
};

MultiSampleCases multi_sample_cases(const GeneralSweepConfig& cfg, unsigned min_k) {
  if (cfg.ns_list.empty()) throw std::domain_error("sweep needs at least one ns tuple");
  MultiSampleCases out;
  std::vector<Rational> grid = rational_grid(cfg.grid_denominator);
  for (const auto& ns : cfg.ns_list) {
    if (ns.size() < min_k) {
      throw std::domain_error("ns tuple shorter than required for this sweep");
    }
    unsigned m = 0;
    for (unsigned n : ns) {
      if (n < 1) throw std::domain_error("every sample count must be >= 1");
      m += n;
    }
    out.batteries.push_back(cfg.functions.empty() ? standard_battery(m, cfg.seed)
                                                  : cfg.functions);
  }
  for (std::size_t ti = 0; ti < cfg.ns_list.size(); ++ti) {
    const std::size_t k = cfg.ns_list[ti].size();
    if (!cfg.xs_list.empty()) {
      for (const auto& xs : cfg.xs_list) {
        if (xs.size() != k) {
          throw std::domain_error("explicit xs tuple length does not match ns tuple");
        }
        for (std::size_t fi = 0; fi < out.batteries[ti].size(); ++fi) {
          out.cases.push_back({ti, xs, fi});
        }
      }
      continue;
    }
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<Rational> xs;
      xs.reserve(k);
      for (std::size_t d : idx) xs.push_back(grid[d]);
      for (std::size_t fi = 0; fi < out.batteries[ti].size(); ++fi) {
        out.cases.push_back({ti, xs, fi});
      }
      std::size_t d = k;
      while (d-- > 0) {
        if (++idx[d] < grid.size()) break;
        idx[d] = 0;
        if (d == 0) goto done;
      }
    }
  done:;
  }
  return out;
}

}  // namespace

Report general_sweep(const GeneralSweepConfig& cfg) {
  MultiSampleCases mc = multi_sample_cases(cfg, 1);
  return run_cases(
      mc.cases.size(),
      [&](std::size_t i) {
        const auto& c = mc.cases[i];
        return generalized_inequalities(cfg.ns_list[c.ns_index], c.xs,
                                        mc.batteries[c.ns_index][c.f_index]);
      },
      cfg.exec, cfg.collect_rows);
}

Report chains_sweep(const GeneralSweepConfig& cfg) {
  MultiSampleCases mc = multi_sample_cases(cfg, 2);
  return run_cases(
      mc.cases.size(),
      [&](std::size_t i) {
        const auto& c = mc.cases[i];
        const auto& f = mc.batteries[c.ns_index][c.f_index];
        std::vector<InequalityMargin> rows =
            chain_coarsening(cfg.ns_list[c.ns_index], c.xs, f).stages();
        std::vector<InequalityMargin> jensen =
            chain_jensen(cfg.ns_list[c.ns_index], c.xs, f).stages();
        rows.insert(rows.end(), std::make_move_iterator(jensen.begin()),
                    std::make_move_iterator(jensen.end()));
        return rows;
      },
      cfg.exec, cfg.collect_rows);
}

Report hlp_sweep(const HlpSweepConfig& cfg) {
  if (cfg.n_lo < 1 || cfg.n_hi < cfg.n_lo) {
    throw std::domain_error("sweep needs 1 <= n_lo <= n_hi");
  }
  if (cfg.pairs < 1 || cfg.max_len < 2) {
    throw std::domain_error("hlp sweep needs pairs >= 1 and max_len >= 2");
  }
  SeededRng rng(cfg.seed);
  std::vector<std::pair<ProbVector, ProbVector>> pairs;
  pairs.reserve(cfg.pairs);
  for (unsigned i = 0; i < cfg.pairs; ++i) {
    std::size_t m = 2 + static_cast<std::size_t>(rng.below(cfg.max_len - 1));
    ProbVector p(random_unit_vector(rng, m, cfg.max_den));
    ProbVector p_prime(random_pinched(rng, p.entries(), 1 + static_cast<unsigned>(rng.below(3))));
    pairs.emplace_back(std::move(p), std::move(p_prime));
  }
  std::vector<LabeledFunction> battery =
      cfg.functions.empty() ? standard_battery(cfg.max_den, cfg.seed) : cfg.functions;
  struct Case {
    unsigned n;
    std::size_t pair_index;
    std::size_t f_index;
  };
  std::vector<Case> cases;
  for (unsigned n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      for (std::size_t fi = 0; fi < battery.size(); ++fi) cases.push_back({n, pi, fi});
    }
  }
  return run_cases(
      cases.size(),
      [&](std::size_t i) {
        const Case& c = cases[i];
        return std::vector<InequalityMargin>{hlp_sum(c.n, pairs[c.pair_index].first,
                                                     pairs[c.pair_index].second,
                                                     battery[c.f_index])};
      },
      cfg.exec, cfg.collect_rows);
}

}  // namespace rasacx
