#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rasacx/report.hpp"

namespace rasacx {

enum class ExecMode { serial, openmp };

struct ExecOptions {
  ExecMode mode = ExecMode::openmp;
  int threads = 0;  // 0 keeps the OpenMP default
};

// Runs body(0..count-1); the OpenMP path distributes indices over threads,
// the serial path is the reference implementation. Writers must only touch
// state owned by their index. First exception, if any, is rethrown.
void for_each_index(std::size_t count, const ExecOptions& exec,
                    const std::function<void(std::size_t)>& body);

// Evaluates `count` independent cases, each producing a handful of rows, and
// assembles a Report whose content and order do not depend on the execution
// mode or thread count: results land in per-case slots and are sorted by the
// canonical row key afterwards. With collect_rows false only failing rows are
// retained (counts still cover everything).
Report run_cases(std::size_t count,
                 const std::function<std::vector<InequalityMargin>(std::size_t)>& eval,
                 const ExecOptions& exec, bool collect_rows = true);

struct RasaSweepConfig {
  unsigned n_lo = 1;
  unsigned n_hi = 5;
  unsigned grid_denominator = 8;
  std::uint64_t seed = 0;
  std::vector<LabeledFunction> functions;  // empty: standard battery per n
  ExecOptions exec;
  bool collect_rows = true;
};

// rasa_original over n in [n_lo, n_hi], x, y on the grid, full battery.
Report rasa_sweep(const RasaSweepConfig& cfg);

// The three split forms over the same case set.
Report split_sweep(const RasaSweepConfig& cfg);

struct GeneralSweepConfig {
  std::vector<std::vector<unsigned>> ns_list;
  unsigned grid_denominator = 4;
  std::uint64_t seed = 0;
  std::vector<LabeledFunction> functions;  // empty: standard battery per tuple
  std::vector<std::vector<Rational>> xs_list;  // nonempty: these points, no grid
  ExecOptions exec;
  bool collect_rows = true;
};

// The four generalized forms over every ns in ns_list and every tuple of
// grid points xs.
Report general_sweep(const GeneralSweepConfig& cfg);

// Both chains over the same case set; each chain contributes one row per
// adjacent stage pair.
Report chains_sweep(const GeneralSweepConfig& cfg);

struct HlpSweepConfig {
  unsigned n_lo = 1;
  unsigned n_hi = 3;
  unsigned pairs = 100;
  unsigned max_len = 5;
  unsigned max_den = 8;
  std::uint64_t seed = 0;
  std::vector<LabeledFunction> functions;  // empty: standard battery
  ExecOptions exec;
  bool collect_rows = true;
};

// hlp_sum over seeded majorizing pairs (random vector pinched into a
// dominated partner) for each n, full battery on the grid of denominator
// max_den.
Report hlp_sweep(const HlpSweepConfig& cfg);

}  // namespace rasacx
