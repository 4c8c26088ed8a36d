#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rasacx/battery.hpp"
#include "rasacx/convex_order.hpp"
#include "rasacx/inequalities.hpp"
#include "rasacx/json_io.hpp"
#include "rasacx/majorization.hpp"
#include "rasacx/report.hpp"
#include "rasacx/sweep.hpp"

namespace {

using namespace rasacx;

struct CommonOpts {
  std::string n_range = "1..5";
  unsigned grid_denominator = 8;
  std::string ns_text = "1,1,2;1,2,3";
  std::string xs_text;
  std::string f_spec = "battery";
  std::uint64_t seed = 0;
  unsigned trials = 1000;
  unsigned pairs = 100;
  int threads = 0;
  bool serial = false;
  std::string out_path;
  std::string format = "json";
};

std::pair<unsigned, unsigned> parse_n_range(const std::string& text) {
  auto dots = text.find("..");
  unsigned lo, hi;
  if (dots == std::string::npos) {
    lo = hi = static_cast<unsigned>(std::stoul(text));
  } else {
    lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
  }
  if (lo < 1 || hi < lo) throw std::invalid_argument("--n wants N or LO..HI with 1 <= LO <= HI");
  return {lo, hi};
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

std::vector<std::vector<unsigned>> parse_ns_list(const std::string& text) {
  std::vector<std::vector<unsigned>> out;
  for (const std::string& tuple : split_on(text, ';')) {
    std::vector<unsigned> ns;
    for (const std::string& part : split_on(tuple, ',')) {
      ns.push_back(static_cast<unsigned>(std::stoul(part)));
    }
    out.push_back(std::move(ns));
  }
  return out;
}

std::vector<Rational> parse_xs(const std::string& text) {
  std::vector<Rational> xs;
  for (const std::string& part : split_on(text, ',')) xs.push_back(Rational::parse(part));
  return xs;
}

// --f battery keeps the standard battery; otherwise one function is used:
// hinge:t, abs:t, square, or a path to a JSON function file.
std::vector<LabeledFunction> parse_functions(const std::string& spec) {
  if (spec == "battery") return {};
  if (spec == "square") return {{"square", ConvexTestFunction::square()}};
  if (spec.rfind("hinge:", 0) == 0) {
    Rational t = Rational::parse(spec.substr(6));
    return {{"hinge:" + t.str(), ConvexTestFunction::hinge(t)}};
  }
  if (spec.rfind("abs:", 0) == 0) {
    Rational t = Rational::parse(spec.substr(4));
    return {{"abs:" + t.str(), ConvexTestFunction::abs_dev(t)}};
  }
  return {{"file:" + spec, function_from_json(load_json_file(spec))}};
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
  out << text;
}

int emit_report(const Report& report, const CommonOpts& opts) {
  std::string text = opts.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
  write_output(text, opts.out_path);
  if (report.failures > 0) {
    std::cerr << report.failures << " of " << report.total << " instances failed\n";
    return 1;
  }
  return 0;
}

ExecOptions exec_options(const CommonOpts& opts) {
  return {opts.serial ? ExecMode::serial : ExecMode::openmp, opts.threads};
}

int run_verify(const std::string& which, const CommonOpts& opts) {
  if (opts.format != "json" && opts.format != "csv") {
    throw std::invalid_argument("--format wants json or csv");
  }
  if (which == "rasa" || which == "split") {
    auto [lo, hi] = parse_n_range(opts.n_range);
    RasaSweepConfig cfg;
    cfg.n_lo = lo;
    cfg.n_hi = hi;
    cfg.grid_denominator = opts.grid_denominator;
    cfg.seed = opts.seed;
    cfg.functions = parse_functions(opts.f_spec);
    cfg.exec = exec_options(opts);
    return emit_report(which == "rasa" ? rasa_sweep(cfg) : split_sweep(cfg), opts);
  }
  if (which == "general" || which == "chains") {
    GeneralSweepConfig cfg;
    cfg.ns_list = parse_ns_list(opts.ns_text);
    cfg.grid_denominator = opts.grid_denominator;
    cfg.seed = opts.seed;
    cfg.functions = parse_functions(opts.f_spec);
    if (!opts.xs_text.empty()) {
      for (const std::string& tuple : split_on(opts.xs_text, ';')) {
        cfg.xs_list.push_back(parse_xs(tuple));
      }
    }
    cfg.exec = exec_options(opts);
    return emit_report(which == "general" ? general_sweep(cfg) : chains_sweep(cfg), opts);
  }
  auto [lo, hi] = parse_n_range(opts.n_range);
  HlpSweepConfig cfg;
  cfg.n_lo = lo;
  cfg.n_hi = hi;
  cfg.pairs = opts.pairs;
  cfg.max_den = opts.grid_denominator;
  cfg.seed = opts.seed;
  cfg.functions = parse_functions(opts.f_spec);
  cfg.exec = exec_options(opts);
  return emit_report(hlp_sweep(cfg), opts);
}

int run_check_cx(const std::string& file_a, const std::string& file_b, const CommonOpts& opts) {
  DiscreteDistribution a = distribution_from_json(load_json_file(file_a));
  DiscreteDistribution b = distribution_from_json(load_json_file(file_b));
  CxVerdict verdict = is_cx_dominated(a, b);
  ordered_json out = to_json(verdict);
  if (opts.trials > 0) {
    auto f = cx_falsify_random(a, b, opts.seed, opts.trials);
    ordered_json fj{{"trials", opts.trials}, {"found", f.has_value()}};
    if (f) fj["f"] = to_json(*f);
    // A found counterexample against a positive decision would be a bug; a
    // negative decision with nothing found is fine, the oracle is one-sided.
    fj["consistent_with_decision"] = !(verdict.dominated && f.has_value());
    out["falsifier"] = std::move(fj);
  }
  write_output(out.dump(2) + "\n", opts.out_path);
  return verdict.dominated ? 0 : 1;
}

int run_majorize(const std::string& file_q, const std::string& file_p) {
  ProbVector q = prob_vector_from_json(load_json_file(file_q));
  ProbVector p = prob_vector_from_json(load_json_file(file_p));
  bool result = majorizes(q, p);
  ordered_json out{{"majorizes", result}};
  std::cout << out.dump(2) << "\n";
  return result ? 0 : 1;
}

int run_sigma(const std::string& file_p, const std::string& file_pp) {
  ProbVector p = prob_vector_from_json(load_json_file(file_p));
  ProbVector pp = prob_vector_from_json(load_json_file(file_pp));
  bool result = sigma_criterion(p, pp);
  ordered_json out{{"sigma_criterion", result}};
  std::cout << out.dump(2) << "\n";
  return result ? 0 : 1;
}

int run_pinch(const std::string& file_p, const std::string& file_pp, const CommonOpts& opts) {
  ProbVector p = prob_vector_from_json(load_json_file(file_p));
  ProbVector pp = prob_vector_from_json(load_json_file(file_pp));
  std::vector<PinchStep> steps = pinch_chain(p, pp);
  write_output(to_json(steps).dump(2) + "\n", opts.out_path);
  return 0;
}

std::string atoms_text(const DiscreteDistribution& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& a = d.atoms()[i];
    s += (i ? ", " : "") + a.point.str() + ": " + a.mass.str();
  }
  return s + "}";
}

int run_examples() {
  ProbVector p1({Rational(3, 4), Rational(3, 4), Rational(0)});
  ProbVector p1p({Rational(5, 6), Rational(1, 2), Rational(1, 6)});
  DiscreteDistribution mu1 = bernoulli_convolution(p1);
  DiscreteDistribution nu1 = bernoulli_convolution(p1p);
  std::cout << "example 1: convex domination without majorization\n"
            << "  p  = (3/4, 3/4, 0)    p' = (5/6, 1/2, 1/6)\n"
            << "  law(p)  = " << atoms_text(mu1) << "\n"
            << "  law(p') = " << atoms_text(nu1) << "\n"
            << "  majorizes(p, p') = " << (majorizes(p1, p1p) ? "true" : "false") << "\n"
            << "  is_cx_dominated(law(p), law(p')) = " << is_cx_dominated(mu1, nu1).reason
            << "\n";

  ProbVector p2({Rational(1), Rational(1, 2), Rational(1, 2), Rational(0)});
  ProbVector p2p({Rational(5, 6), Rational(5, 6), Rational(1, 6), Rational(1, 6)});
  DiscreteDistribution mu2 = bernoulli_convolution(p2);
  DiscreteDistribution nu2 = bernoulli_convolution(p2p);
  ConvexTestFunction f = ConvexTestFunction::abs_dev(Rational(2), {Rational(0), Rational(4)});
  CxVerdict v2 = is_cx_dominated(mu2, nu2);
  std::cout << "example 2: higher dispersion without convex domination\n"
            << "  p  = (1, 1/2, 1/2, 0)    p' = (5/6, 5/6, 1/6, 1/6)\n"
            << "  law(p)  = " << atoms_text(mu2) << "\n"
            << "  law(p') = " << atoms_text(nu2) << "\n"
            << "  both means 2; squared deviations " << p2.sum_squared_deviation().str() << " > "
            << p2p.sum_squared_deviation().str() << "\n"
            << "  E|X-2| = " << mu2.expect(f).str() << " over law(p), " << nu2.expect(f).str()
            << " over law(p')\n"
            << "  is_cx_dominated(law(p), law(p')) = " << v2.reason;
  if (v2.witness) {
    std::cout << " at t = " << v2.witness->t.str() << " (" << v2.witness->lhs.str() << " > "
              << v2.witness->rhs.str() << ")";
  }
  std::cout << "\n  sigma_criterion(p, p') = " << (sigma_criterion(p2, p2p) ? "true" : "false")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for Bernstein convex-order inequalities"};
  app.require_subcommand(1);
  CommonOpts opts;

  auto add_common = [&](CLI::App* cmd, bool with_grid = true) {
    if (with_grid) {
      cmd->add_option("--grid-denominator", opts.grid_denominator,
                      "denominator d of the grid {0, 1/d, ..., 1}");
    }
    cmd->add_option("--seed", opts.seed, "seed for battery and generated cases");
    cmd->add_option("--threads", opts.threads, "OpenMP thread count (0 = default)");
    cmd->add_flag("--serial", opts.serial, "use the serial reference path");
    cmd->add_option("--out", opts.out_path, "write the report to this file");
    cmd->add_option("--format", opts.format, "json or csv");
  };

  CLI::App* verify = app.add_subcommand("verify", "sweep a family of inequalities");
  verify->require_subcommand(1);
  const char* families[] = {"rasa", "split", "general", "chains", "hlp"};
  const char* blurbs[] = {"two-sample mixture bound", "the three split forms",
                          "k-sample generalizations", "coarsening and Jensen chains",
                          "majorization sum bound"};
  for (int i = 0; i < 5; ++i) {
    CLI::App* fam = verify->add_subcommand(families[i], blurbs[i]);
    add_common(fam);
    fam->add_option("--f", opts.f_spec, "battery | hinge:t | abs:t | square | function file");
    if (i == 0 || i == 1 || i == 4) fam->add_option("--n", opts.n_range, "N or LO..HI");
    if (i == 2 || i == 3) {
      fam->add_option("--ns", opts.ns_text, "sample counts, e.g. 1,2,3;2,2");
      fam->add_option("--xs", opts.xs_text, "evaluate these points instead of the grid");
    }
    if (i == 4) fam->add_option("--pairs", opts.pairs, "majorizing pairs per n");
  }

  CLI::App* check = app.add_subcommand("check", "decide one relation");
  check->require_subcommand(1);
  CLI::App* cx = check->add_subcommand("cx", "convex order between two distribution files");
  std::string file_a, file_b, file_p, file_q;
  cx->add_option("a", file_a, "left distribution JSON")->required();
  cx->add_option("b", file_b, "right distribution JSON")->required();
  cx->add_option("--trials", opts.trials, "falsifier trials (0 disables)");
  add_common(cx, false);

  CLI::App* maj = app.add_subcommand("majorize", "does the first vector majorize the second?");
  maj->add_option("q", file_q, "candidate dominating vector JSON")->required();
  maj->add_option("p", file_p, "candidate dominated vector JSON")->required();

  CLI::App* sig = app.add_subcommand("sigma", "symmetric-function criterion for two vectors");
  sig->add_option("p", file_p, "first vector JSON")->required();
  sig->add_option("q", file_q, "second vector JSON")->required();

  CLI::App* pinch = app.add_subcommand("pinch", "transfer chain from the first vector to the second");
  pinch->add_option("p", file_p, "majorizing vector JSON")->required();
  pinch->add_option("q", file_q, "majorized vector JSON")->required();
  pinch->add_option("--out", opts.out_path, "write the chain to this file");

  CLI::App* examples = app.add_subcommand("examples", "print the two built-in counterexamples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (int i = 0; i < 5; ++i) {
      if (verify->get_subcommand(families[i])->parsed()) return run_verify(families[i], opts);
    }
    if (cx->parsed()) return run_check_cx(file_a, file_b, opts);
    if (maj->parsed()) return run_majorize(file_q, file_p);
    if (sig->parsed()) return run_sigma(file_p, file_q);
    if (pinch->parsed()) return run_pinch(file_p, file_q, opts);
    if (examples->parsed()) return run_examples();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
