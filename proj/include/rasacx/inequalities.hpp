#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rasacx/bernstein.hpp"
#include "rasacx/convex_function.hpp"
#include "rasacx/convex_order.hpp"
#include "rasacx/majorization.hpp"
#include "rasacx/rational.hpp"

namespace rasacx {

using Params = std::vector<std::pair<std::string, std::string>>;

// One verified inequality instance: lhs <= rhs is the claim, margin is
// rhs - lhs, holds() iff the margin is nonnegative. A failing record is the
// full counterexample witness: inputs, function id and both sides.
struct InequalityMargin {
  std::string inequality_id;
  std::vector<Rational> point;  // canonical sort key within an id
  Params params;
  std::string f_id;
  Rational lhs;
  Rational rhs;
  Rational margin;
  bool holds() const { return margin.sign() >= 0; }
};

// Values along a chain expected to be nondecreasing; stages() yields one
// InequalityMargin per adjacent pair for reporting.
struct ChainValues {
  std::string chain_id;
  std::vector<Rational> point;
  Params params;
  std::string f_id;
  std::vector<Rational> values;

  bool nondecreasing() const;
  std::vector<InequalityMargin> stages() const;
};

// Convexity inequality for the two-sample Bernstein mixture: the law of
// (S_x + S_y) / 2n is dominated in the convex order by the even mixture of
// the one-sample laws. Margin is E_mix f - E_cross f.
InequalityMargin rasa_original(unsigned n, const Rational& x, const Rational& y,
                               const LabeledFunction& f);

// Distribution-level statements behind rasa_original, decided exactly with
// S_p ~ Binomial(2n, p) scaled by 1/2n and mid = (x + y) / 2:
// concentration: law((S_x' + S_y') / 2n) <=_cx law(S_mid) for independent
// n-sample halves S_x', S_y'.
CxVerdict prop_concentration(unsigned n, const Rational& x, const Rational& y);
// mixture: law(S_mid) <=_cx even mixture of law(S_x) and law(S_y).
CxVerdict prop_mixture(unsigned n, const Rational& x, const Rational& y);

// The three split forms, returned in this order:
//   split-jensen:    2 (B_2n f)(mid)     <= (B_2n f)(x) + (B_2n f)(y)
//   split-midpoint:  E_cross f           <= (B_2n f)(mid)
//   split-combined:  2 E_cross f         <= (B_2n f)(x) + (B_2n f)(y)
std::vector<InequalityMargin> split_inequalities(unsigned n, const Rational& x, const Rational& y,
                                                 const LabeledFunction& f);

// k-sample generalizations, m = sum ns, xbar = weighted mean of xs:
//   general-concentration: tensor value      <= (B_m f)(xbar)
//   general-jensen:        (B_m f)(xbar)     <= sum (n_i / m)(B_m f)(x_i)
//   general-combined:      tensor value      <= weighted side, distribution route
//   general-expanded:      tensor value      <= weighted side, basis double sum
// The last two are the same inequality through two routes; their margins
// must coincide exactly.
std::vector<InequalityMargin> generalized_inequalities(const std::vector<unsigned>& ns,
                                                       const std::vector<Rational>& xs,
                                                       const LabeledFunction& f);

// Majorization consequence: when p majorizes p_prime (order_error otherwise),
// sum_i (B_n f)(p_prime_i) <= sum_i (B_n f)(p_i).
InequalityMargin hlp_sum(unsigned n, const ProbVector& p, const ProbVector& p_prime,
                         const LabeledFunction& f);

// Coarsening chain: stage j merges the first j samples into one
// Binomial(n_1 + ... + n_j, xtilde_j) factor; values are E f over each stage's
// scaled law and must be nondecreasing. Requires k >= 2.
ChainValues chain_coarsening(const std::vector<unsigned>& ns, const std::vector<Rational>& xs,
                             const LabeledFunction& f);

// Jensen chain: stage j replaces the first j summands of the weighted side by
// their merged term (ntilde_j / m)(B_m f)(xtilde_j); reported from the fully
// merged value up to the full weighted sum, again nondecreasing. k >= 2.
ChainValues chain_jensen(const std::vector<unsigned>& ns, const std::vector<Rational>& xs,
                         const LabeledFunction& f);

}  // namespace rasacx
