#include "rasacx/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace rasacx {

namespace {

Rational rational_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) {
    throw std::invalid_argument(where + ": expected a rational as a string like \"3/4\"");
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

std::vector<Rational> rational_array(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_at(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

ordered_json to_json(const DiscreteDistribution& d) {
  ordered_json atoms = ordered_json::array();
  for (const auto& a : d.atoms()) atoms.push_back({a.point.str(), a.mass.str()});
  return ordered_json{{"atoms", std::move(atoms)}};
}

DiscreteDistribution distribution_from_json(const nlohmann::json& j) {
  const nlohmann::json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw std::invalid_argument("atoms: expected an array");
  std::vector<DiscreteDistribution::Atom> list;
  list.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "]";
    if (!atoms[i].is_array() || atoms[i].size() != 2) {
      throw std::invalid_argument(where + ": expected [\"point\", \"mass\"]");
    }
    list.push_back({rational_at(atoms[i][0], where + ".point"),
                    rational_at(atoms[i][1], where + ".mass")});
  }
  return DiscreteDistribution::from_atoms(std::move(list));
}

ordered_json to_json(const ProbVector& v) {
  ordered_json entries = ordered_json::array();
  for (const Rational& p : v.entries()) entries.push_back(p.str());
  return ordered_json{{"entries", std::move(entries)}};
}

ProbVector prob_vector_from_json(const nlohmann::json& j) {
  return ProbVector(rational_array(field(j, "entries"), "entries"));
}

ordered_json to_json(const ConvexTestFunction& f) {
  ordered_json j;
  switch (f.kind()) {
    case ConvexTestFunction::Kind::hinge:
      j["kind"] = "hinge";
      j["t"] = f.center().str();
      break;
    case ConvexTestFunction::Kind::abs_dev:
      j["kind"] = "abs";
      j["t"] = f.center().str();
      break;
    case ConvexTestFunction::Kind::piecewise_linear: {
      j["kind"] = "pwl";
      ordered_json bps = ordered_json::array(), vals = ordered_json::array();
      for (const Rational& b : f.breakpoints()) bps.push_back(b.str());
      for (const Rational& v : f.values()) vals.push_back(v.str());
      j["breakpoints"] = std::move(bps);
      j["values"] = std::move(vals);
      return j;  // domain is implied by the breakpoints
    }
    case ConvexTestFunction::Kind::polynomial: {
      j["kind"] = "poly";
      ordered_json coeffs = ordered_json::array();
      for (const Rational& c : f.coefficients()) coeffs.push_back(c.str());
      j["coefficients"] = std::move(coeffs);
      break;
    }
  }
  j["domain"] = {f.domain().lo.str(), f.domain().hi.str()};
  return j;
}

ConvexTestFunction function_from_json(const nlohmann::json& j) {
  const nlohmann::json& kind = field(j, "kind");
  if (!kind.is_string()) throw std::invalid_argument("kind: expected a string");
  const std::string k = kind.get<std::string>();
  Interval domain = Interval::unit();
  if (auto it = j.find("domain"); it != j.end()) {
    if (!it->is_array() || it->size() != 2) {
      throw std::invalid_argument("domain: expected [\"lo\", \"hi\"]");
    }
    domain = {rational_at((*it)[0], "domain.lo"), rational_at((*it)[1], "domain.hi")};
    if (domain.hi < domain.lo) throw std::invalid_argument("domain: lo exceeds hi");
  }
  if (k == "hinge") return ConvexTestFunction::hinge(rational_at(field(j, "t"), "t"), domain);
  if (k == "abs") return ConvexTestFunction::abs_dev(rational_at(field(j, "t"), "t"), domain);
  if (k == "pwl") {
    return ConvexTestFunction::piecewise_linear(
        rational_array(field(j, "breakpoints"), "breakpoints"),
        rational_array(field(j, "values"), "values"));
  }
  if (k == "poly") {
    return ConvexTestFunction::polynomial(
        rational_array(field(j, "coefficients"), "coefficients"), domain);
  }
  if (k == "square") return ConvexTestFunction::square(domain);
  throw std::invalid_argument("kind: unknown function kind \"" + k + "\"");
}

ordered_json to_json(const CxVerdict& v) {
  ordered_json j{{"dominated", v.dominated}, {"reason", v.reason}};
  if (v.witness) {
    j["witness"] = {{"t", v.witness->t.str()},
                    {"lhs", v.witness->lhs.str()},
                    {"rhs", v.witness->rhs.str()}};
  }
  return j;
}

ordered_json to_json(const std::vector<PinchStep>& steps) {
  ordered_json arr = ordered_json::array();
  for (const PinchStep& st : steps) {
    arr.push_back({{"s", st.s},
                   {"t", st.t},
                   {"delta", st.delta.str()},
                   {"before", {st.before.first.str(), st.before.second.str()}},
                   {"after", {st.after.first.str(), st.after.second.str()}}});
  }
  return ordered_json{{"steps", std::move(arr)}};
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace rasacx
