#include "rasacx/report.hpp"

#include <algorithm>

namespace rasacx {

bool row_key_less(const InequalityMargin& a, const InequalityMargin& b) {
  if (a.inequality_id != b.inequality_id) return a.inequality_id < b.inequality_id;
  if (a.point != b.point) {
    return std::lexicographical_compare(a.point.begin(), a.point.end(), b.point.begin(),
                                        b.point.end());
  }
  return a.f_id < b.f_id;
}

void sort_rows(std::vector<InequalityMargin>& rows) {
  std::stable_sort(rows.begin(), rows.end(), row_key_less);
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const InequalityMargin& row : r.rows) {
    nlohmann::ordered_json params;
    for (const auto& [k, v] : row.params) params[k] = v;
    records.push_back({{"inequality_id", row.inequality_id},
                       {"params", std::move(params)},
                       {"f", row.f_id},
                       {"lhs", row.lhs.str()},
                       {"rhs", row.rhs.str()},
                       {"margin", row.margin.str()},
                       {"holds", row.holds()}});
  }
  return nlohmann::ordered_json{
      {"records", std::move(records)},
      {"summary",
       {{"total", r.total}, {"failures", r.failures}, {"failures_only", r.failures_only}}}};
}

std::string to_csv(const Report& r) {
  std::string out = "inequality_id,params,f,lhs,rhs,margin,holds\n";
  for (const InequalityMargin& row : r.rows) {
    std::string params;
    for (std::size_t i = 0; i < row.params.size(); ++i) {
      params += (i ? ";" : "") + row.params[i].first + "=" + row.params[i].second;
    }
    out += row.inequality_id + ",\"" + params + "\"," + row.f_id + "," + row.lhs.str() + "," +
           row.rhs.str() + "," + row.margin.str() + "," + (row.holds() ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace rasacx
