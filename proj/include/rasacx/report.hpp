#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "rasacx/inequalities.hpp"

namespace rasacx {

// Deterministic sweep outcome. rows are sorted by (inequality_id, point
// lexicographically, f_id); in failures_only mode only violating rows are
// kept but total/failures still count every evaluated instance.
struct Report {
  std::vector<InequalityMargin> rows;
  std::size_t total = 0;
  std::size_t failures = 0;
  bool failures_only = false;
};

bool row_key_less(const InequalityMargin& a, const InequalityMargin& b);
void sort_rows(std::vector<InequalityMargin>& rows);

nlohmann::ordered_json to_json(const Report& r);
std::string to_csv(const Report& r);

}  // namespace rasacx
