#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qbw {

// Tagged verification result. `params` carries the recovered parameter tuple
// in the class's conventional order (named by `param_names`); `witness`
// points at the first offending position on failure.
struct DesignReport {
  std::string kind;
  bool pass = false;
  std::vector<std::string> param_names;
  std::vector<long long> params;
  std::vector<long long> value_set; // e.g. off-diagonal product values
  std::optional<std::pair<int, int>> witness;
  std::vector<std::string> notes;

  long long param(const std::string& name) const;
  DesignReport& with_param(const std::string& name, long long value);
  DesignReport& fail_at(int i, int j);
  std::string summary() const;
};

} // namespace qbw
