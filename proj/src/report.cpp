#include "qbw/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qbw {

long long DesignReport::param(const std::string& name) const {
  for (std::size_t i = 0; i < param_names.size(); ++i)
    if (param_names[i] == name) return params[i];
  throw std::out_of_range("report has no parameter " + name);
}

DesignReport& DesignReport::with_param(const std::string& name, long long value) {
  param_names.push_back(name);
  params.push_back(value);
  return *this;
}

DesignReport& DesignReport::fail_at(int i, int j) {
  pass = false;
  if (!witness) witness = {i, j};
  return *this;
}

std::string DesignReport::summary() const {
  std::ostringstream os;
  os << kind << (pass ? " PASS" : " FAIL");
  if (!params.empty()) {
    os << " (";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) os << ", ";
      os << param_names[i] << '=' << params[i];
    }
    os << ')';
  }
  if (!value_set.empty()) {
    os << " values {";
    for (std::size_t i = 0; i < value_set.size(); ++i) {
      if (i) os << ", ";
      os << value_set[i];
    }
    os << '}';
  }
  if (witness) os << " witness (" << witness->first << ", " << witness->second << ")";
  for (const std::string& n : notes) os << " [" << n << ']';
  return os.str();
}

} // namespace qbw
