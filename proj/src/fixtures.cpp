#include "qbw/fixtures.hpp"

#include <cstdlib>

#ifndef QBW_DEFAULT_FIXTURE_DIR
#define QBW_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace qbw {

std::string fixture_dir() {
  if (const char* env = std::getenv("QBW_FIXTURE_DIR")) return env;
  return QBW_DEFAULT_FIXTURE_DIR;
}

std::string fixture_path(const std::string& name) {
  return fixture_dir() + "/" + name;
}

} // namespace qbw
