#pragma once

#include <string>

namespace qbw {

// Fixture directory resolution: the QBW_FIXTURE_DIR environment variable
// overrides the compiled-in default (the source tree's fixtures/).
std::string fixture_dir();
std::string fixture_path(const std::string& name);

} // namespace qbw
