#pragma once

#include <string>

#include "ruledmmp/io.hpp"

#ifndef RULEDMMP_SOURCE_DIR
#error "RULEDMMP_SOURCE_DIR must point at the repository root"
#endif

namespace testsupport {

inline std::string repo_path(const std::string& rel) {
  return std::string(RULEDMMP_SOURCE_DIR) + "/" + rel;
}

inline ruledmmp::SurfacePair load_fixture(char letter) {
  return ruledmmp::parse_instance(
      ruledmmp::read_file(repo_path(std::string("fixtures/fix_") + letter + ".json")));
}

}  // namespace testsupport
