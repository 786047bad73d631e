#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "qform/io.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(QFORM_TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline qform::ResolutionGraph load_rg(const std::string& name) {
  return qform::parse_resolution(slurp(name), name);
}

inline qform::NTGraph load_nt(const std::string& name) {
  return qform::parse_ntgraph(slurp(name), name);
}

}  // namespace testutil
