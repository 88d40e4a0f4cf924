#pragma once

// Verification suites behind `ktype-cli verify`: each check records what was
// expected and what the engine produced.

#include <string>

#include "json.hpp"
#include "ktype/diracnum.hpp"
#include "ktype/rootdata.hpp"

namespace ktype {

/// Directory of shipped group data: $KTYPE_DATA_DIR if set, else the build-time default.
std::string data_dir();

/// A builtin name ("sl2r-compact") resolves inside the data directory; anything
/// containing a path separator or ending in .json is taken as a path.
std::string group_path(const std::string& name_or_path, const std::string& dir = data_dir());

RealGroupData load_group(const std::string& name_or_path, const std::string& dir = data_dir());

struct VerifyConfig {
  std::string data_dir = ktype::data_dir();
  GridSpec grid{};
  double svd_tol = 1e-6;
};

/// Suite names: sl2, su21, dirac, ring. Returns {"suite", "pass", "checks": [...]}.
nlohmann::json run_verify_suite(const std::string& suite, const VerifyConfig& cfg);

}  // namespace ktype
