#pragma once

#include <sstream>
#include <string>

#include "ktype/rootdata.hpp"

namespace test {

inline ktype::RealGroupData group(const std::string& name) {
  return ktype::load_group_data_file(std::string(KTYPE_SOURCE_DATA_DIR) + "/" + name + ".json");
}

inline std::string test_file(const std::string& name) { return std::string(KTYPE_TEST_DATA_DIR) + "/" + name; }

inline ktype::RealGroupData parse(const std::string& text, ktype::CheckLog* log = nullptr) {
  std::istringstream in(text);
  return ktype::load_group_data(in, log);
}

inline ktype::Weight t(std::initializer_list<ktype::Coord> c) { return ktype::Weight(ktype::Lattice::t, c); }
inline ktype::Weight tm(std::initializer_list<ktype::Coord> c) { return ktype::Weight(ktype::Lattice::tM, c); }

// Message of the GroupDataError thrown by f, or "" if nothing is thrown.
template <class F>
std::string group_error(F&& f) {
  try {
    f();
  } catch (const ktype::GroupDataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace test
