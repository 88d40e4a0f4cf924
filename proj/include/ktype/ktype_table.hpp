#pragma once

#include <map>

#include "ktype/charring.hpp"

namespace ktype {

/// K-type multiplicities of pi|_K inside a max-norm window. K-types in the
/// window that are absent have multiplicity 0. `sign` is the factor relating
/// the table to the equivariant index.
struct KTypeTable {
  std::map<Weight, Integer> entries;
  Coord window = 0;
  int sign = 1;

  Integer at(const Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? Integer(0) : it->second;
  }
  bool operator==(const KTypeTable&) const = default;
};

}  // namespace ktype
