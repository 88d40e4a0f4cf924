#pragma once

// Closed-form K-type decompositions of the tempered representations of
// SL(2,R), written down from the classical branching laws and kept
// independent of the engine. K = SO(2) weights are rank-1 weights of t.

#include <string>
#include <vector>

#include "ktype/ktype_table.hpp"

namespace ktype {

enum class SL2Kind {
  discrete_plus,
  discrete_minus,
  limit_plus,
  limit_minus,
  principal_spherical,
  principal_nonspherical,
};

struct SL2Series {
  SL2Kind kind;
  int n = 0;  // Harish-Chandra parameter, discrete kinds only

  /// Throws std::invalid_argument unless n >= 1 exactly for the discrete kinds.
  SL2Series(SL2Kind kind, int n = 0);
};

std::string to_string(const SL2Series& s);

KTypeTable sl2_branching(const SL2Series& s, Coord window);

struct OracleDiffEntry {
  Weight ktype;
  Integer expected;
  Integer actual;
};

struct OracleReport {
  std::vector<OracleDiffEntry> diffs;
  int expected_sign = 1;
  int actual_sign = 1;

  bool passed() const { return diffs.empty() && expected_sign == actual_sign; }
};

/// Per-K-type comparison; throws std::invalid_argument when the windows differ.
OracleReport oracle_match(const KTypeTable& table, const KTypeTable& expected);
/// Compares against sl2_branching(s, table.window).
OracleReport oracle_match(const KTypeTable& table, const SL2Series& s);

}  // namespace ktype
