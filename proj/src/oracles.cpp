#include "ktype/oracles.hpp"

#include <set>
#include <stdexcept>

namespace ktype {

SL2Series::SL2Series(SL2Kind k, int n_) : kind(k), n(n_) {
  const bool discrete = k == SL2Kind::discrete_plus || k == SL2Kind::discrete_minus;
  if (discrete && n < 1) throw std::invalid_argument("discrete series of SL(2,R) need n >= 1");
  if (!discrete && n != 0) throw std::invalid_argument("only discrete series carry a parameter n");
}

std::string to_string(const SL2Series& s) {
  switch (s.kind) {
    case SL2Kind::discrete_plus: return "D_" + std::to_string(s.n) + "^+";
    case SL2Kind::discrete_minus: return "D_" + std::to_string(s.n) + "^-";
    case SL2Kind::limit_plus: return "D_0^+";
    case SL2Kind::limit_minus: return "D_0^-";
    case SL2Kind::principal_spherical: return "P^+";
    case SL2Kind::principal_nonspherical: return "P^-";
  }
  return "?";
}

KTypeTable sl2_branching(const SL2Series& s, Coord window) {
  if (window < 0) throw std::invalid_argument("negative window");
  KTypeTable t;
  t.window = window;
  auto put = [&](Coord k) {
    if (k >= -window && k <= window) t.entries[Weight(Lattice::t, {k})] = 1;
  };
  switch (s.kind) {
    case SL2Kind::discrete_plus:
      // n+1, n+3, ...
      for (Coord k = s.n + 1; k <= window; k += 2) put(k);
      t.sign = -1;
      break;
    case SL2Kind::discrete_minus:
      for (Coord k = s.n + 1; k <= window; k += 2) put(-k);
      t.sign = -1;
      break;
    case SL2Kind::limit_plus:
      for (Coord k = 1; k <= window; k += 2) put(k);
      t.sign = -1;
      break;
    case SL2Kind::limit_minus:
      for (Coord k = 1; k <= window; k += 2) put(-k);
      t.sign = -1;
      break;
    case SL2Kind::principal_spherical:
      for (Coord k = -window; k <= window; ++k)
        if (k % 2 == 0) put(k);
      t.sign = 1;
      break;
    case SL2Kind::principal_nonspherical:
      for (Coord k = -window; k <= window; ++k)
        if (k % 2 != 0) put(k);
      t.sign = 1;
      break;
  }
  return t;
}

OracleReport oracle_match(const KTypeTable& table, const SL2Series& s) {
  return oracle_match(table, sl2_branching(s, table.window));
}

OracleReport oracle_match(const KTypeTable& table, const KTypeTable& expected) {
  if (expected.window != table.window) throw std::invalid_argument("window mismatch");
  OracleReport r;
  r.expected_sign = expected.sign;
  r.actual_sign = table.sign;
  std::set<Weight> keys;
  for (const auto& [k, v] : expected.entries) keys.insert(k);
  for (const auto& [k, v] : table.entries) keys.insert(k);
  for (const auto& k : keys) {
    Integer e = expected.at(k), a = table.at(k);
    if (e != a) r.diffs.push_back({k, e, a});
  }
  return r;
}

}  // namespace ktype
