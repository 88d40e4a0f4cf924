#include "ktype/ktypes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ktype {

KType make_ktype(const RealGroupData& g, Weight highest) {
  if (highest.lattice() != Lattice::t || highest.rank() != g.k.rank())
    throw LatticeError("K-type highest weight must be a weight of t");
  if (!validate_dominant(g.k, highest)) {
    std::ostringstream os;
    os << "weight " << highest << " is not dominant for K";
    throw std::invalid_argument(os.str());
  }
  return KType{std::move(highest)};
}

std::vector<KType> enumerate_ktypes(const RealGroupData& g, Coord norm_cutoff) {
  std::vector<KType> out;
  if (norm_cutoff < 0) return out;
  const std::size_t n = g.k.rank();
  std::vector<Coord> c(n, -norm_cutoff);
  while (true) {
    Weight w(Lattice::t, c);
    if (validate_dominant(g.k, w)) out.push_back({w});
    std::size_t i = n;
    while (i > 0 && c[i - 1] == norm_cutoff) c[--i] = -norm_cutoff;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

Integer weyl_dimension(const RealGroupData& g, const KType& delta) {
  const auto& rs = g.k;
  HalfWeight rho = rho_half_sum(Lattice::t, rs.rank(), rs.positives());
  std::vector<Coord> shifted = rho.doubled();
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += 2 * delta.highest[i];
  Integer num = 1, den = 1;
  for (const auto& a : rs.positives()) {
    num *= rs.inner(shifted, a.coords());
    den *= rs.inner(rho.doubled(), a.coords());
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a non-integer");
  return num / den;
}

Weight dominant_conjugate(const RootSystem& rs, const Weight& mu) {
  Weight w = mu;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& s : rs.simples()) {
      if (rs.inner(w, s) < 0) {
        w = rs.reflect(w, s);
        moved = true;
      }
    }
  }
  return w;
}

namespace {

// Coordinates of a root-lattice vector in the simple roots.
std::optional<std::vector<Coord>> simple_coordinates(const RootSystem& rs, const Weight& v) {
  const auto& s = rs.simples();
  std::vector<RatVector> a(rs.rank(), RatVector(s.size()));
  RatVector b(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) a[i][j] = Rational(s[j][i]);
    b[i] = Rational(v[i]);
  }
  if (s.empty()) {
    if (!v.is_zero()) return std::nullopt;
    return std::vector<Coord>{};
  }
  auto x = solve_rational(a, b);
  if (!x) return std::nullopt;
  std::vector<Coord> out;
  for (const auto& r : *x) {
    if (r.denominator() != 1) return std::nullopt;
    out.push_back(r.numerator());
  }
  return out;
}

}  // namespace

FormalCharacter weight_multiplicities(const RealGroupData& g, const KType& delta) {
  const auto& rs = g.k;
  const Weight& top = delta.highest;
  if (!validate_dominant(rs, top)) throw std::invalid_argument("highest weight is not dominant");
  auto ring = CharRing::ungraded(Lattice::t, rs.rank());
  const auto& simples = rs.simples();

  const Weight lowest = -dominant_conjugate(rs, -top);
  auto span = simple_coordinates(rs, top - lowest);
  if (!span) throw std::logic_error("highest weight orbit is not a root-lattice translate");

  // Dominant weights below top, with their depth in simple roots.
  std::vector<std::pair<Coord, Weight>> dominant;
  std::vector<Coord> n(simples.size(), 0);
  while (true) {
    Weight mu = top;
    Coord depth = 0;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      mu -= n[i] * simples[i];
      depth += n[i];
    }
    if (validate_dominant(rs, mu)) dominant.emplace_back(depth, mu);
    std::size_t i = simples.size();
    while (i > 0 && n[i - 1] == (*span)[i - 1]) n[--i] = 0;
    if (i == 0) break;
    ++n[i - 1];
  }
  std::sort(dominant.begin(), dominant.end());

  // Depth of each positive root in simple roots, to bound the string sums.
  std::vector<Coord> root_depth;
  for (const auto& a : rs.positives()) {
    auto c = simple_coordinates(rs, a);
    Coord d = 0;
    for (Coord x : *c) d += x;
    root_depth.push_back(d);
  }

  const HalfWeight rho = rho_half_sum(Lattice::t, rs.rank(), rs.positives());
  const auto& two_rho = rho.doubled();
  const Coord top_norm = rs.inner(top, top);

  std::map<Weight, Integer> mult;
  auto lookup = [&](const Weight& w) -> Integer {
    auto it = mult.find(dominant_conjugate(rs, w));
    return it == mult.end() ? Integer(0) : it->second;
  };
  for (const auto& [depth, mu] : dominant) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    // (top+rho, top+rho) - (mu+rho, mu+rho) = |top|^2 - |mu|^2 + (top - mu, 2 rho)
    Weight diff = top - mu;
    Coord denom = top_norm - rs.inner(mu, mu) + rs.inner(diff.coords(), two_rho);
    if (denom <= 0) throw std::logic_error("Freudenthal denominator is not positive");
    Integer num = 0;
    for (std::size_t r = 0; r < rs.positives().size(); ++r) {
      const Weight& a = rs.positives()[r];
      Weight w = mu;
      for (Coord j = 1; j * root_depth[r] <= depth; ++j) {
        w += a;
        Integer m = lookup(w);
        if (m != 0) num += m * rs.inner(w, a);
      }
    }
    num *= 2;
    if (num % denom != 0) throw std::logic_error("Freudenthal recursion gave a non-integer");
    Integer m = num / denom;
    if (m != 0) mult[mu] = m;
  }

  auto weyl = weyl_group(rs);
  FormalCharacter::Terms terms;
  for (const auto& [mu, m] : mult) {
    std::set<Weight> orbit;
    for (const auto& w : weyl) orbit.insert(w.apply(mu));
    for (const auto& o : orbit) terms[HMCharacter{o, 0}] = m;
  }
  return FormalCharacter(ring, std::move(terms));
}

RingPtr hm_exact_ring(const RealGroupData& g) {
  return CharRing::ungraded(Lattice::tM, g.m.rank(), g.zmprime.table());
}

FormalCharacter restrict_to_HM(const RealGroupData& g, const KType& delta) {
  auto ring = hm_exact_ring(g);
  FormalCharacter::Terms terms;
  const auto weights = weight_multiplicities(g, delta);
  for (const auto& [c, m] : weights.terms()) terms[g.hm_character_of(c.tweight)] += m;
  return FormalCharacter(ring, std::move(terms));
}

}  // namespace ktype
