#include "ktype/blattner.hpp"

#include <algorithm>
#include <sstream>

namespace ktype {

namespace {

std::string show(const auto& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::vector<Weight> compact_part(const RealGroupData& g, const std::vector<Weight>& rm_plus) {
  return g.compact_among(rm_plus);
}

std::vector<Weight> noncompact_part(const RealGroupData& g, const std::vector<Weight>& rm_plus) {
  return g.noncompact_among(rm_plus);
}

void require_valid(const RealGroupData& g, const TemperedParams& p) {
  auto v = validate_params(g, p);
  if (v.kind == Verdict::invalid) throw InvalidParams(v.reason);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::nonzero: return "nonzero";
    case Verdict::zero: return "zero";
    case Verdict::invalid: return "invalid";
  }
  return "?";
}

ParamVerdict validate_params(const RealGroupData& g, const TemperedParams& p) {
  auto invalid = [](std::string why) { return ParamVerdict{Verdict::invalid, std::move(why)}; };
  const std::size_t r = g.m.rank();
  if (p.lambda.lattice() != Lattice::tM || p.lambda.rank() != r)
    return invalid("lambda must have " + std::to_string(r) + " coordinates on t_M");
  for (const auto& a : p.rm_plus)
    if (a.lattice() != Lattice::tM || a.rank() != r) return invalid("R_M^+ contains a weight of the wrong rank");
  if (p.nu.lattice() != Lattice::a || p.nu.rank() != g.dim_a)
    return invalid("nu must have " + std::to_string(g.dim_a) + " coordinates on a");
  if (p.chi >= g.zmprime.table().size())
    return invalid("chi_M index " + std::to_string(p.chi) + " is not a character of Z_M' (order " +
                   std::to_string(g.zmprime.order()) + ")");
  if (!is_positive_system(g.m.roots(), p.rm_plus)) return invalid("R_M^+ is not a positive system of the roots of m");

  for (const auto& a : p.rm_plus)
    if (g.m.inner(p.lambda.doubled(), a.coords()) < 0)
      return invalid("lambda is not dominant for R_M^+ (pairing with " + show(a) + " is negative)");

  const HalfWeight rho = rho_half_sum(Lattice::tM, r, p.rm_plus);
  if (!(p.lambda - rho).is_integral()) return invalid("lambda - rho^M is not integral");

  const Weight base = base_weight(g, p);
  if (!g.zmprime.compatible(base, p.chi))
    return invalid("chi_M disagrees with e^{lambda - rho} on T_M cap Z_M'");

  for (const auto& s : simple_roots_of(p.rm_plus)) {
    if (!g.is_compact(s)) continue;
    if (g.m.inner(p.lambda.doubled(), s.coords()) == 0)
      return {Verdict::zero, "lambda is orthogonal to the simple compact root " + show(s)};
  }
  return {Verdict::nonzero, ""};
}

Weight base_weight(const RealGroupData& g, const TemperedParams& p) {
  const std::size_t r = g.m.rank();
  const auto compact = compact_part(g, p.rm_plus);
  const auto noncompact = noncompact_part(g, p.rm_plus);
  HalfWeight b = p.lambda - rho_half_sum(Lattice::tM, r, compact) + rho_half_sum(Lattice::tM, r, noncompact);
  return b.to_weight();
}

RingPtr hm_graded_ring(const RealGroupData& g, const TemperedParams& p) {
  const auto noncompact = noncompact_part(g, p.rm_plus);
  return CharRing::graded_by_cone(Lattice::tM, g.m.rank(), noncompact, g.zmprime.table());
}

FormalCharacter hm_virtual_character(const RealGroupData& g, const TemperedParams& p, Height cutoff) {
  require_valid(g, p);
  auto ring = hm_graded_ring(g, p);
  const Weight base = base_weight(g, p);
  const auto compact = compact_part(g, p.rm_plus);
  const auto noncompact = noncompact_part(g, p.rm_plus);

  auto v = FormalCharacter::monomial(ring, HMCharacter{base, p.chi});
  auto exterior = graded_exterior(ring, compact);
  v = char_mul(v, exterior);
  if (noncompact.empty()) return v;

  const Height hb = ring->height(base);
  if (cutoff < hb)
    throw std::invalid_argument("cutoff " + std::to_string(cutoff) + " lies below the base weight (height " +
                                std::to_string(hb) + ")");
  // The exterior factor can reach below height 0 through compact roots.
  const Height low = std::min<Height>(0, *exterior.min_height());
  const Height series_cutoff = cutoff - hb - low;
  auto series = FormalCharacter::one(ring);
  for (const auto& b : noncompact) series = char_mul(series, geometric_series(ring, b, series_cutoff));
  return char_mul(v, series).truncated(cutoff);
}

// ---------------------------------------------------------------- engine

MultiplicityEngine::MultiplicityEngine(const RealGroupData& g, const TemperedParams& p)
    : g_(g), p_(p), base_(base_weight(g, p)), counter_(noncompact_part(g, p.rm_plus)) {
  const auto compact = compact_part(g, p.rm_plus);
  if (compact.size() > 20) throw std::invalid_argument("too many compact roots for the subset expansion");
  const std::size_t r = g.m.rank();
  for (std::size_t mask = 0; mask < (std::size_t(1) << compact.size()); ++mask) {
    Weight s = Weight::zero(Lattice::tM, r);
    int sign = 1;
    for (std::size_t i = 0; i < compact.size(); ++i)
      if (mask & (std::size_t(1) << i)) {
        s += compact[i];
        sign = -sign;
      }
    shifts_.emplace_back(std::move(s), sign);
  }
}

Integer MultiplicityEngine::coefficient(const HMCharacter& c) {
  if (c.zchar != p_.chi) return 0;
  Integer total = 0;
  const Weight rel = c.tweight - base_;
  for (const auto& [s, sign] : shifts_) {
    Integer q = counter_(rel - s);
    if (q != 0) total += sign * q;
  }
  return total;
}

Integer MultiplicityEngine::multiplicity(const KType& delta) {
  Integer total = 0;
  const auto restricted = restrict_to_HM(g_, delta);
  for (const auto& [c, m] : restricted.terms()) {
    Integer v = coefficient(c);
    if (v != 0) total += m * v;
  }
  return total;
}

Integer MultiplicityEngine::multiplicity_series(const KType& delta) const {
  auto restricted = restrict_to_HM(g_, delta);
  auto ring = hm_graded_ring(g_, p_);
  Height need = ring->height(base_);
  for (const auto& [c, m] : restricted.terms()) need = std::max(need, ring->height(c.tweight));
  auto v = hm_virtual_character(g_, p_, need);
  Integer total = 0;
  for (const auto& [c, m] : restricted.terms()) {
    Integer x = v.coefficient(c);
    if (x != 0) total += m * x;
  }
  return total;
}

Integer ktype_multiplicity(const RealGroupData& g, const TemperedParams& p, const KType& delta, Mode mode) {
  require_valid(g, p);
  MultiplicityEngine engine(g, p);
  return mode == Mode::partition ? engine.multiplicity(delta) : engine.multiplicity_series(delta);
}

// ---------------------------------------------------------------- tables

int sign_factor(const RealGroupData& g) {
  if (g.dim_s_M % 2 != 0) throw InvariantError("sign factor parity", "dim s_M is odd");
  return (g.dim_s_M / 2) % 2 == 0 ? 1 : -1;
}

KTypeTable ktype_table_mode(const RealGroupData& g, const TemperedParams& p, Coord window, Mode mode) {
  auto verdict = validate_params(g, p);
  if (verdict.kind == Verdict::invalid) throw InvalidParams(verdict.reason);
  KTypeTable table;
  table.window = window;
  table.sign = sign_factor(g);
  if (verdict.kind == Verdict::zero) return table;
  MultiplicityEngine engine(g, p);
  for (const auto& delta : enumerate_ktypes(g, window)) {
    Integer m = mode == Mode::partition ? engine.multiplicity(delta) : engine.multiplicity_series(delta);
    if (m < 0) throw std::logic_error("negative multiplicity at K-type " + show(delta.highest));
    if (m != 0) table.entries.emplace(delta.highest, m);
  }
  return table;
}

KTypeTable ktype_table(const RealGroupData& g, const TemperedParams& p, Coord window, TableOptions opts) {
  auto verdict = validate_params(g, p);
  if (verdict.kind == Verdict::invalid) throw InvalidParams(verdict.reason);
  KTypeTable table = ktype_table_mode(g, p, window, Mode::partition);
  if (verdict.kind == Verdict::zero || opts.series_spot_checks == 0) return table;

  MultiplicityEngine engine(g, p);
  const auto ktypes = enumerate_ktypes(g, window);
  const std::size_t n = ktypes.size();
  const std::size_t checks = std::min(n, opts.series_spot_checks);
  for (std::size_t i = 0; i < checks; ++i) {
    const auto& delta = ktypes[checks == n ? i : i * (n - 1) / (checks - 1 ? checks - 1 : 1)];
    Integer s = engine.multiplicity_series(delta);
    if (s != table.at(delta.highest))
      throw std::logic_error("series and partition evaluations disagree at K-type " + show(delta.highest));
  }
  return table;
}

bool nu_independence_check(const RealGroupData& g, const TemperedParams& p, const Weight& nu1, const Weight& nu2,
                           Coord window) {
  TemperedParams p1 = p, p2 = p;
  p1.nu = nu1;
  p2.nu = nu2;
  return ktype_table(g, p1, window) == ktype_table(g, p2, window);
}

FormalCharacter compact_exterior(const RealGroupData& g, const std::vector<Weight>& rm_plus) {
  return graded_exterior(hm_exact_ring(g), compact_part(g, rm_plus));
}

FormalCharacter weyl_denominator_sum(const RealGroupData& g, const std::vector<Weight>& rm_plus) {
  const std::size_t r = g.m.rank();
  auto compact = compact_part(g, rm_plus);
  std::vector<Weight> roots = compact;
  for (const auto& a : compact) roots.push_back(-a);
  RootSystem sub(Lattice::tM, r, roots, compact, std::nullopt, g.m.gram(), "compact roots of m");
  const HalfWeight rho_c = rho_half_sum(Lattice::tM, r, compact);
  auto ring = hm_exact_ring(g);
  FormalCharacter::Terms terms;
  for (const auto& w : weyl_group(sub)) {
    Weight shift = (rho_c - w.apply(rho_c)).to_weight();
    terms[HMCharacter{shift, ring->zchars().trivial()}] += w.det;
  }
  return FormalCharacter(ring, std::move(terms));
}

}  // namespace ktype
