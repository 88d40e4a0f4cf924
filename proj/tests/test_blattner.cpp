#include <random>
#include <set>

#include "doctest.h"
#include "ktype/blattner.hpp"
#include "ktype/oracles.hpp"
#include "ktype/params.hpp"
#include "support.hpp"

using namespace ktype;
using test::t;
using test::tm;

namespace {

const RealGroupData& sl2c() {
  static const RealGroupData g = test::group("sl2r-compact");
  return g;
}
const RealGroupData& sl2s() {
  static const RealGroupData g = test::group("sl2r-split");
  return g;
}
const RealGroupData& su21() {
  static const RealGroupData g = test::group("su21-compact");
  return g;
}

std::size_t zchar(const RealGroupData& g, int exponent) { return *g.zmprime.table().find({exponent}); }

// Blattner's formula for a compact Cartan (t_M = t):
//   m(L) = sum_{w in W_K} det(w) Q_n(w(L + rho_c) - rho_c - (lambda + rho_n - rho_c)).
Integer blattner_alternating(const RealGroupData& g, const TemperedParams& p, const Weight& highest) {
  const auto noncompact = g.noncompact_among(p.rm_plus);
  const HalfWeight rho_c = rho_half_sum(Lattice::t, g.k.rank(), g.k.positives());
  const Weight base = base_weight(g, p);
  Integer total = 0;
  for (const auto& w : weyl_group(g.k)) {
    Weight shifted = (w.apply(HalfWeight(highest) + rho_c) - rho_c).to_weight();
    total += w.det * kostant_partition(g.restrict_to_tM(shifted) - base, noncompact);
  }
  return total;
}

bool regular(const RealGroupData& g, const TemperedParams& p) {
  for (const auto& a : g.m.roots())
    if (g.m.inner(p.lambda.doubled(), a.coords()) == 0) return false;
  return true;
}

// Random SU(2,1) parameters with a nonzero verdict.
TemperedParams random_su21(std::mt19937& rng, Coord range = 6) {
  std::uniform_int_distribution<Coord> coord(-range, range);
  std::uniform_int_distribution<int> chamber(0, 2);
  while (true) {
    auto c = SU21Chamber(chamber(rng));
    TemperedParams p;
    try {
      p = su21_params(su21(), c, coord(rng), coord(rng));
    } catch (const std::exception&) {
      continue;
    }
    if (validate_params(su21(), p).kind == Verdict::nonzero) return p;
  }
}

}  // namespace

TEST_CASE("verdict examples") {
  CHECK(validate_params(sl2c(), sl2_compact_params(sl2c(), 3, true)).kind == Verdict::nonzero);
  CHECK(validate_params(sl2c(), sl2_compact_params(sl2c(), 0, true)).kind == Verdict::nonzero);
  auto zero = validate_params(su21(), su21_params(su21(), SU21Chamber::holomorphic, 2, 2));
  CHECK(zero.kind == Verdict::zero);
  CHECK(zero.reason.find("(1,-1)") != std::string::npos);
  CHECK(validate_params(su21(), su21_params(su21(), SU21Chamber::holomorphic, 2, 1)).kind == Verdict::nonzero);
  // Walls of noncompact roots do not kill the representation.
  CHECK(validate_params(su21(), su21_params(su21(), SU21Chamber::middle, 0, -1)).kind == Verdict::nonzero);
}

TEST_CASE("invalid parameters") {
  auto base = sl2_compact_params(sl2c(), 3, true);
  auto bad = base;
  bad.lambda = HalfWeight(tm({-3}));
  CHECK(validate_params(sl2c(), bad).kind == Verdict::invalid);  // not dominant

  bad = base;
  bad.lambda = HalfWeight(Lattice::tM, {3});  // 3/2: lambda - rho not integral
  CHECK(validate_params(sl2c(), bad).kind == Verdict::invalid);

  bad = base;
  bad.chi = zchar(sl2c(), 1);  // base weight 4 is even
  CHECK(validate_params(sl2c(), bad).kind == Verdict::invalid);

  bad = base;
  bad.chi = 7;
  CHECK(validate_params(sl2c(), bad).kind == Verdict::invalid);

  bad = base;
  bad.rm_plus = {tm({2}), tm({-2})};
  CHECK(validate_params(sl2c(), bad).kind == Verdict::invalid);

  bad = base;
  bad.lambda = HalfWeight(tm({3, 0}));
  CHECK(validate_params(sl2c(), bad).kind == Verdict::invalid);

  bad = base;
  bad.nu = Weight(Lattice::a, {1});
  CHECK(validate_params(sl2c(), bad).kind == Verdict::invalid);

  CHECK_THROWS_AS(ktype_table(sl2c(), bad, 5), InvalidParams);
  CHECK_THROWS_AS(hm_virtual_character(sl2c(), bad, 5), InvalidParams);

  // chi on SU(2,1) must be the class of lambda - rho_c + rho_n mod 3
  auto p = su21_params(su21(), SU21Chamber::holomorphic, 2, 1);
  for (std::size_t j = 0; j < 3; ++j) {
    auto q = p;
    q.chi = j;
    CHECK((validate_params(su21(), q).kind == Verdict::nonzero) == (j == p.chi));
  }
}

TEST_CASE("virtual character examples") {
  auto d3 = hm_virtual_character(sl2c(), sl2_compact_params(sl2c(), 3, true), 20);
  for (Coord w = -4; w <= 20; ++w) {
    const Integer expected = (w >= 4 && w % 2 == 0) ? 1 : 0;
    CHECK(d3.coefficient({tm({w}), zchar(sl2c(), 0)}) == expected);
    CHECK(d3.coefficient({tm({w}), zchar(sl2c(), 1)}) == 0);
  }

  auto ps = hm_virtual_character(sl2s(), sl2_split_params(sl2s(), true, 1), 0);
  REQUIRE(ps.terms().size() == 1);
  CHECK(ps.terms().begin()->first == HMCharacter{Weight::zero(Lattice::tM, 0), zchar(sl2s(), 0)});
  CHECK(ps.exact());

  auto d0 = hm_virtual_character(sl2c(), sl2_compact_params(sl2c(), 0, true), 15);
  for (Coord w = -3; w <= 15; ++w) {
    const Integer expected = (w >= 1 && w % 2 != 0) ? 1 : 0;
    CHECK(d0.coefficient({tm({w}), zchar(sl2c(), 1)}) == expected);
  }

  CHECK_THROWS_AS(hm_virtual_character(sl2c(), sl2_compact_params(sl2c(), 3, true), 2), std::invalid_argument);
}

TEST_CASE("virtual character carries the compact exterior factor") {
  auto p = su21_params(su21(), SU21Chamber::holomorphic, 2, 1);
  auto v = hm_virtual_character(su21(), p, 12);
  // base (3,3) with coefficient 1 and (3,3) + alpha with coefficient -1
  CHECK(v.coefficient({tm({3, 3}), p.chi}) == 1);
  CHECK(v.coefficient({tm({4, 2}), p.chi}) == -1);
}

TEST_CASE("multiplicity examples") {
  auto d3 = sl2_compact_params(sl2c(), 3, true);
  CHECK(ktype_multiplicity(sl2c(), d3, make_ktype(sl2c(), t({4}))) == 1);
  CHECK(ktype_multiplicity(sl2c(), d3, make_ktype(sl2c(), t({5}))) == 0);
  CHECK(ktype_multiplicity(sl2c(), d3, make_ktype(sl2c(), t({-4}))) == 0);

  auto pp = sl2_split_params(sl2s(), true, 1);
  CHECK(ktype_multiplicity(sl2s(), pp, make_ktype(sl2s(), t({2}))) == 1);
  CHECK(ktype_multiplicity(sl2s(), pp, make_ktype(sl2s(), t({3}))) == 0);

  auto so2 = test::group("so2");
  TemperedParams triv{HalfWeight::zero(Lattice::tM, 1), {}, 0, Weight::zero(Lattice::a, 0)};
  REQUIRE(validate_params(so2, triv).kind == Verdict::nonzero);
  CHECK(ktype_multiplicity(so2, triv, make_ktype(so2, t({0}))) == 1);
  CHECK(ktype_multiplicity(so2, triv, make_ktype(so2, t({1}))) == 0);
  for (Mode m : {Mode::partition, Mode::series})
    CHECK(ktype_multiplicity(so2, triv, make_ktype(so2, t({0})), m) == 1);
}

TEST_CASE("table examples") {
  auto d1 = ktype_table(sl2c(), sl2_compact_params(sl2c(), 1, true), 10);
  CHECK(d1.sign == -1);
  CHECK(d1.window == 10);
  REQUIRE(d1.entries.size() == 5);
  for (Coord w : {2, 4, 6, 8, 10}) CHECK(d1.at(t({w})) == 1);

  auto pm = ktype_table(sl2s(), sl2_split_params(sl2s(), false, 1), 5);
  CHECK(pm.sign == 1);
  REQUIRE(pm.entries.size() == 6);
  for (Coord w : {-5, -3, -1, 1, 3, 5}) CHECK(pm.at(t({w})) == 1);

  auto z = ktype_table(su21(), su21_params(su21(), SU21Chamber::holomorphic, 2, 2), 6);
  CHECK(z.entries.empty());
}

TEST_CASE("sign factors") {
  CHECK(sign_factor(sl2c()) == -1);
  CHECK(sign_factor(sl2s()) == 1);
  CHECK(sign_factor(su21()) == 1);
  auto g = sl2c();
  g.dim_s_M = 1;
  CHECK_THROWS_AS(sign_factor(g), InvariantError);
}

TEST_CASE("nu independence") {
  auto pp = sl2_split_params(sl2s(), true, 1);
  CHECK(nu_independence_check(sl2s(), pp, Weight(Lattice::a, {1}), Weight(Lattice::a, {7}), 12));
  CHECK(nu_independence_check(sl2s(), pp, Weight(Lattice::a, {3}), Weight(Lattice::a, {3}), 12));

  std::mt19937 rng(99);
  std::uniform_int_distribution<Coord> nu(-1000, 1000);
  std::bernoulli_distribution coin;
  for (int i = 0; i < 100; ++i) {
    auto p = sl2_split_params(sl2s(), coin(rng), 0);
    CHECK(nu_independence_check(sl2s(), p, Weight(Lattice::a, {nu(rng)}), Weight(Lattice::a, {nu(rng)}), 10));
  }
  // Groups without a split part only have nu = 0.
  auto d = sl2_compact_params(sl2c(), 2, false);
  CHECK(nu_independence_check(sl2c(), d, Weight::zero(Lattice::a, 0), Weight::zero(Lattice::a, 0), 10));
}

TEST_CASE("series and partition modes agree on every SL(2,R) K-type in window 60") {
  std::vector<std::pair<const RealGroupData*, TemperedParams>> all;
  for (int n = 0; n <= 5; ++n)
    for (bool plus : {true, false}) all.emplace_back(&sl2c(), sl2_compact_params(sl2c(), n, plus));
  for (bool spherical : {true, false}) all.emplace_back(&sl2s(), sl2_split_params(sl2s(), spherical, 2));
  for (const auto& [g, p] : all) {
    MultiplicityEngine e(*g, p);
    for (const auto& d : enumerate_ktypes(*g, 60)) CHECK(e.multiplicity(d) == e.multiplicity_series(d));
  }
}

TEST_CASE("series and partition modes agree on sampled SU(2,1) queries") {
  std::mt19937 rng(5);
  const auto ktypes = enumerate_ktypes(su21(), 6);
  std::uniform_int_distribution<std::size_t> pick(0, ktypes.size() - 1);
  for (int i = 0; i < 100; ++i) {
    auto p = random_su21(rng);
    const auto& d = ktypes[pick(rng)];
    CHECK(ktype_multiplicity(su21(), p, d, Mode::partition) == ktype_multiplicity(su21(), p, d, Mode::series));
  }
}

TEST_CASE("Blattner's alternating sum reproduces discrete series multiplicities") {
  std::mt19937 rng(17);
  int tested = 0;
  while (tested < 25) {
    auto p = random_su21(rng);
    if (!regular(su21(), p)) continue;
    ++tested;
    auto table = ktype_table(su21(), p, 7);
    for (const auto& d : enumerate_ktypes(su21(), 7)) {
      CAPTURE(d.highest);
      CHECK(table.at(d.highest) == blattner_alternating(su21(), p, d.highest));
    }
  }
  for (int n = 1; n <= 5; ++n)
    for (bool plus : {true, false}) {
      auto p = sl2_compact_params(sl2c(), n, plus);
      auto table = ktype_table(sl2c(), p, 30);
      for (const auto& d : enumerate_ktypes(sl2c(), 30))
        CHECK(table.at(d.highest) == blattner_alternating(sl2c(), p, d.highest));
    }
}

TEST_CASE("holomorphic discrete series: lowest K-type times S(p+)") {
  // lambda = (2,1): lowest K-type (3,3); S^k(p+) has highest weight k (2,1).
  auto table = ktype_table(su21(), su21_params(su21(), SU21Chamber::holomorphic, 2, 1), 12);
  std::map<Weight, Integer> expected;
  for (Coord k = 0; 3 + 2 * k <= 12; ++k) expected[t({3 + 2 * k, 3 + k})] = 1;
  CHECK(table.entries == expected);
}

TEST_CASE("Weyl denominator identity") {
  for (auto c : {SU21Chamber::holomorphic, SU21Chamber::middle, SU21Chamber::antiholomorphic}) {
    auto rm = su21_chamber(c);
    CHECK(compact_exterior(su21(), rm) == weyl_denominator_sum(su21(), rm));
  }
  std::vector<Weight> rm{tm({2})};
  CHECK(compact_exterior(sl2c(), rm) == weyl_denominator_sum(sl2c(), rm));
  CHECK(compact_exterior(sl2c(), rm) == FormalCharacter::one(hm_exact_ring(sl2c())));

  auto su3 = test::group("su3");
  auto pos = su3.m.positives();
  CHECK(compact_exterior(su3, pos) == weyl_denominator_sum(su3, pos));
  CHECK(compact_exterior(su3, pos).terms().size() == 6);
}

TEST_CASE("tables are invariant under the compact Weyl group acting on parameters") {
  // s_alpha swaps the two t_M coordinates.
  auto swap = [](const Weight& w) { return Weight(w.lattice(), {w[1], w[0]}); };
  std::mt19937 rng(23);
  for (int i = 0; i < 15; ++i) {
    auto p = random_su21(rng);
    auto q = p;
    q.lambda = HalfWeight(Lattice::tM, {p.lambda.doubled()[1], p.lambda.doubled()[0]});
    q.rm_plus.clear();
    for (const auto& a : p.rm_plus) q.rm_plus.push_back(swap(a));
    REQUIRE(validate_params(su21(), q).kind == Verdict::nonzero);
    CHECK(ktype_table(su21(), p, 6) == ktype_table(su21(), q, 6));
  }
}

TEST_CASE("multiplicities are nonnegative and SU(2,1) tables are multiplicity free") {
  std::mt19937 rng(31);
  for (int i = 0; i < 20; ++i) {
    auto p = random_su21(rng);
    auto table = ktype_table_mode(su21(), p, 6, Mode::partition);
    for (const auto& [k, v] : table.entries) {
      CHECK(v >= 0);
      CHECK(v <= 1);
    }
  }
}

TEST_CASE("SL(2,R) tempered tables cover the oracle supports") {
  const Coord window = 40;
  std::set<Weight> engine, oracle;
  for (int n = 0; n <= 4; ++n)
    for (bool plus : {true, false}) {
      auto table = ktype_table(sl2c(), sl2_compact_params(sl2c(), n, plus), window);
      SL2Series s(n == 0 ? (plus ? SL2Kind::limit_plus : SL2Kind::limit_minus)
                         : (plus ? SL2Kind::discrete_plus : SL2Kind::discrete_minus),
                  n);
      CHECK(oracle_match(table, s).passed());
      for (const auto& [k, v] : table.entries) engine.insert(k);
      for (const auto& [k, v] : sl2_branching(s, window).entries) oracle.insert(k);
    }
  for (bool spherical : {true, false}) {
    auto table = ktype_table(sl2s(), sl2_split_params(sl2s(), spherical, 0), window);
    SL2Series s(spherical ? SL2Kind::principal_spherical : SL2Kind::principal_nonspherical);
    CHECK(oracle_match(table, s).passed());
    for (const auto& [k, v] : table.entries) engine.insert(k);
    for (const auto& [k, v] : sl2_branching(s, window).entries) oracle.insert(k);
  }
  CHECK(engine == oracle);
  CHECK(engine.size() == std::size_t(2 * window + 1));
}
