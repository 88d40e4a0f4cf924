#include <fstream>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "ktype/ktypes.hpp"
#include "support.hpp"

using namespace ktype;
using json = nlohmann::json;
using test::t;
using test::tm;

namespace {

json doc(const std::string& name) {
  std::ifstream in(std::string(KTYPE_SOURCE_DATA_DIR) + "/" + name + ".json");
  return json::parse(in);
}

std::string load_error(const json& j) {
  return test::group_error([&] { test::parse(j.dump()); });
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

// All products of reflections in every root, closed under composition.
std::set<IntMatrix> brute_weyl(const RootSystem& rs) {
  std::vector<IntMatrix> gens;
  for (const auto& a : rs.roots()) gens.push_back(rs.reflection_matrix(a));
  std::set<IntMatrix> seen{identity_matrix(rs.rank())};
  std::vector<IntMatrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        IntMatrix p = multiply(g, m);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("shipped groups load") {
  for (const char* name : {"sl2r-compact", "sl2r-split", "su21-compact", "u2", "so2", "su3"}) {
    CAPTURE(name);
    CheckLog log;
    auto g = load_group_data_file(std::string(KTYPE_SOURCE_DATA_DIR) + "/" + name + ".json", &log);
    CHECK(g.name == name);
    CHECK(!log.empty());
  }
}

TEST_CASE("sl2r-compact: one noncompact root pair, no restricted roots") {
  auto g = test::group("sl2r-compact");
  CHECK(g.m.roots().size() == 2);
  CHECK(g.m.contains(tm({2})));
  CHECK(g.m.contains(tm({-2})));
  CHECK_FALSE(g.is_compact(tm({2})));
  CHECK(g.restricted_roots.empty());
  CHECK(g.zmprime.order() == 2);
  CHECK(g.dim_s_M == 2);
}

TEST_CASE("sl2r-split: M = {+-I}") {
  auto g = test::group("sl2r-split");
  CHECK(g.m.rank() == 0);
  CHECK(g.zmprime.order() == 2);
  CHECK(g.zmprime.table().size() == 2);
  CHECK(g.restricted_positives.size() == 1);
  CHECK(g.dim_a == 1);
  // -I acts on the K-weight k by (-1)^k.
  CHECK(g.hm_character_of(t({3})).zchar == *g.zmprime.table().find({1}));
  CHECK(g.hm_character_of(t({2})).zchar == *g.zmprime.table().find({0}));
}

TEST_CASE("truncated file names the missing field") {
  std::string err = test::group_error([] { load_group_data_file(test::test_file("truncated.json")); });
  CHECK(contains(err, "schema"));
  CHECK(contains(err, "zmprime"));
}

TEST_CASE("bad files name the violated invariant") {
  CHECK(contains(test::group_error([] { load_group_data_file(test::test_file("bad-weyl-closure.json")); }),
                 "Weyl closure"));
  CHECK(contains(test::group_error([] { load_group_data_file(test::test_file("bad-odd-sM.json")); }),
                 "sign factor parity"));
  CHECK_THROWS_AS(load_group_data_file(test::test_file("no-such-file.json")), DataIOError);
}

TEST_CASE("schema errors") {
  CHECK(contains(test::group_error([] { test::parse("not json"); }), "schema"));
  CHECK(contains(test::group_error([] { test::parse("[1, 2]"); }), "schema"));

  auto j = doc("sl2r-compact");
  j["k"].erase("rank");
  CHECK(contains(load_error(j), "missing field k.rank"));

  j = doc("su21-compact");
  j["m"]["roots"][0] = json::array({1, -1, 0});
  CHECK(contains(load_error(j), "schema"));

  j = doc("sl2r-compact");
  j["m"]["compact_flags"] = json::array({false});
  CHECK(contains(load_error(j), "compact_flags"));

  j = doc("sl2r-compact");
  j["zmprime"]["generators"][0]["v"] = json::array({"1/0"});
  CHECK(contains(load_error(j), "schema"));

  j = doc("sl2r-split");
  j["zmprime"]["generators"][0]["char_table_row"] = json::array({json::array({1, 0}), json::array({0, 1})});
  CHECK(contains(load_error(j), "root of unity"));
}

TEST_CASE("invariant errors") {
  auto j = doc("su21-compact");
  j["m"]["compact_flags"] = json::array({true, true, true, true, false, false});
  CHECK(contains(load_error(j), "compact roots of (k_M, t_M)"));

  j = doc("su21-compact");
  j["m"]["compact_flags"] = json::array({true, true, true, false, false, false});
  CHECK(contains(load_error(j), "compact roots of (k_M, t_M)"));

  j = doc("sl2r-compact");
  j["dims"]["s_M"] = 4;
  CHECK(contains(load_error(j), "noncompact dimension"));

  j = doc("sl2r-split");
  j["dims"]["a"] = 2;
  CHECK(contains(load_error(j), "dims.a"));

  j = doc("sl2r-split");
  j["restricted"]["roots"] = json::array({json::array({2})});
  CHECK(contains(load_error(j), "closure under negation"));

  j = doc("sl2r-split");
  j["restricted"]["positives"] = json::array({json::array({2}), json::array({-2})});
  CHECK(contains(load_error(j), "positive system"));

  j = doc("u2");
  j["m"]["positives"] = json::array({json::array({1, -1}), json::array({-1, 1})});
  CHECK(contains(load_error(j), "m: positive system"));

  // consistent table, but the generator only produces 2 of the 4 declared elements
  j = doc("sl2r-compact");
  j["zmprime"]["order"] = 4;
  j["zmprime"]["generators"][0]["char_table_row"] = json::array({0, 2});
  CHECK(contains(load_error(j), "Z_M' order"));

  j = doc("sl2r-compact");
  j["zmprime"]["generators"][0]["v"] = json::array({"1/3"});
  CHECK(contains(load_error(j), "Z_M' character table"));

  j = doc("sl2r-compact");
  j["zmprime"]["generators"][0]["char_table_row"] = json::array({0, 0});
  CHECK(contains(load_error(j), "Z_M' character table"));

  j = doc("su21-compact");
  j["zmprime"]["generators"][0]["v"] = json::array({"1/3", "2/3"});
  CHECK(contains(load_error(j), "Z_M' compatibility"));

  j = doc("su3");
  j["k"]["gram"] = json::array({json::array({1, 0}), json::array({0, 1})});
  CHECK(contains(load_error(j), "k: "));
}

TEST_CASE("root system constructor invariants") {
  auto err = [](auto&& f) { return test::group_error(f); };
  CHECK(contains(err([] { RootSystem(Lattice::t, 1, {t({2})}, {t({2})}); }), "closure under negation"));
  CHECK(contains(err([] { RootSystem(Lattice::t, 1, {t({2}), t({-2})}, {}); }), "positive system"));
  CHECK(contains(err([] {
                   RootSystem(Lattice::t, 2, {t({1, -1}), t({-1, 1}), t({2, 1}), t({-2, -1}), t({1, 2}), t({-1, -2})},
                              {t({1, -1}), t({2, 1}), t({1, 2})}, std::vector<Weight>{t({1, -1})},
                              IntMatrix{{2, -1}, {-1, 2}});
                 }),
                 "simple generation"));
}

TEST_CASE("rho examples") {
  CHECK(rho_half_sum(Lattice::tM, 1, {}) == HalfWeight::zero(Lattice::tM, 1));
  std::vector<Weight> a{tm({2})};
  CHECK(rho_half_sum(Lattice::tM, 1, a) == HalfWeight(tm({1})));
  std::vector<Weight> u{t({1, -1})};
  CHECK(rho_half_sum(Lattice::t, 2, u) == HalfWeight(Lattice::t, {1, -1}));
}

TEST_CASE("Weyl group examples") {
  auto sl2 = test::group("sl2r-compact");
  auto w1 = weyl_group(sl2.m);
  REQUIRE(w1.size() == 2);
  CHECK(w1[0].det == 1);
  CHECK(w1[0].matrix == identity_matrix(1));
  CHECK(w1[1].det == -1);

  CHECK(weyl_group(test::group("u2").k).size() == 2);

  auto su3 = weyl_group(test::group("su3").k);
  CHECK(su3.size() == 6);
  int plus = 0;
  for (const auto& w : su3) plus += w.det == 1;
  CHECK(plus == 3);
}

TEST_CASE("Weyl group agrees with the brute-force reflection closure") {
  for (const char* name : {"sl2r-compact", "su21-compact", "u2", "su3", "so2"}) {
    CAPTURE(name);
    auto g = test::group(name);
    for (const RootSystem* rs : {&g.k, &g.m}) {
      auto w = weyl_group(*rs);
      std::set<IntMatrix> mine;
      for (const auto& e : w) {
        mine.insert(e.matrix);
        CHECK(e.det == determinant(e.matrix));
        // w permutes the roots
        std::set<Weight> image;
        for (const auto& r : rs->roots()) image.insert(e.apply(r));
        CHECK(image == std::set<Weight>(rs->roots().begin(), rs->roots().end()));
        // and preserves the inner product
        for (const auto& a : rs->roots())
          for (const auto& b : rs->roots()) CHECK(rs->inner(e.apply(a), e.apply(b)) == rs->inner(a, b));
      }
      CHECK(mine.size() == w.size());
      CHECK(mine == brute_weyl(*rs));
    }
  }
}

TEST_CASE("dominance examples") {
  auto sl2 = test::group("sl2r-compact");
  CHECK(validate_dominant(sl2.m, tm({0})));
  CHECK(validate_dominant(sl2.m, tm({3})));
  CHECK_FALSE(validate_dominant(sl2.m, tm({-3})));
  auto u2 = test::group("u2");
  CHECK_FALSE(validate_dominant(u2.k, t({2, 5})));
  CHECK(validate_dominant(u2.k, t({5, 2})));
}

TEST_CASE("rho pairs to one with every simple coroot") {
  for (const char* name : {"sl2r-compact", "su21-compact", "u2", "su3"}) {
    CAPTURE(name);
    auto g = test::group(name);
    for (const RootSystem* rs : {&g.k, &g.m}) {
      auto rho = rho_half_sum(rs->lattice(), rs->rank(), rs->positives());
      for (const auto& s : rs->simples()) CHECK(rs->coroot_pairing(rho.doubled(), s) == Rational(2));
    }
  }
}

TEST_CASE("restriction takes dominant weights to weights integral on compact coroots") {
  for (const char* name : {"sl2r-compact", "sl2r-split", "su21-compact", "u2", "su3", "so2"}) {
    CAPTURE(name);
    auto g = test::group(name);
    for (const auto& d : enumerate_ktypes(g, 4)) {
      Weight r = g.restrict_to_tM(d.highest);
      CHECK(r.lattice() == Lattice::tM);
      for (std::size_t i = 0; i < g.m.roots().size(); ++i)
        if (g.m_compact[i]) CHECK(g.m.coroot_pairing(r.coords(), g.m.roots()[i]).denominator() == 1);
    }
  }
}

TEST_CASE("Z_M' table matches exp(2 pi i <mu, v>) on a spanning set") {
  for (const char* name : {"sl2r-compact", "sl2r-split", "su21-compact"}) {
    CAPTURE(name);
    auto g = test::group(name);
    const int order = g.zmprime.order();
    for (std::size_t k = 0; k < g.k.rank(); ++k) {
      std::vector<Coord> e(g.k.rank(), 0);
      e[k] = 1;
      auto j = g.zmprime.character_of(Weight(Lattice::t, e));
      REQUIRE(j.has_value());
      for (const auto& z : g.zmprime.elements()) {
        Rational pairing(0);
        for (std::size_t i = 0; i < e.size(); ++i) pairing += Rational(e[i]) * z.v[i];
        const Rational scaled = frac(pairing) * Rational(order);
        REQUIRE(scaled.denominator() == 1);
        CHECK(g.zmprime.value(*j, z) == scaled.numerator());
      }
    }
    CHECK(g.zmprime.elements().size() == std::size_t(order));
  }
}

TEST_CASE("compact labels") {
  auto g = test::group("su21-compact");
  CHECK(g.is_compact(tm({1, -1})));
  CHECK_FALSE(g.is_compact(tm({2, 1})));
  std::vector<Weight> rm{tm({1, -1}), tm({2, 1}), tm({1, 2})};
  CHECK(g.compact_among(rm).size() == 1);
  CHECK(g.noncompact_among(rm).size() == 2);
}
