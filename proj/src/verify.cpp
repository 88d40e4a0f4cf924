#include "ktype/verify.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

#include "ktype/blattner.hpp"
#include "ktype/oracles.hpp"
#include "ktype/params.hpp"

#ifndef KTYPE_BUILTIN_DATA_DIR
#define KTYPE_BUILTIN_DATA_DIR "data"
#endif

namespace ktype {

using json = nlohmann::json;

std::string data_dir() {
  if (const char* env = std::getenv("KTYPE_DATA_DIR"); env && *env) return env;
  return KTYPE_BUILTIN_DATA_DIR;
}

std::string group_path(const std::string& name, const std::string& dir) {
  const bool is_path = name.find('/') != std::string::npos ||
                       (name.size() > 5 && name.compare(name.size() - 5, 5, ".json") == 0);
  return is_path ? name : dir + "/" + name + ".json";
}

RealGroupData load_group(const std::string& name, const std::string& dir) {
  return load_group_data_file(group_path(name, dir), nullptr);
}

namespace {

std::string str(const auto& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

json table_json(const KTypeTable& t) {
  json e = json::object();
  for (const auto& [k, v] : t.entries) e[str(k)] = str(v);
  return json{{"window", t.window}, {"sign", t.sign}, {"entries", e}};
}

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& what, bool pass, json expected, json actual) {
    pass_ = pass_ && pass;
    checks_.push_back({{"name", what}, {"pass", pass}, {"expected", std::move(expected)}, {"actual", std::move(actual)}});
  }

  // Runs body; an exception fails the check instead of aborting the suite.
  template <class F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(what, false, "no exception", std::string("exception: ") + e.what());
    }
  }

  json report() const { return {{"suite", name_}, {"pass", pass_}, {"checks", checks_}}; }

 private:
  std::string name_;
  bool pass_ = true;
  json checks_ = json::array();
};

void compare_oracle(Suite& s, const std::string& what, const KTypeTable& table, const SL2Series& series) {
  auto r = oracle_match(table, series);
  s.check(what, r.passed(), table_json(sl2_branching(series, table.window)), table_json(table));
}

json suite_sl2(const VerifyConfig& cfg) {
  Suite s("sl2");
  const Coord window = 60;
  s.guarded("load", [&] {
    auto compact = load_group("sl2r-compact", cfg.data_dir);
    auto split = load_group("sl2r-split", cfg.data_dir);
    s.check("sign factor compact Cartan", sign_factor(compact) == -1, -1, sign_factor(compact));
    s.check("sign factor split Cartan", sign_factor(split) == 1, 1, sign_factor(split));
    for (int n = 1; n <= 5; ++n) {
      for (bool plus : {true, false}) {
        auto p = sl2_compact_params(compact, n, plus);
        auto t = ktype_table(compact, p, window);
        SL2Series series(plus ? SL2Kind::discrete_plus : SL2Kind::discrete_minus, n);
        compare_oracle(s, "discrete " + to_string(series), t, series);
        auto ts = ktype_table_mode(compact, p, window, Mode::series);
        s.check("mode equivalence " + to_string(series), ts == t, table_json(t), table_json(ts));
      }
    }
    for (bool plus : {true, false}) {
      auto p = sl2_compact_params(compact, 0, plus);
      auto t = ktype_table(compact, p, window);
      SL2Series series(plus ? SL2Kind::limit_plus : SL2Kind::limit_minus);
      compare_oracle(s, "limit " + to_string(series), t, series);
      auto ts = ktype_table_mode(compact, p, window, Mode::series);
      s.check("mode equivalence " + to_string(series), ts == t, table_json(t), table_json(ts));
    }
    for (bool spherical : {true, false}) {
      auto p = sl2_split_params(split, spherical, 1);
      auto t = ktype_table(split, p, window);
      SL2Series series(spherical ? SL2Kind::principal_spherical : SL2Kind::principal_nonspherical);
      compare_oracle(s, "principal " + to_string(series), t, series);
      auto ts = ktype_table_mode(split, p, window, Mode::series);
      s.check("mode equivalence " + to_string(series), ts == t, table_json(t), table_json(ts));
      bool indep = nu_independence_check(split, p, Weight(Lattice::a, {1}), Weight(Lattice::a, {7}), window);
      s.check("nu independence " + to_string(series), indep, true, indep);
    }
  });
  return s.report();
}

json suite_su21(const VerifyConfig& cfg) {
  Suite s("su21");
  s.guarded("load", [&] {
    auto g = load_group("su21-compact", cfg.data_dir);
    s.check("sign factor", sign_factor(g) == 1, 1, sign_factor(g));
    for (auto c : {SU21Chamber::holomorphic, SU21Chamber::middle, SU21Chamber::antiholomorphic}) {
      auto rm = su21_chamber(c);
      auto lhs = compact_exterior(g, rm), rhs = weyl_denominator_sum(g, rm);
      s.check("Weyl denominator identity, chamber " + std::to_string(int(c)), lhs == rhs, str(lhs), str(rhs));
    }
    auto zero = validate_params(g, su21_params(g, SU21Chamber::holomorphic, 2, 2));
    s.check("zero verdict on the compact wall", zero.kind == Verdict::zero, "zero", to_string(zero.kind));

    // Random discrete series and limits; each table in both modes.
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coord(-6, 6), chamber(0, 2);
    int tables = 0, max_mult = 0;
    bool modes_agree = true;
    while (tables < 20) {
      auto c = SU21Chamber(chamber(rng));
      Coord a = coord(rng), b = coord(rng);
      TemperedParams p;
      try {
        p = su21_params(g, c, a, b);
      } catch (const std::exception&) {
        continue;
      }
      if (validate_params(g, p).kind != Verdict::nonzero) continue;
      auto t = ktype_table(g, p, 6);
      auto ts = ktype_table_mode(g, p, 6, Mode::series);
      modes_agree = modes_agree && t == ts;
      for (const auto& [k, v] : t.entries) max_mult = std::max(max_mult, int(v));
      ++tables;
    }
    s.check("mode equivalence on 20 random tables", modes_agree, true, modes_agree);
    s.check("multiplicity-free on 20 random tables", max_mult <= 1, "<= 1", max_mult);
  });
  return s.report();
}

json suite_dirac(const VerifyConfig& cfg) {
  Suite s("dirac");
  s.guarded("oscillator", [&] {
    for (double f : {1.0, 2.0, 4.0}) {
      auto r = oscillator_1d(cfg.grid, cfg.svd_tol, f);
      const std::string tag = " (f=" + str(f) + ")";
      s.check("kernel dims" + tag, r.kernel_dim_even == 1 && r.kernel_dim_odd == 0, json::array({1, 0}),
              json::array({r.kernel_dim_even, r.kernel_dim_odd}));
      s.check("gaussian match" + tag, r.gaussian_l2_error < 1e-3, "< 1e-3", r.gaussian_l2_error);
      s.check("spectral gap" + tag, r.smallest_singular_values.at(1) > 0.5, "> 0.5", r.smallest_singular_values.at(1));
    }
    auto nd = oscillator_nd(2, GridSpec{6.0, 0.1}, cfg.svd_tol);
    s.check("2-D tensor rule", nd.kernel_dim_even == 1 && nd.kernel_dim_odd == 0, json::array({1, 0}),
            json::array({nd.kernel_dim_even, nd.kernel_dim_odd}));
    const auto& ex = *nd.explicit_2d;
    s.check("2-D explicit kernel", ex.kernel_dim_even == 1 && ex.kernel_dim_odd == 0, json::array({1, 0}),
            json::array({ex.kernel_dim_even, ex.kernel_dim_odd}));
    s.check("2-D gaussian match", ex.gaussian_l2_error < 5e-3, "< 5e-3", ex.gaussian_l2_error);
  });
  s.guarded("cylinder", [&] {
    for (bool even : {true, false}) {
      auto t = cylinder_sl2(even ? Parity::even : Parity::odd, 20, cfg.grid, cfg.svd_tol);
      SL2Series series(even ? SL2Kind::principal_spherical : SL2Kind::principal_nonspherical);
      compare_oracle(s, std::string("cylinder ") + (even ? "even" : "odd"), t, series);
    }
  });
  return s.report();
}

json suite_ring(const VerifyConfig& cfg) {
  Suite s("ring");
  s.guarded("ring", [&] {
    auto g = load_group("su21-compact", cfg.data_dir);
    auto rm = su21_chamber(SU21Chamber::holomorphic);
    auto nc = g.noncompact_among(rm);
    auto ring = CharRing::graded_by_cone(Lattice::tM, 2, nc, g.zmprime.table());
    for (const auto& b : nc) {
      for (Height h : {0, 5, 12}) {
        std::vector<Weight> one{b};
        auto prod = char_mul(graded_exterior(ring, one), geometric_series(ring, b, h));
        auto expected = FormalCharacter::one(ring).truncated(*prod.cutoff());
        s.check("inverse identity " + str(b) + " at height " + std::to_string(h),
                prod == expected && *prod.cutoff() >= h, str(expected), str(prod));
      }
    }
    // Partition counts against the truncated product of series.
    auto series = FormalCharacter::one(ring);
    const Height H = 24;
    for (const auto& b : nc) series = char_mul(series, geometric_series(ring, b, H));
    bool agree = true;
    for (Coord x = -4; x <= 12; ++x)
      for (Coord y = -4; y <= 12; ++y) {
        Weight w(Lattice::tM, {x, y});
        if (ring->height(w) > H) continue;
        if (kostant_partition(w, nc) != series.coefficient(HMCharacter{w, 0})) agree = false;
      }
    s.check("partition counts equal series coefficients", agree, true, agree);

    auto sl2 = load_group("sl2r-compact", cfg.data_dir);
    std::vector<Weight> rm2{Weight(Lattice::tM, {2})};
    auto lhs = compact_exterior(sl2, rm2), rhs = weyl_denominator_sum(sl2, rm2);
    s.check("Weyl denominator identity sl2r-compact", lhs == rhs, str(lhs), str(rhs));
  });
  return s.report();
}

}  // namespace

json run_verify_suite(const std::string& suite, const VerifyConfig& cfg) {
  if (suite == "sl2") return suite_sl2(cfg);
  if (suite == "su21") return suite_su21(cfg);
  if (suite == "dirac") return suite_dirac(cfg);
  if (suite == "ring") return suite_ring(cfg);
  throw std::invalid_argument("unknown suite \"" + suite + "\" (expected sl2, su21, dirac or ring)");
}

}  // namespace ktype
