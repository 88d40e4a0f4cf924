#include "ktype/params.hpp"

#include <cmath>

namespace ktype {

using json = nlohmann::json;

namespace {

Coord doubled_coordinate(const json& x) {
  if (x.is_number_integer()) return 2 * x.get<Coord>();
  if (x.is_number_float()) {
    double d = 2 * x.get<double>();
    if (std::abs(d - std::round(d)) > 1e-12) throw ParamsError("lambda entries must be integers or halves");
    return Coord(std::llround(d));
  }
  if (x.is_string()) {
    const std::string s = x.get<std::string>();
    try {
      std::size_t used = 0;
      auto slash = s.find('/');
      Coord p = std::stoll(s.substr(0, slash), &used);
      if (slash == std::string::npos) {
        if (used != s.size()) throw std::invalid_argument(s);
        return 2 * p;
      }
      if (used != slash || s.substr(slash + 1) != "2") throw std::invalid_argument(s);
      return p;
    } catch (const std::logic_error&) {
      throw ParamsError("malformed lambda entry \"" + s + "\" (expected an integer or \"p/2\")");
    }
  }
  throw ParamsError("lambda entries must be numbers or \"p/2\" strings");
}

std::vector<Coord> int_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParamsError(what + " must be an integer array");
  std::vector<Coord> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParamsError(what + " must be an integer array");
    out.push_back(x.get<Coord>());
  }
  return out;
}

std::size_t resolve_chi(const RealGroupData& g, const TemperedParams& p) {
  auto c = forced_chi(g, p.lambda, p.rm_plus);
  if (!c) throw ParamsError("chi is not determined by lambda; give \"chi\" explicitly");
  return *c;
}

TemperedParams parse_raw(const RealGroupData& g, const json& doc) {
  TemperedParams p;
  const json& jl = doc.at("lambda");
  if (!jl.is_array()) throw ParamsError("lambda must be an array");
  std::vector<Coord> d;
  for (const auto& x : jl) d.push_back(doubled_coordinate(x));
  p.lambda = HalfWeight(Lattice::tM, d);
  if (!doc.contains("rmplus")) throw ParamsError("raw parameters need \"rmplus\"");
  const json& jr = doc.at("rmplus");
  if (!jr.is_array()) throw ParamsError("rmplus must be an array of weights");
  for (const auto& r : jr) p.rm_plus.emplace_back(Lattice::tM, int_vector(r, "rmplus entry"));
  if (doc.contains("nu")) p.nu = Weight(Lattice::a, int_vector(doc.at("nu"), "nu"));
  else p.nu = Weight::zero(Lattice::a, g.dim_a);
  if (doc.contains("chi")) {
    if (!doc.at("chi").is_number_integer() || doc.at("chi").get<long long>() < 0)
      throw ParamsError("chi must be a nonnegative integer");
    p.chi = doc.at("chi").get<std::size_t>();
  } else {
    p.chi = resolve_chi(g, p);
  }
  return p;
}

std::string get_string(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_string()) throw ParamsError(std::string("\"") + key + "\" must be a string");
  return doc.at(key).get<std::string>();
}

Coord get_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer())
    throw ParamsError(std::string("\"") + key + "\" must be an integer");
  return doc.at(key).get<Coord>();
}

void require_group(const RealGroupData& g, std::size_t rank_tM, std::size_t dim_a) {
  if (g.m.rank() != rank_tM || g.dim_a != dim_a)
    throw ParamsError("friendly parameters do not fit group data \"" + g.name + "\"");
}

}  // namespace

std::optional<std::size_t> forced_chi(const RealGroupData& g, const HalfWeight& lambda,
                                      const std::vector<Weight>& rm_plus) {
  TemperedParams probe{lambda, rm_plus, 0, Weight::zero(Lattice::a, g.dim_a)};
  Weight base;
  try {
    base = base_weight(g, probe);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < g.zmprime.table().size(); ++j) {
    if (!g.zmprime.compatible(base, j)) continue;
    if (found) return std::nullopt;
    found = j;
  }
  return found;
}

TemperedParams sl2_compact_params(const RealGroupData& g, int n, bool plus) {
  require_group(g, 1, 0);
  if (n < 0) throw ParamsError("n must be nonnegative");
  TemperedParams p;
  const Coord s = plus ? 1 : -1;
  p.lambda = HalfWeight(Weight(Lattice::tM, {s * n}));
  p.rm_plus = {Weight(Lattice::tM, {2 * s})};
  p.nu = Weight::zero(Lattice::a, 0);
  p.chi = resolve_chi(g, p);
  return p;
}

TemperedParams sl2_split_params(const RealGroupData& g, bool spherical, Coord nu) {
  require_group(g, 0, 1);
  TemperedParams p;
  p.lambda = HalfWeight::zero(Lattice::tM, 0);
  p.nu = Weight(Lattice::a, {nu});
  // characters of {+-I} indexed by the exponent at -I
  auto plus = g.zmprime.table().find({0});
  auto minus = g.zmprime.table().find({1});
  if (!plus || !minus) throw ParamsError("group data has no +-I characters");
  p.chi = spherical ? *plus : *minus;
  return p;
}

std::vector<Weight> su21_chamber(SU21Chamber c) {
  const Weight alpha(Lattice::tM, {1, -1}), beta1(Lattice::tM, {2, 1}), beta2(Lattice::tM, {1, 2});
  switch (c) {
    case SU21Chamber::holomorphic: return {alpha, beta1, beta2};
    case SU21Chamber::middle: return {alpha, beta1, -beta2};
    case SU21Chamber::antiholomorphic: return {alpha, -beta1, -beta2};
  }
  return {};
}

TemperedParams su21_params(const RealGroupData& g, SU21Chamber c, Coord a, Coord b) {
  require_group(g, 2, 0);
  TemperedParams p;
  p.lambda = HalfWeight(Weight(Lattice::tM, {a, b}));
  p.rm_plus = su21_chamber(c);
  p.nu = Weight::zero(Lattice::a, 0);
  p.chi = resolve_chi(g, p);
  return p;
}

TemperedParams parse_params(const RealGroupData& g, const json& doc) {
  if (!doc.is_object()) throw ParamsError("parameters must be a JSON object");
  try {
    if (doc.contains("lambda") && doc.contains("rmplus")) return parse_raw(g, doc);

    if (g.name == "sl2r-compact") {
      const std::string series = get_string(doc, "series");
      const std::string sign = doc.contains("sign") ? get_string(doc, "sign") : "+";
      if (sign != "+" && sign != "-") throw ParamsError("\"sign\" must be \"+\" or \"-\"");
      if (series == "discrete") {
        Coord n = get_int(doc, "n");
        if (n < 1) throw ParamsError("discrete series need n >= 1");
        return sl2_compact_params(g, int(n), sign == "+");
      }
      if (series == "limit") return sl2_compact_params(g, 0, sign == "+");
      throw ParamsError("\"series\" must be \"discrete\" or \"limit\"");
    }
    if (g.name == "sl2r-split") {
      const std::string chi = get_string(doc, "chi");
      if (chi != "plus" && chi != "minus") throw ParamsError("\"chi\" must be \"plus\" or \"minus\"");
      Coord nu = doc.contains("nu") ? get_int(doc, "nu") : 0;
      return sl2_split_params(g, chi == "plus", nu);
    }
    if (g.name == "su21-compact") {
      const std::string ch = get_string(doc, "chamber");
      SU21Chamber c;
      if (ch == "holomorphic") c = SU21Chamber::holomorphic;
      else if (ch == "middle") c = SU21Chamber::middle;
      else if (ch == "antiholomorphic") c = SU21Chamber::antiholomorphic;
      else throw ParamsError("\"chamber\" must be holomorphic, middle or antiholomorphic");
      auto l = int_vector(doc.at("lambda"), "lambda");
      if (l.size() != 2) throw ParamsError("lambda must have two entries");
      return su21_params(g, c, l[0], l[1]);
    }
  } catch (const json::exception& e) {
    throw ParamsError(std::string("malformed parameters: ") + e.what());
  }
  throw ParamsError("group \"" + g.name + "\" has no friendly parameter names; use {\"lambda\", \"rmplus\", \"chi\"}");
}

json params_to_json(const TemperedParams& p) {
  json lambda = json::array();
  for (Coord d : p.lambda.doubled()) {
    if (d % 2 == 0) lambda.push_back(d / 2);
    else lambda.push_back(std::to_string(d) + "/2");
  }
  json rm = json::array();
  for (const auto& r : p.rm_plus) rm.push_back(r.coords());
  return json{{"lambda", lambda}, {"rmplus", rm}, {"chi", p.chi}, {"nu", p.nu.coords()}};
}

}  // namespace ktype
