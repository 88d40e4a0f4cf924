#include "ktype/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ktype {

namespace {

using json = nlohmann::json;

std::string show(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

void note(CheckLog* log, const std::string& name) {
  if (log) log->push_back(name);
}

bool is_symmetric_positive_definite(const IntMatrix& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i].size() != n) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (g[i][j] != g[j][i]) return false;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, std::vector<Coord>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = g[i][j];
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

std::size_t rational_rank(const std::vector<Weight>& vs) {
  if (vs.empty()) return 0;
  std::vector<RatVector> m;
  for (const auto& v : vs) {
    RatVector row;
    for (Coord c : v.coords()) row.emplace_back(c);
    m.push_back(row);
  }
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == Rational(0)) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(Lattice lattice, std::size_t rank, std::vector<Weight> roots, std::vector<Weight> positives,
                       std::optional<std::vector<Weight>> simples, std::optional<IntMatrix> gram,
                       const std::string& label, CheckLog* log)
    : lattice_(lattice),
      rank_(rank),
      roots_(std::move(roots)),
      positives_(std::move(positives)),
      gram_(gram ? std::move(*gram) : identity_matrix(rank)) {
  if (simples) simples_ = std::move(*simples);
  else simples_ = simple_roots_of(positives_);
  validate(label, log);
}

void RootSystem::validate(const std::string& label, CheckLog* log) {
  auto fail = [&](const std::string& inv, const std::string& detail) {
    throw InvariantError(label + ": " + inv, detail);
  };
  auto check_rank = [&](const std::vector<Weight>& ws, const char* what) {
    for (const auto& w : ws)
      if (w.rank() != rank_ || w.lattice() != lattice_)
        throw SchemaError(label + "." + what + ": weight " + show(w) + " does not have rank " + std::to_string(rank_));
  };
  check_rank(roots_, "roots");
  check_rank(positives_, "positives");
  check_rank(simples_, "simples");

  if (gram_.size() != rank_ || !is_symmetric_positive_definite(gram_))
    fail("gram", "inner product matrix must be symmetric positive definite of size rank");
  note(log, label + ": gram");

  std::set<Weight> root_set(roots_.begin(), roots_.end());
  if (root_set.size() != roots_.size()) fail("closure under negation", "duplicate root");
  for (const auto& r : roots_) {
    if (r.is_zero()) fail("closure under negation", "zero is not a root");
    if (!root_set.count(-r)) fail("closure under negation", "root " + show(r) + " has no negative");
  }
  note(log, label + ": closure under negation");

  if (!is_positive_system(roots_, positives_)) fail("positive system", "positives must contain exactly one of each pair +-alpha");
  if (!positive_functional(rank_, positives_)) fail("positive system", "positives do not lie in an open half-space");
  note(log, label + ": positive system");

  for (const auto& s : simples_)
    if (!is_positive(s)) fail("simple generation", "simple root " + show(s) + " is not positive");
  if (rational_rank(simples_) != simples_.size()) fail("simple generation", "simple roots are linearly dependent");
  KostantCounter over_simples(simples_);
  for (const auto& p : positives_)
    if (over_simples(p) == 0) fail("simple generation", "positive root " + show(p) + " is not a nonnegative combination of simples");
  note(log, label + ": simple generation");

  for (const auto& a : roots_) {
    for (const auto& b : roots_) {
      Rational n = coroot_pairing(b.coords(), a);
      if (n.denominator() != 1)
        fail("Weyl closure", "non-crystallographic pairing of " + show(b) + " with coroot of " + show(a));
      Weight img = b - Coord(n.numerator()) * a;
      if (!root_set.count(img)) fail("Weyl closure", "s_" + show(a) + " maps " + show(b) + " outside the roots");
    }
  }
  note(log, label + ": Weyl closure");
}

Coord RootSystem::inner(const std::vector<Coord>& a, const std::vector<Coord>& b) const {
  if (a.size() != rank_ || b.size() != rank_) throw LatticeError("inner product of weights of wrong rank");
  Coord s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

Rational RootSystem::coroot_pairing(const std::vector<Coord>& mu, const Weight& alpha) const {
  Coord aa = inner(alpha.coords(), alpha.coords());
  if (aa == 0) throw std::invalid_argument("coroot of a zero vector");
  return Rational(2 * inner(mu, alpha.coords()), aa);
}

IntMatrix RootSystem::reflection_matrix(const Weight& alpha) const {
  // s(mu) = mu - <mu, alpha-coroot> alpha; column j is the image of e_j
  IntMatrix s = identity_matrix(rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    std::vector<Coord> e(rank_, 0);
    e[j] = 1;
    Rational n = coroot_pairing(e, alpha);
    if (n.denominator() != 1)
      throw InvariantError("coroot integrality", "reflection in " + show(alpha) + " does not preserve the lattice");
    for (std::size_t i = 0; i < rank_; ++i) s[i][j] -= n.numerator() * alpha[i];
  }
  return s;
}

Weight RootSystem::reflect(const Weight& mu, const Weight& alpha) const {
  Rational n = coroot_pairing(mu.coords(), alpha);
  if (n.denominator() != 1) throw InvariantError("coroot integrality", "reflection of " + show(mu) + " leaves the lattice");
  return mu - Coord(n.numerator()) * alpha;
}

bool RootSystem::contains(const Weight& w) const { return std::find(roots_.begin(), roots_.end(), w) != roots_.end(); }

bool RootSystem::is_positive(const Weight& w) const {
  return std::find(positives_.begin(), positives_.end(), w) != positives_.end();
}

bool is_positive_system(std::span<const Weight> roots, std::span<const Weight> candidate) {
  std::set<Weight> cand(candidate.begin(), candidate.end());
  if (cand.size() != candidate.size()) return false;
  std::set<Weight> all(roots.begin(), roots.end());
  for (const auto& c : cand)
    if (!all.count(c)) return false;
  for (const auto& r : all)
    if (cand.count(r) + cand.count(-r) != 1) return false;
  return true;
}

std::vector<Weight> simple_roots_of(std::span<const Weight> positives) {
  std::set<Weight> pos(positives.begin(), positives.end());
  std::vector<Weight> out;
  for (const auto& p : positives) {
    bool decomposable = false;
    for (const auto& q : positives)
      if (q != p && pos.count(p - q)) decomposable = true;
    if (!decomposable) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------- Weyl group

Weight WeylElement::apply(const Weight& w) const { return Weight(w.lattice(), ktype::apply(matrix, w.coords())); }

HalfWeight WeylElement::apply(const HalfWeight& w) const {
  return HalfWeight(w.lattice(), ktype::apply(matrix, w.doubled()));
}

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  constexpr std::size_t kMaxOrder = 100000;
  std::vector<IntMatrix> gens;
  for (const auto& s : rs.simples()) {
    IntMatrix r = rs.reflection_matrix(s);
    for (const auto& root : rs.roots()) {
      Weight img(root.lattice(), ktype::apply(r, root.coords()));
      if (!rs.contains(img)) throw InvariantError("Weyl closure", "reflection closure fails");
    }
    gens.push_back(std::move(r));
  }
  std::vector<WeylElement> out{{identity_matrix(rs.rank()), 1}};
  std::set<IntMatrix> seen{out.front().matrix};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      IntMatrix next = multiply(g, out[i].matrix);
      if (seen.insert(next).second) {
        if (out.size() >= kMaxOrder) throw InvariantError("Weyl closure", "generated group is not finite");
        out.push_back({std::move(next), -out[i].det});
      }
    }
  }
  return out;
}

HalfWeight rho_half_sum(Lattice lattice, std::size_t rank, std::span<const Weight> roots) {
  std::vector<Coord> sum(rank, 0);
  for (const auto& r : roots) {
    if (r.rank() != rank || r.lattice() != lattice) throw LatticeError("rho of roots of a different lattice");
    for (std::size_t i = 0; i < rank; ++i) sum[i] += r[i];
  }
  return HalfWeight(lattice, std::move(sum));
}

bool validate_dominant(const RootSystem& rs, const Weight& mu) {
  for (const auto& s : rs.simples())
    if (rs.inner(mu, s) < 0) return false;
  return true;
}

bool validate_dominant(const RootSystem& rs, const HalfWeight& mu) {
  for (const auto& s : rs.simples())
    if (rs.inner(mu.doubled(), s.coords()) < 0) return false;
  return true;
}

// ---------------------------------------------------------------- Z_M'

ZMPrime::ZMPrime(int order, std::vector<RatVector> generators, ZCharTable table, const IntMatrix& tM_in_t,
                 std::size_t rank_t, std::size_t rank_tM, CheckLog* log)
    : generators_(std::move(generators)), table_(std::move(table)) {
  if (table_.order() != order) throw InvariantError("Z_M' order", "character table order disagrees");
  if (table_.generator_count() != generators_.size())
    throw SchemaError("zmprime.generators: one char_table_row per generator expected");
  for (const auto& g : generators_)
    if (g.size() != rank_t) throw SchemaError("zmprime.generators.v: length must equal k.rank");

  // Enumerate the group generated by the v's inside t / lattice.
  std::vector<long long> gen_order;
  long long product = 1;
  for (const auto& g : generators_) {
    long long o = 1;
    for (const auto& x : g) o = std::lcm(o, x.denominator());
    gen_order.push_back(o);
    const std::size_t gi = gen_order.size() - 1;
    for (std::size_t j = 0; j < table_.size(); ++j)
      if ((o * table_.rows()[gi][j]) % order != 0)
        throw InvariantError("Z_M' character table", "character " + std::to_string(j) + " is not trivial on g^" +
                                                         std::to_string(o) + " for generator " + std::to_string(gi));
    product *= o;
    if (product > 100000) throw InvariantError("Z_M' order", "generated group too large");
  }
  std::map<RatVector, std::size_t> index;
  std::vector<int> word(generators_.size(), 0);
  for (long long n = 0; n < product; ++n) {
    long long rest = n;
    for (std::size_t i = 0; i < word.size(); ++i) {
      word[i] = int(rest % gen_order[i]);
      rest /= gen_order[i];
    }
    RatVector v(rank_t, Rational(0));
    for (std::size_t i = 0; i < word.size(); ++i)
      for (std::size_t k = 0; k < rank_t; ++k) v[k] += Rational(word[i]) * generators_[i][k];
    for (auto& x : v) x = frac(x);
    auto [it, inserted] = index.emplace(v, elements_.size());
    if (inserted) {
      elements_.push_back({word, v, std::nullopt});
    } else {
      // relation among generators: every character must agree on both words
      const auto& first = elements_[it->second];
      for (std::size_t j = 0; j < table_.size(); ++j) {
        Element probe{word, v, std::nullopt};
        if (value(j, probe) != value(j, first))
          throw InvariantError("Z_M' character table", "character " + std::to_string(j) +
                                                           " is not a function on the group (relation violated)");
      }
    }
  }
  if (elements_.size() != std::size_t(order))
    throw InvariantError("Z_M' order", "generators produce " + std::to_string(elements_.size()) +
                                           " elements, declared order " + std::to_string(order));
  note(log, "Z_M' order");

  if (table_.size() != std::size_t(order))
    throw InvariantError("Z_M' character table", "an abelian group of order " + std::to_string(order) + " has " +
                                                     std::to_string(order) + " characters");
  std::set<std::vector<int>> columns;
  for (std::size_t j = 0; j < table_.size(); ++j) {
    std::vector<int> col;
    for (const auto& z : elements_) col.push_back(value(j, z));
    if (!columns.insert(col).second) throw InvariantError("Z_M' character table", "two characters coincide");
  }
  note(log, "Z_M' character table");

  // Membership in T_M: v == R^T u modulo the lattice of t.
  const IntMatrix rt = transpose(tM_in_t, rank_t);
  std::vector<RatVector> a(rank_t, RatVector(rank_tM));
  for (std::size_t i = 0; i < rank_t; ++i)
    for (std::size_t j = 0; j < rank_tM; ++j) a[i][j] = Rational(rt[i][j]);
  std::size_t shifts = 1;
  for (std::size_t i = 0; i < rank_t; ++i) shifts *= 3;
  for (auto& z : elements_) {
    for (std::size_t s = 0; s < shifts && !z.in_tM; ++s) {
      RatVector b = z.v;
      std::size_t rest = s;
      for (std::size_t i = 0; i < rank_t; ++i) {
        b[i] += Rational(Coord(rest % 3) - 1);
        rest /= 3;
      }
      if (rank_tM == 0) {
        if (std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == Rational(0); })) z.in_tM = RatVector{};
      } else {
        z.in_tM = solve_rational(a, b);
      }
    }
  }
}

int ZMPrime::value(std::size_t j, const Element& z) const {
  const auto vals = table_.values(j);
  long long e = 0;
  for (std::size_t i = 0; i < z.word.size(); ++i) e += (long long)z.word[i] * vals[i];
  return int(((e % order()) + order()) % order());
}

std::optional<std::size_t> ZMPrime::character_of(const Weight& mu) const {
  std::vector<int> vals;
  for (const auto& g : generators_) {
    if (g.size() != mu.rank()) throw LatticeError("Z_M' evaluation of a weight of wrong rank");
    Rational r(0);
    for (std::size_t k = 0; k < g.size(); ++k) r += Rational(mu[k]) * g[k];
    Rational e = frac(r) * Rational(order());
    if (e.denominator() != 1) return std::nullopt;
    vals.push_back(int(e.numerator()));
  }
  return table_.find(vals);
}

bool ZMPrime::compatible(const Weight& tM_weight, std::size_t j) const {
  if (j >= table_.size()) return false;
  for (const auto& z : elements_) {
    if (!z.in_tM) continue;
    if (z.in_tM->size() != tM_weight.rank()) throw LatticeError("compatibility check with a weight of wrong rank");
    Rational r(0);
    for (std::size_t k = 0; k < tM_weight.rank(); ++k) r += Rational(tM_weight[k]) * (*z.in_tM)[k];
    if (frac(r) != Rational(value(j, z), order())) return false;
  }
  return true;
}

// ---------------------------------------------------------------- RealGroupData

bool RealGroupData::is_compact(const Weight& m_root) const {
  const auto& rs = m.roots();
  auto it = std::find(rs.begin(), rs.end(), m_root);
  if (it == rs.end()) throw std::invalid_argument("not a root of m: " + show(m_root));
  return m_compact[std::size_t(it - rs.begin())];
}

std::vector<Weight> RealGroupData::compact_among(std::span<const Weight> m_roots) const {
  std::vector<Weight> out;
  for (const auto& r : m_roots)
    if (is_compact(r)) out.push_back(r);
  return out;
}

std::vector<Weight> RealGroupData::noncompact_among(std::span<const Weight> m_roots) const {
  std::vector<Weight> out;
  for (const auto& r : m_roots)
    if (!is_compact(r)) out.push_back(r);
  return out;
}

Weight RealGroupData::restrict_to_tM(const Weight& t_weight) const {
  if (t_weight.lattice() != Lattice::t || t_weight.rank() != k.rank())
    throw LatticeError("restriction expects a weight of t");
  return Weight(Lattice::tM, ktype::apply(tM_in_t, t_weight.coords()));
}

HMCharacter RealGroupData::hm_character_of(const Weight& t_weight) const {
  Weight w = restrict_to_tM(t_weight);
  auto j = zmprime.character_of(t_weight);
  if (!j) throw InvariantError("Z_M' compatibility", "value of Z_M' on " + show(t_weight) + " matches no character");
  return {std::move(w), *j};
}

// ---------------------------------------------------------------- loader

namespace {

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError("missing field " + (path.empty() ? key : path + "." + key));
  return *it;
}

Coord as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return j.get<Coord>();
}

std::vector<Coord> as_int_vector(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an integer array");
  std::vector<Coord> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Weight> as_weights(const json& j, Lattice l, std::size_t rank, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of weights");
  std::vector<Weight> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    auto c = as_int_vector(j[i], p);
    if (c.size() != rank) throw SchemaError(p + ": expected " + std::to_string(rank) + " coordinates");
    out.emplace_back(l, std::move(c));
  }
  return out;
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    double x = j.get<double>();
    for (long long d = 1; d <= 1000; ++d) {
      double n = std::round(x * double(d));
      if (std::abs(x * double(d) - n) < 1e-9) return Rational((long long)n, d);
    }
    throw SchemaError(path + ": cannot read " + j.dump() + " as a rational; write it as \"p/q\"");
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t used = 0;
      auto slash = s.find('/');
      long long p = std::stoll(s.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
      long long q = 1;
      if (slash != std::string::npos) {
        q = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1 || q == 0) throw std::invalid_argument(s);
      }
      return Rational(p, q);
    } catch (const std::logic_error&) {
      throw SchemaError(path + ": malformed rational \"" + s + "\"");
    }
  }
  throw SchemaError(path + ": expected a rational (integer, number or \"p/q\")");
}

int as_root_of_unity_exponent(const json& j, int order, const std::string& path) {
  if (j.is_number_integer()) {
    long long e = j.get<long long>();
    return int(((e % order) + order) % order);
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    const double re = j[0].get<double>(), im = j[1].get<double>();
    const double turn = std::atan2(im, re) / (2 * std::numbers::pi);
    long long e = std::llround(turn * order);
    const double angle = 2 * std::numbers::pi * double(e) / order;
    if (std::abs(std::cos(angle) - re) > 1e-9 || std::abs(std::sin(angle) - im) > 1e-9)
      throw SchemaError(path + ": " + j.dump() + " is not an order-" + std::to_string(order) + " root of unity");
    return int(((e % order) + order) % order);
  }
  throw SchemaError(path + ": expected an exponent or a [re, im] pair");
}

std::optional<IntMatrix> optional_gram(const json& obj, std::size_t rank, const std::string& path) {
  auto it = obj.find("gram");
  if (it == obj.end()) return std::nullopt;
  if (!it->is_array() || it->size() != rank) throw SchemaError(path + ".gram: expected a rank x rank matrix");
  IntMatrix g;
  for (std::size_t i = 0; i < rank; ++i) {
    auto row = as_int_vector((*it)[i], path + ".gram");
    if (row.size() != rank) throw SchemaError(path + ".gram: expected a rank x rank matrix");
    g.push_back(std::move(row));
  }
  return g;
}

std::size_t as_rank(const json& j, const std::string& path) {
  Coord r = as_int(j, path);
  if (r < 0) throw SchemaError(path + ": rank must be nonnegative");
  return std::size_t(r);
}

}  // namespace

RealGroupData load_group_data(std::istream& in, CheckLog* log) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not a JSON document (") + e.what() + ")");
  }
  if (!doc.is_object()) throw SchemaError("top level must be an object");

  const json& name = field(doc, "name", "");
  if (!name.is_string()) throw SchemaError("name: expected a string");

  const json& jk = field(doc, "k", "");
  const json& jm = field(doc, "m", "");
  const json& jr = field(doc, "restricted", "");
  const json& jt = field(doc, "tM_in_t", "");
  const json& jz = field(doc, "zmprime", "");
  const json& jd = field(doc, "dims", "");

  const std::size_t rank_t = as_rank(field(jk, "rank", "k"), "k.rank");
  auto k_roots = as_weights(field(jk, "roots", "k"), Lattice::t, rank_t, "k.roots");
  auto k_pos = as_weights(field(jk, "positives", "k"), Lattice::t, rank_t, "k.positives");
  auto k_simp = as_weights(field(jk, "simples", "k"), Lattice::t, rank_t, "k.simples");

  const std::size_t rank_tM = as_rank(field(jm, "rank", "m"), "m.rank");
  auto m_roots = as_weights(field(jm, "roots", "m"), Lattice::tM, rank_tM, "m.roots");
  auto m_pos = as_weights(field(jm, "positives", "m"), Lattice::tM, rank_tM, "m.positives");
  const json& jflags = field(jm, "compact_flags", "m");
  if (!jflags.is_array()) throw SchemaError("m.compact_flags: expected an array of booleans");
  std::vector<bool> flags;
  for (const auto& f : jflags) {
    if (!f.is_boolean()) throw SchemaError("m.compact_flags: expected an array of booleans");
    flags.push_back(f.get<bool>());
  }
  if (flags.size() != m_roots.size()) throw SchemaError("m.compact_flags: one flag per root of m expected");

  const std::size_t dim_a = as_rank(field(jr, "dim_a", "restricted"), "restricted.dim_a");
  auto r_roots = as_weights(field(jr, "roots", "restricted"), Lattice::a, dim_a, "restricted.roots");
  auto r_pos = as_weights(field(jr, "positives", "restricted"), Lattice::a, dim_a, "restricted.positives");

  if (!jt.is_array() || jt.size() != rank_tM)
    throw SchemaError("tM_in_t: expected " + std::to_string(rank_tM) + " rows (m.rank)");
  IntMatrix tM_in_t;
  for (std::size_t i = 0; i < rank_tM; ++i) {
    auto row = as_int_vector(jt[i], "tM_in_t[" + std::to_string(i) + "]");
    if (row.size() != rank_t) throw SchemaError("tM_in_t: rows must have k.rank entries");
    tM_in_t.push_back(std::move(row));
  }

  const Coord order = as_int(field(jz, "order", "zmprime"), "zmprime.order");
  if (order < 1) throw SchemaError("zmprime.order: must be positive");
  const json& jgens = field(jz, "generators", "zmprime");
  if (!jgens.is_array()) throw SchemaError("zmprime.generators: expected an array");
  std::vector<RatVector> gen_v;
  std::vector<std::vector<int>> rows;
  for (std::size_t g = 0; g < jgens.size(); ++g) {
    const std::string p = "zmprime.generators[" + std::to_string(g) + "]";
    const json& jv = field(jgens[g], "v", p);
    if (!jv.is_array()) throw SchemaError(p + ".v: expected an array of rationals");
    RatVector v;
    for (std::size_t i = 0; i < jv.size(); ++i) v.push_back(as_rational(jv[i], p + ".v"));
    gen_v.push_back(std::move(v));
    const json& jrow = field(jgens[g], "char_table_row", p);
    if (!jrow.is_array()) throw SchemaError(p + ".char_table_row: expected an array");
    std::vector<int> row;
    for (const auto& e : jrow) row.push_back(as_root_of_unity_exponent(e, int(order), p + ".char_table_row"));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    if (order != 1) throw SchemaError("zmprime.generators: a nontrivial group needs generators");
  } else {
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) throw SchemaError("zmprime: char_table_row lengths differ");
  }

  const Coord s_M = as_int(field(jd, "s_M", "dims"), "dims.s_M");
  const Coord dims_a = as_int(field(jd, "a", "dims"), "dims.a");
  note(log, "schema");

  RealGroupData g{
      name.get<std::string>(),
      RootSystem(Lattice::t, rank_t, std::move(k_roots), std::move(k_pos), std::move(k_simp),
                 optional_gram(jk, rank_t, "k"), "k", log),
      RootSystem(Lattice::tM, rank_tM, std::move(m_roots), std::move(m_pos), std::nullopt,
                 optional_gram(jm, rank_tM, "m"), "m", log),
      std::move(flags),
      dim_a,
      std::move(r_roots),
      std::move(r_pos),
      std::move(tM_in_t),
      ZMPrime(),
      int(s_M),
  };

  // Lattice of t preserved by the compact Weyl group.
  for (const auto& a : g.k.roots()) g.k.reflection_matrix(a);
  note(log, "k: coroot integrality");

  // Compact roots of m are the roots of (k_M, t_M): restrictions of roots of k.
  std::set<Weight> restricted_k;
  for (const auto& b : g.k.roots()) restricted_k.insert(g.restrict_to_tM(b));
  for (std::size_t i = 0; i < g.m.roots().size(); ++i)
    if (g.m_compact[i] && !restricted_k.count(g.m.roots()[i]))
      throw InvariantError("compact roots of (k_M, t_M)",
                           "compact root " + show(g.m.roots()[i]) + " is not the restriction of a root of k");
  for (std::size_t i = 0; i < g.m.roots().size(); ++i) {
    const Weight& r = g.m.roots()[i];
    if (g.is_compact(-r) != g.m_compact[i])
      throw InvariantError("compact roots of (k_M, t_M)", "root " + show(r) + " and its negative carry different labels");
  }
  note(log, "compact roots of (k_M, t_M)");

  // Restriction consistency: restricted lattice weights pair integrally with compact coroots.
  for (std::size_t k = 0; k < rank_t; ++k) {
    std::vector<Coord> e(rank_t, 0);
    e[k] = 1;
    Weight w = g.restrict_to_tM(Weight(Lattice::t, e));
    for (std::size_t i = 0; i < g.m.roots().size(); ++i) {
      if (!g.m_compact[i]) continue;
      if (g.m.coroot_pairing(w.coords(), g.m.roots()[i]).denominator() != 1)
        throw InvariantError("restriction consistency",
                             "restriction of basis weight " + std::to_string(k) + " pairs non-integrally with " +
                                 show(g.m.roots()[i]));
    }
  }
  note(log, "restriction consistency");

  {
    std::set<Weight> rs(g.restricted_roots.begin(), g.restricted_roots.end());
    for (const auto& r : g.restricted_roots)
      if (r.is_zero() || !rs.count(-r))
        throw InvariantError("restricted roots: closure under negation", "restricted root " + show(r));
    if (!is_positive_system(g.restricted_roots, g.restricted_positives))
      throw InvariantError("restricted roots: positive system", "positives must contain exactly one of each pair");
    if (!positive_functional(dim_a, g.restricted_positives))
      throw InvariantError("pointed cone", "no zeta in a is positive on every restricted positive root");
    note(log, "pointed cone");
  }
  if (dims_a != Coord(dim_a)) throw InvariantError("dims.a", "dims.a disagrees with restricted.dim_a");
  note(log, "dims.a");

  const std::size_t noncompact = std::count(g.m_compact.begin(), g.m_compact.end(), false);
  if (s_M % 2 != 0) throw InvariantError("sign factor parity", "dim s_M must be even (it is a complex vector space)");
  note(log, "sign factor parity");
  if (std::size_t(s_M) != noncompact)
    throw InvariantError("noncompact dimension", "dims.s_M = " + std::to_string(s_M) + " but m has " +
                                                     std::to_string(noncompact) + " noncompact roots");
  note(log, "noncompact dimension");

  ZCharTable table;
  try {
    table = rows.empty() ? ZCharTable() : ZCharTable(int(order), rows);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("zmprime: ") + e.what());
  }
  g.zmprime = ZMPrime(int(order), std::move(gen_v), std::move(table), g.tM_in_t, rank_t, rank_tM, log);

  // The t-lattice characters restricted to Z_M' agree with the table, and the
  // resulting pairs are characters of H_M.
  for (std::size_t k = 0; k < rank_t; ++k) {
    std::vector<Coord> e(rank_t, 0);
    e[k] = 1;
    Weight w(Lattice::t, e);
    auto j = g.zmprime.character_of(w);
    if (!j)
      throw InvariantError("Z_M' compatibility", "basis weight " + show(w) + " gives values on Z_M' outside the table");
    if (!g.zmprime.compatible(g.restrict_to_tM(w), *j))
      throw InvariantError("Z_M' compatibility", "basis weight " + show(w) + " disagrees with the table on T_M");
  }
  for (const auto& r : g.m.roots())
    if (!g.zmprime.compatible(r, g.zmprime.table().trivial()))
      throw InvariantError("Z_M' compatibility", "T_M cap Z_M' acts nontrivially on root " + show(r) + " of m");
  note(log, "Z_M' compatibility");

  return g;
}

RealGroupData load_group_data_file(const std::string& path, CheckLog* log) {
  std::ifstream in(path);
  if (!in) throw DataIOError("cannot open group-data file " + path);
  return load_group_data(in, log);
}

}  // namespace ktype
