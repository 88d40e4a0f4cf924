#include "ktype/charring.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ktype {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<Coord> primitive(std::vector<Coord> v) {
  Coord g = 0;
  for (Coord c : v) g = std::gcd(g, c < 0 ? -c : c);
  if (g > 1)
    for (auto& c : v) c /= g;
  return v;
}

bool strictly_positive(const std::vector<Coord>& zeta, std::span<const Weight> gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Weight& g) { return dot(zeta, g.coords()) > 0; });
}

// Enumerates the integer vectors on the boundary of the box [-r, r]^rank.
bool search_box(std::size_t rank, Coord r, std::span<const Weight> gens, std::vector<Coord>& out) {
  std::vector<Coord> v(rank, -r);
  while (true) {
    bool on_boundary = std::any_of(v.begin(), v.end(), [&](Coord c) { return c == r || c == -r; });
    if (on_boundary && strictly_positive(v, gens)) {
      out = primitive(v);
      return true;
    }
    std::size_t i = 0;
    while (i < rank && v[i] == r) v[i++] = -r;
    if (i == rank) return false;
    ++v[i];
  }
}

}  // namespace

// ---------------------------------------------------------------- ZCharTable

ZCharTable::ZCharTable(int order, std::vector<std::vector<int>> rows)
    : order_(order), rows_(std::move(rows)) {
  if (order_ < 1) throw std::invalid_argument("Z_M' order must be positive");
  ncols_ = rows_.empty() ? 1 : rows_.front().size();
  if (rows_.empty() && order_ != 1)
    throw std::invalid_argument("nontrivial Z_M' needs at least one generator");
  for (auto& row : rows_) {
    if (row.size() != ncols_) throw std::invalid_argument("ragged Z_M' character table");
    for (auto& e : row) e = mod(e, order_);
  }
}

std::vector<int> ZCharTable::values(std::size_t j) const {
  if (j >= ncols_) throw std::out_of_range("Z_M' character index out of range");
  std::vector<int> v;
  v.reserve(rows_.size());
  for (const auto& row : rows_) v.push_back(row[j]);
  return v;
}

std::optional<std::size_t> ZCharTable::find(const std::vector<int>& values) const {
  if (values.size() != rows_.size()) return std::nullopt;
  for (std::size_t j = 0; j < ncols_; ++j) {
    bool match = true;
    for (std::size_t g = 0; g < rows_.size() && match; ++g) match = rows_[g][j] == mod(values[g], order_);
    if (match) return j;
  }
  return std::nullopt;
}

std::size_t ZCharTable::require_found(const std::vector<int>& values) const {
  auto j = find(values);
  if (!j) throw std::invalid_argument("Z_M' character table is not closed under multiplication");
  return *j;
}

std::size_t ZCharTable::trivial() const { return require_found(std::vector<int>(rows_.size(), 0)); }

std::size_t ZCharTable::multiply(std::size_t a, std::size_t b) const {
  auto va = values(a), vb = values(b);
  for (std::size_t g = 0; g < va.size(); ++g) va[g] += vb[g];
  return require_found(va);
}

std::size_t ZCharTable::conjugate(std::size_t a) const {
  auto va = values(a);
  for (auto& e : va) e = -e;
  return require_found(va);
}

std::ostream& operator<<(std::ostream& os, const HMCharacter& c) {
  return os << c.tweight << "#" << c.zchar;
}

// ------------------------------------------------------------------ CharRing

CharRing::CharRing(Lattice lattice, std::size_t rank, ZCharTable zchars, std::vector<Coord> height_functional)
    : lattice_(lattice), rank_(rank), zchars_(std::move(zchars)), zeta_(std::move(height_functional)) {
  if (zeta_.size() != rank_) throw LatticeError("height functional has wrong rank");
}

std::shared_ptr<const CharRing> CharRing::graded_by_cone(Lattice lattice, std::size_t rank,
                                                         std::span<const Weight> generators,
                                                         ZCharTable zchars) {
  auto zeta = positive_functional(rank, generators);
  if (!zeta) throw UnboundedProduct("cone generators do not span a pointed cone");
  return std::make_shared<const CharRing>(lattice, rank, std::move(zchars), std::move(*zeta));
}

std::shared_ptr<const CharRing> CharRing::ungraded(Lattice lattice, std::size_t rank, ZCharTable zchars) {
  return std::make_shared<const CharRing>(lattice, rank, std::move(zchars), std::vector<Coord>(rank, 0));
}

Height CharRing::height(const Weight& w) const {
  if (w.lattice() != lattice_ || w.rank() != rank_)
    throw LatticeError("weight does not belong to this character ring");
  return dot(zeta_, w.coords());
}

void CharRing::check(const HMCharacter& c) const {
  if (c.tweight.lattice() != lattice_ || c.tweight.rank() != rank_)
    throw LatticeError("H_M-character weight does not belong to this character ring");
  if (c.zchar >= zchars_.size()) throw std::out_of_range("Z_M' character index out of range");
}

HMCharacter CharRing::trivial() const { return {Weight::zero(lattice_, rank_), zchars_.trivial()}; }

HMCharacter CharRing::multiply(const HMCharacter& a, const HMCharacter& b) const {
  return {a.tweight + b.tweight, zchars_.multiply(a.zchar, b.zchar)};
}

HMCharacter CharRing::dual(const HMCharacter& a) const { return {-a.tweight, zchars_.conjugate(a.zchar)}; }

bool CharRing::same_lattice(const CharRing& o) const {
  return lattice_ == o.lattice_ && rank_ == o.rank_ && zchars_ == o.zchars_;
}

// ----------------------------------------------------------- FormalCharacter

FormalCharacter::FormalCharacter(RingPtr ring, Terms terms, std::optional<Height> cutoff)
    : ring_(std::move(ring)), cutoff_(cutoff) {
  if (!ring_) throw std::invalid_argument("formal character without a ring");
  for (auto& [c, coeff] : terms) {
    ring_->check(c);
    if (coeff == 0) continue;
    if (cutoff_ && ring_->height(c.tweight) > *cutoff_)
      throw std::invalid_argument("term above the cutoff certificate");
    terms_.emplace(c, std::move(coeff));
  }
}

FormalCharacter FormalCharacter::one(RingPtr ring) {
  auto t = ring->trivial();
  return monomial(std::move(ring), std::move(t));
}

FormalCharacter FormalCharacter::monomial(RingPtr ring, HMCharacter c, Integer coeff) {
  Terms t;
  t.emplace(std::move(c), std::move(coeff));
  return FormalCharacter(std::move(ring), std::move(t));
}

Integer FormalCharacter::coefficient(const HMCharacter& c) const {
  Height h = ring_->height(c.tweight);
  if (cutoff_ && h > *cutoff_) {
    std::ostringstream msg;
    msg << "coefficient at " << c << " (height " << h << ") lies above the cutoff " << *cutoff_;
    throw InexactQuery(msg.str());
  }
  auto it = terms_.find(c);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Height> FormalCharacter::min_height() const {
  std::optional<Height> m;
  for (const auto& [c, coeff] : terms_) {
    Height h = ring_->height(c.tweight);
    if (!m || h < *m) m = h;
  }
  return m;
}

std::optional<Height> FormalCharacter::support_floor() const {
  auto m = min_height();
  if (cutoff_) {
    Height beyond = *cutoff_ + 1;
    if (!m || beyond < *m) m = beyond;
  }
  return m;
}

FormalCharacter FormalCharacter::truncated(Height cutoff) const {
  Height c = cutoff_ ? std::min(*cutoff_, cutoff) : cutoff;
  Terms t;
  for (const auto& [k, v] : terms_)
    if (ring_->height(k.tweight) <= c) t.emplace(k, v);
  return FormalCharacter(ring_, std::move(t), c);
}

FormalCharacter FormalCharacter::dual() const {
  if (!exact()) throw InexactQuery("the dual of a truncated character is not defined");
  Terms t;
  for (const auto& [k, v] : terms_) t.emplace(ring_->dual(k), v);
  return FormalCharacter(ring_, std::move(t));
}

bool FormalCharacter::operator==(const FormalCharacter& o) const {
  return *ring_ == *o.ring_ && terms_ == o.terms_ && cutoff_ == o.cutoff_;
}

std::ostream& operator<<(std::ostream& os, const FormalCharacter& c) {
  if (c.empty()) os << "0";
  bool first = true;
  for (const auto& [k, v] : c.terms()) {
    if (!first) os << " + ";
    first = false;
    os << v << "*e^" << k;
  }
  if (c.cutoff()) os << " [exact up to height " << *c.cutoff() << "]";
  return os;
}

// ---------------------------------------------------------------- operations

namespace {

void require_same_ring(const FormalCharacter& a, const FormalCharacter& b) {
  if (!a.ring()->same_lattice(*b.ring())) throw RingMismatch("formal characters over different lattices");
  if (*a.ring() != *b.ring())
    throw UnboundedProduct("formal characters graded by different cones cannot be combined");
}

}  // namespace

FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b) {
  require_same_ring(a, b);
  const auto& ring = a.ring();
  if ((a.exact() && a.empty()) || (b.exact() && b.empty())) return FormalCharacter(ring);

  std::optional<Height> cutoff;
  auto tighten = [&](Height c) { cutoff = cutoff ? std::min(*cutoff, c) : c; };
  if (a.cutoff()) tighten(*a.cutoff() + *b.support_floor());
  if (b.cutoff()) tighten(*b.cutoff() + *a.support_floor());

  FormalCharacter::Terms out;
  for (const auto& [ka, va] : a.terms()) {
    Height ha = ring->height(ka.tweight);
    for (const auto& [kb, vb] : b.terms()) {
      if (cutoff && ha + ring->height(kb.tweight) > *cutoff) continue;
      out[ring->multiply(ka, kb)] += va * vb;
    }
  }
  return FormalCharacter(ring, std::move(out), cutoff);
}

FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b) {
  require_same_ring(a, b);
  std::optional<Height> cutoff = a.cutoff();
  if (b.cutoff()) cutoff = cutoff ? std::min(*cutoff, *b.cutoff()) : *b.cutoff();
  FormalCharacter::Terms out;
  const auto& ring = a.ring();
  for (const auto* x : {&a, &b})
    for (const auto& [k, v] : x->terms())
      if (!cutoff || ring->height(k.tweight) <= *cutoff) out[k] += v;
  return FormalCharacter(ring, std::move(out), cutoff);
}

FormalCharacter char_neg(const FormalCharacter& a) {
  FormalCharacter::Terms out;
  for (const auto& [k, v] : a.terms()) out.emplace(k, -v);
  return FormalCharacter(a.ring(), std::move(out), a.cutoff());
}

FormalCharacter geometric_series(const RingPtr& ring, const Weight& root, Height cutoff) {
  if (root.is_zero()) throw std::invalid_argument("geometric series of the zero root");
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");
  Height step = ring->height(root);
  if (step <= 0) throw UnboundedProduct("root does not lie in the positive cone of the ring");
  FormalCharacter::Terms t;
  Weight w = Weight::zero(ring->lattice(), ring->rank());
  std::size_t triv = ring->zchars().trivial();
  for (Height h = 0; h <= cutoff; h += step) {
    t.emplace(HMCharacter{w, triv}, 1);
    w += root;
  }
  return FormalCharacter(ring, std::move(t), cutoff);
}

FormalCharacter graded_exterior(const RingPtr& ring, std::span<const Weight> weights) {
  auto result = FormalCharacter::one(ring);
  std::size_t triv = ring->zchars().trivial();
  for (const auto& w : weights) {
    FormalCharacter::Terms t;
    t[ring->trivial()] += 1;
    t[HMCharacter{w, triv}] -= 1;
    result = char_mul(result, FormalCharacter(ring, std::move(t)));
  }
  return result;
}

std::optional<std::vector<Coord>> positive_functional(std::size_t rank, std::span<const Weight> generators) {
  for (const auto& g : generators) {
    if (g.rank() != rank) throw LatticeError("cone generator has wrong rank");
    if (g.is_zero()) return std::nullopt;
  }
  if (generators.empty()) return std::vector<Coord>(rank, 0);
  std::vector<Coord> sum(rank, 0);
  for (const auto& g : generators)
    for (std::size_t i = 0; i < rank; ++i) sum[i] += g[i];
  sum = primitive(sum);
  if (strictly_positive(sum, generators)) return sum;
  std::vector<Coord> found;
  const Coord max_radius = rank <= 3 ? 12 : 4;
  for (Coord r = 1; r <= max_radius; ++r)
    if (search_box(rank, r, generators, found)) return found;
  return std::nullopt;
}

KostantCounter::KostantCounter(std::vector<Weight> roots) : roots_(std::move(roots)) {
  std::size_t rank = roots_.empty() ? 0 : roots_.front().rank();
  auto zeta = positive_functional(rank, roots_);
  if (!zeta) throw UnboundedProduct("partition roots do not lie in a pointed cone");
  zeta_ = std::move(*zeta);
  for (const auto& r : roots_) {
    if (r.lattice() != roots_.front().lattice()) throw LatticeError("partition roots in different lattices");
    root_heights_.push_back(dot(zeta_, r.coords()));
  }
}

Integer KostantCounter::operator()(const Weight& target) {
  if (roots_.empty()) return target.is_zero() ? 1 : 0;
  if (target.lattice() != roots_.front().lattice() || target.rank() != roots_.front().rank())
    throw LatticeError("partition target in a different lattice");
  Height h = dot(zeta_, target.coords());
  if (h < 0) return 0;
  return count(0, target, h);
}

Integer KostantCounter::count(std::size_t i, const Weight& target, Height h) {
  const Weight& r = roots_[i];
  const Height step = root_heights_[i];
  if (i + 1 == roots_.size()) {
    if (h % step != 0) return 0;
    return (h / step) * r == target ? 1 : 0;
  }
  auto key = std::make_pair(i, target);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Integer total = 0;
  Weight rest = target;
  for (Height left = h; left >= 0; left -= step) {
    total += count(i + 1, rest, left);
    rest -= r;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

Integer kostant_partition(const Weight& target, std::span<const Weight> roots) {
  KostantCounter counter(std::vector<Weight>(roots.begin(), roots.end()));
  return counter(target);
}

}  // namespace ktype
