#pragma once

// Formal characters of H_M = T_M Z_M' with integer coefficients.
//
// A character of H_M is a pair (t_M-weight, Z_M'-character index). Infinite
// characters (products of geometric series) are carried as truncations with a
// cutoff certificate: every coefficient at height <= cutoff is exact, nothing
// above the cutoff is stored. Height is the linear functional <zeta, mu> of the
// ring, where zeta is strictly positive on the cone the series expand into.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ktype/weight.hpp"

namespace ktype {

using Integer = boost::multiprecision::cpp_int;
using Height = std::int64_t;

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a coefficient is requested above a cutoff certificate.
class InexactQuery : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnboundedProduct : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Character table of a finite abelian group given by generators.
///
/// rows()[g][j] is the exponent e with chi_j(g) = exp(2 pi i e / order).
/// Characters are identified with their value tuple on the generators.
class ZCharTable {
 public:
  /// The trivial group.
  ZCharTable() : order_(1), rows_(), ncols_(1) {}
  ZCharTable(int order, std::vector<std::vector<int>> rows);

  int order() const { return order_; }
  std::size_t size() const { return ncols_; }
  std::size_t generator_count() const { return rows_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Exponent tuple of character j at the generators.
  std::vector<int> values(std::size_t j) const;
  std::optional<std::size_t> find(const std::vector<int>& values) const;

  std::size_t trivial() const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t conjugate(std::size_t a) const;

  bool operator==(const ZCharTable&) const = default;

 private:
  std::size_t require_found(const std::vector<int>& values) const;

  int order_;
  std::vector<std::vector<int>> rows_;
  std::size_t ncols_;
};

struct HMCharacter {
  Weight tweight;
  std::size_t zchar = 0;

  auto operator<=>(const HMCharacter&) const = default;
};

std::ostream& operator<<(std::ostream& os, const HMCharacter& c);

/// Shared context of a family of formal characters: lattice, Z_M' table and
/// the height functional.
class CharRing {
 public:
  CharRing(Lattice lattice, std::size_t rank, ZCharTable zchars, std::vector<Coord> height_functional);

  /// Ring graded by a functional strictly positive on every generator.
  /// Throws UnboundedProduct if the generators do not span a pointed cone.
  static std::shared_ptr<const CharRing> graded_by_cone(Lattice lattice, std::size_t rank,
                                                        std::span<const Weight> generators,
                                                        ZCharTable zchars = {});
  /// Ring with the zero height functional; only exact (finite) characters.
  static std::shared_ptr<const CharRing> ungraded(Lattice lattice, std::size_t rank,
                                                  ZCharTable zchars = {});

  Lattice lattice() const { return lattice_; }
  std::size_t rank() const { return rank_; }
  const ZCharTable& zchars() const { return zchars_; }
  const std::vector<Coord>& height_functional() const { return zeta_; }

  Height height(const Weight& w) const;
  HMCharacter trivial() const;
  HMCharacter multiply(const HMCharacter& a, const HMCharacter& b) const;
  HMCharacter dual(const HMCharacter& a) const;

  /// Throws unless c lives in this ring's lattice and Z_M' table.
  void check(const HMCharacter& c) const;

  bool same_lattice(const CharRing& o) const;
  bool operator==(const CharRing&) const = default;

 private:

  Lattice lattice_;
  std::size_t rank_;
  ZCharTable zchars_;
  std::vector<Coord> zeta_;
};

using RingPtr = std::shared_ptr<const CharRing>;

/// Finitely supported (or truncated) integer combination of H_M-characters.
class FormalCharacter {
 public:
  using Terms = std::map<HMCharacter, Integer>;

  explicit FormalCharacter(RingPtr ring) : ring_(std::move(ring)) {}
  /// Drops zero coefficients; throws if a term lies above the cutoff.
  FormalCharacter(RingPtr ring, Terms terms, std::optional<Height> cutoff = std::nullopt);

  static FormalCharacter one(RingPtr ring);
  static FormalCharacter monomial(RingPtr ring, HMCharacter c, Integer coeff = 1);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  const std::optional<Height>& cutoff() const { return cutoff_; }
  bool exact() const { return !cutoff_.has_value(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient at c, or InexactQuery when height(c) exceeds the cutoff.
  Integer coefficient(const HMCharacter& c) const;
  std::optional<Height> min_height() const;
  /// Lower bound on the height of every term, stored or truncated away.
  std::optional<Height> support_floor() const;

  FormalCharacter truncated(Height cutoff) const;
  /// Negate weights and conjugate the Z-characters (contragredient).
  FormalCharacter dual() const;

  bool operator==(const FormalCharacter& o) const;

 private:
  RingPtr ring_;
  Terms terms_;
  std::optional<Height> cutoff_;
};

std::ostream& operator<<(std::ostream& os, const FormalCharacter& c);

/// Convolution product; the result cutoff keeps only coefficients whose every
/// contribution is known exactly.
FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter char_neg(const FormalCharacter& a);

/// sum_{n >= 0, height(n root) <= cutoff} e^{n root}, with cutoff certificate.
FormalCharacter geometric_series(const RingPtr& ring, const Weight& root, Height cutoff);

/// prod_alpha (1 - e^alpha), the graded exterior algebra of sum C_alpha.
FormalCharacter graded_exterior(const RingPtr& ring, std::span<const Weight> weights);

/// Primitive integral functional strictly positive on every generator, if any.
std::optional<std::vector<Coord>> positive_functional(std::size_t rank,
                                                     std::span<const Weight> generators);

/// Number of ways to write target as a nonnegative integer combination of
/// roots (a multiset). Roots must span a pointed cone.
Integer kostant_partition(const Weight& target, std::span<const Weight> roots);

/// Memoizing Kostant partition counter for many queries over one root multiset.
class KostantCounter {
 public:
  explicit KostantCounter(std::vector<Weight> roots);

  Integer operator()(const Weight& target);
  const std::vector<Weight>& roots() const { return roots_; }

 private:
  Integer count(std::size_t i, const Weight& target, Height h);

  std::vector<Weight> roots_;
  std::vector<Coord> zeta_;
  std::vector<Height> root_heights_;
  std::map<std::pair<std::size_t, Weight>, Integer> memo_;
};

}  // namespace ktype
