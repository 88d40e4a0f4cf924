#pragma once

// Structural data of a real reductive group G with maximal compact K and one
// theta-stable Cartan class H = T_M A: root systems of (k, t) and (m, t_M) with
// compact/noncompact labels, restricted roots on a, the restriction t* -> t_M*,
// and the finite group Z_M' with H_M = T_M Z_M'.
//
// Group structure is data: nothing here is derived from a classification. The
// loader validates internal consistency and names the invariant that fails.

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktype/charring.hpp"
#include "ktype/linalg.hpp"
#include "ktype/weight.hpp"

namespace ktype {

class GroupDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed document: missing field, wrong type, wrong shape.
class SchemaError : public GroupDataError {
 public:
  explicit SchemaError(const std::string& what) : GroupDataError("schema: " + what) {}
};

/// Well-formed document whose content violates a structural invariant.
class InvariantError : public GroupDataError {
 public:
  InvariantError(std::string invariant, const std::string& detail)
      : GroupDataError(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

class DataIOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Receives the name of every invariant as it is verified.
using CheckLog = std::vector<std::string>;

/// Finite crystallographic root system in a lattice with a W-invariant
/// integral inner product (the Gram matrix of the coordinate basis).
class RootSystem {
 public:
  /// Validates all invariants; simples are derived from positives when absent.
  /// `label` prefixes invariant names in errors and in the check log.
  RootSystem(Lattice lattice, std::size_t rank, std::vector<Weight> roots, std::vector<Weight> positives,
             std::optional<std::vector<Weight>> simples = std::nullopt, std::optional<IntMatrix> gram = std::nullopt,
             const std::string& label = "roots", CheckLog* log = nullptr);

  Lattice lattice() const { return lattice_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& positives() const { return positives_; }
  const std::vector<Weight>& simples() const { return simples_; }
  const IntMatrix& gram() const { return gram_; }

  Coord inner(const std::vector<Coord>& a, const std::vector<Coord>& b) const;
  Coord inner(const Weight& a, const Weight& b) const { return inner(a.coords(), b.coords()); }
  /// <mu, alpha-coroot> = 2 (mu, alpha) / (alpha, alpha), exactly.
  Rational coroot_pairing(const std::vector<Coord>& mu, const Weight& alpha) const;
  /// Reflection s_alpha as an integer matrix on coordinates; throws
  /// InvariantError("coroot integrality") if it does not preserve the lattice.
  IntMatrix reflection_matrix(const Weight& alpha) const;
  Weight reflect(const Weight& mu, const Weight& alpha) const;

  bool contains(const Weight& w) const;
  bool is_positive(const Weight& w) const;

 private:
  void validate(const std::string& label, CheckLog* log);

  Lattice lattice_;
  std::size_t rank_;
  std::vector<Weight> roots_;
  std::vector<Weight> positives_;
  std::vector<Weight> simples_;
  IntMatrix gram_;
};

struct WeylElement {
  IntMatrix matrix;  // acts on coordinate column vectors
  int det = 1;

  Weight apply(const Weight& w) const;
  HalfWeight apply(const HalfWeight& w) const;
};

/// All elements generated by the simple reflections, identity first.
std::vector<WeylElement> weyl_group(const RootSystem& rs);

/// Half the sum of the given roots, exact in the doubled lattice.
HalfWeight rho_half_sum(Lattice lattice, std::size_t rank, std::span<const Weight> roots);

/// True iff (mu, alpha) >= 0 for every simple root alpha.
bool validate_dominant(const RootSystem& rs, const Weight& mu);
bool validate_dominant(const RootSystem& rs, const HalfWeight& mu);

/// Positive-system check shared by the loader and parameter validation:
/// subset of roots, exactly one of +-alpha for each root.
bool is_positive_system(std::span<const Weight> roots, std::span<const Weight> candidate);
/// Positives that are not a sum of two positives.
std::vector<Weight> simple_roots_of(std::span<const Weight> positives);

/// Finite abelian Z_M' < K: generators as rational points of the torus t
/// (character value of a t-weight mu at g is exp(2 pi i <mu, v_g>)) together
/// with the character table of Z_M'.
class ZMPrime {
 public:
  struct Element {
    std::vector<int> word;                         // exponents of the generators
    RatVector v;                                   // point of t, coordinates in [0, 1)
    std::optional<RatVector> in_tM;                // t_M coordinates when the element lies in T_M
  };

  ZMPrime() = default;
  ZMPrime(int order, std::vector<RatVector> generators, ZCharTable table, const IntMatrix& tM_in_t,
          std::size_t rank_t, std::size_t rank_tM, CheckLog* log = nullptr);

  int order() const { return table_.order(); }
  const ZCharTable& table() const { return table_; }
  const std::vector<RatVector>& generators() const { return generators_; }
  const std::vector<Element>& elements() const { return elements_; }

  /// Exponent of character j at an element: chi_j(z) = exp(2 pi i e / order).
  int value(std::size_t j, const Element& z) const;
  /// Character of Z_M' obtained by restricting the t-weight mu, if any.
  std::optional<std::size_t> character_of(const Weight& mu) const;
  /// A pair (t_M-weight, character) defines a character of H_M iff the two
  /// agree on T_M cap Z_M'.
  bool compatible(const Weight& tM_weight, std::size_t j) const;

 private:
  std::vector<RatVector> generators_;
  ZCharTable table_;
  std::vector<Element> elements_;
};

struct RealGroupData {
  std::string name;
  RootSystem k;                  // roots of (k, t)
  RootSystem m;                  // roots of (m, t_M)
  std::vector<bool> m_compact;   // parallel to m.roots()
  std::size_t dim_a = 0;
  std::vector<Weight> restricted_roots;
  std::vector<Weight> restricted_positives;
  IntMatrix tM_in_t;             // rank(t_M) x rank(t)
  ZMPrime zmprime;
  int dim_s_M = 0;

  bool is_compact(const Weight& m_root) const;
  std::vector<Weight> compact_among(std::span<const Weight> m_roots) const;
  std::vector<Weight> noncompact_among(std::span<const Weight> m_roots) const;

  Weight restrict_to_tM(const Weight& t_weight) const;
  /// The H_M-character through which T_M Z_M' acts on the t-weight.
  HMCharacter hm_character_of(const Weight& t_weight) const;
  bool compatible(const HMCharacter& c) const { return zmprime.compatible(c.tweight, c.zchar); }
};

RealGroupData load_group_data(std::istream& in, CheckLog* log = nullptr);
RealGroupData load_group_data_file(const std::string& path, CheckLog* log = nullptr);

}  // namespace ktype
