#pragma once

// K-type multiplicities of basic (tempered) representations from
//   pi|_K = (L^2(K) (x) (Lambda s_M)^{-1} (x) Lambda k_M/t_M (x) C_{lambda - rho_c + rho_n} [x] chi_M)^{H_M}.
//
// The H_M virtual character is
//   V = e^{lambda - rho_c + rho_n} chi_M * prod_{compact a}(1 - e^a) * prod_{noncompact b} sum_n e^{n b}
// over the chosen positive system R_M^+, and the multiplicity of a K-type delta
// is dim (delta^* (x) V)^{H_M} = sum_{(mu, eps) in delta|H_M} mult * V(mu, eps).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktype/charring.hpp"
#include "ktype/ktype_table.hpp"
#include "ktype/ktypes.hpp"
#include "ktype/rootdata.hpp"

namespace ktype {

struct TemperedParams {
  HalfWeight lambda;            // on t_M
  std::vector<Weight> rm_plus;  // positive system of the roots of m
  std::size_t chi = 0;          // character of Z_M'
  Weight nu;                    // on a; does not enter K-multiplicities
};

enum class Verdict { nonzero, zero, invalid };

struct ParamVerdict {
  Verdict kind = Verdict::invalid;
  std::string reason;
};

const char* to_string(Verdict v);

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode { series, partition };

ParamVerdict validate_params(const RealGroupData& g, const TemperedParams& p);

/// lambda - rho_c + rho_n, which must be integral for valid parameters.
Weight base_weight(const RealGroupData& g, const TemperedParams& p);

/// Character ring of H_M graded by the noncompact roots of R_M^+.
RingPtr hm_graded_ring(const RealGroupData& g, const TemperedParams& p);

/// V truncated at the given height (exact when R_M^+ has no noncompact roots).
/// Throws std::invalid_argument if the cutoff lies below the base weight.
FormalCharacter hm_virtual_character(const RealGroupData& g, const TemperedParams& p, Height cutoff);

Integer ktype_multiplicity(const RealGroupData& g, const TemperedParams& p, const KType& delta,
                           Mode mode = Mode::partition);

/// Partition-mode evaluator reusing Kostant memo tables across K-types.
class MultiplicityEngine {
 public:
  MultiplicityEngine(const RealGroupData& g, const TemperedParams& p);

  /// Coefficient of V at an H_M-character.
  Integer coefficient(const HMCharacter& c);
  Integer multiplicity(const KType& delta);
  Integer multiplicity_series(const KType& delta) const;

 private:
  const RealGroupData& g_;
  TemperedParams p_;
  Weight base_;
  std::vector<std::pair<Weight, int>> shifts_;  // (sum of S, (-1)^{|S|}) over subsets S of compact roots
  KostantCounter counter_;
};

struct TableOptions {
  std::size_t series_spot_checks = 16;
};

/// Partition-mode table over enumerate_ktypes(window), spot-checked in series
/// mode. Zero verdict gives an empty table; invalid parameters throw.
KTypeTable ktype_table(const RealGroupData& g, const TemperedParams& p, Coord window, TableOptions opts = {});

/// Same table computed entirely in one mode.
KTypeTable ktype_table_mode(const RealGroupData& g, const TemperedParams& p, Coord window, Mode mode);

int sign_factor(const RealGroupData& g);

bool nu_independence_check(const RealGroupData& g, const TemperedParams& p, const Weight& nu1, const Weight& nu2,
                           Coord window);

/// sum_{w in W(compact roots of R_M^+)} det(w) e^{rho_c - w rho_c}, over the exact H_M ring.
FormalCharacter weyl_denominator_sum(const RealGroupData& g, const std::vector<Weight>& rm_plus);

/// graded_exterior over the compact roots of R_M^+, over the exact H_M ring.
FormalCharacter compact_exterior(const RealGroupData& g, const std::vector<Weight>& rm_plus);

}  // namespace ktype
