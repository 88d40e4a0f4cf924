#pragma once

// K-types of a connected compact K: dominant weights, Weyl dimensions,
// Freudenthal weight multiplicities and restriction to H_M.

#include <vector>

#include "ktype/charring.hpp"
#include "ktype/rootdata.hpp"

namespace ktype {

struct KType {
  Weight highest;

  auto operator<=>(const KType&) const = default;
};

/// Throws std::invalid_argument unless the weight is k-dominant.
KType make_ktype(const RealGroupData& g, Weight highest);

/// Dominant weights with max-norm <= norm_cutoff, in lexicographic order.
std::vector<KType> enumerate_ktypes(const RealGroupData& g, Coord norm_cutoff);

Integer weyl_dimension(const RealGroupData& g, const KType& delta);

/// Dominant W-conjugate of mu.
Weight dominant_conjugate(const RootSystem& rs, const Weight& mu);

/// Weight multiplicities of the irreducible K-module, over the ungraded ring of t.
FormalCharacter weight_multiplicities(const RealGroupData& g, const KType& delta);

/// Ungraded character ring of H_M (t_M weights with the Z_M' table).
RingPtr hm_exact_ring(const RealGroupData& g);

/// The K-type as an H_M-module.
FormalCharacter restrict_to_HM(const RealGroupData& g, const KType& delta);

}  // namespace ktype
