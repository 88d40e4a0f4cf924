#pragma once

// Parameter documents for the CLI and test suites.
//
// Raw form (any group):
//   {"lambda": [...], "rmplus": [[...], ...], "chi": j, "nu": [...]}
// lambda entries are integers, halves as numbers (1.5) or strings ("3/2");
// chi may be omitted when exactly one character of Z_M' is compatible; nu
// defaults to 0.
//
// Friendly forms, keyed by group name:
//   sl2r-compact  {"series": "discrete", "n": 3, "sign": "+"} or {"series": "limit", "sign": "-"}
//   sl2r-split    {"chi": "plus" | "minus", "nu": 1}
//   su21-compact  {"chamber": "holomorphic" | "middle" | "antiholomorphic", "lambda": [a, b]}

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ktype/blattner.hpp"

namespace ktype {

class ParamsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

TemperedParams parse_params(const RealGroupData& g, const nlohmann::json& doc);

/// The unique Z_M' character compatible with lambda - rho_c + rho_n, if unique.
std::optional<std::size_t> forced_chi(const RealGroupData& g, const HalfWeight& lambda, const std::vector<Weight>& rm_plus);

nlohmann::json params_to_json(const TemperedParams& p);

enum class SU21Chamber { holomorphic, middle, antiholomorphic };

/// Positive system of the given chamber in su21-compact coordinates.
std::vector<Weight> su21_chamber(SU21Chamber c);
/// Discrete series or limit with Harish-Chandra parameter (a, b) in the chamber.
TemperedParams su21_params(const RealGroupData& g, SU21Chamber c, Coord a, Coord b);

TemperedParams sl2_compact_params(const RealGroupData& g, int n, bool plus);
TemperedParams sl2_split_params(const RealGroupData& g, bool spherical, Coord nu);

}  // namespace ktype
