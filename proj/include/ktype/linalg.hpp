#pragma once

// Small exact linear algebra over Z and Q for lattice bookkeeping.

#include <boost/rational.hpp>

#include <optional>
#include <vector>

#include "ktype/weight.hpp"

namespace ktype {

using Rational = boost::rational<long long>;
using IntMatrix = std::vector<std::vector<Coord>>;
using RatVector = std::vector<Rational>;

/// Any solution x of A x = b (A is rows x cols), or nullopt if inconsistent.
std::optional<RatVector> solve_rational(const std::vector<RatVector>& a, const RatVector& b);

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m, std::size_t cols_if_empty = 0);
std::vector<Coord> apply(const IntMatrix& m, const std::vector<Coord>& v);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant (Bareiss).
Coord determinant(const IntMatrix& m);

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

}  // namespace ktype
