#include <cmath>

#include "doctest.h"
#include "ktype/diracnum.hpp"
#include "ktype/oracles.hpp"

using namespace ktype;

namespace {

constexpr double kTol = 1e-6;

// d/dx + f x applied to exp(-f x^2 / 2) vanishes; the staggered scheme should
// annihilate the grid Gaussian up to O(h^2).
double residual_on_gaussian(const GridSpec& g, double f) {
  Eigen::MatrixXd a = oscillator_matrix(g, f);
  Eigen::VectorXd v(a.cols());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    const double x = g.node(std::size_t(j));
    v(j) = std::exp(-f * x * x / 2);
  }
  return (a * v).norm() / v.norm();
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_NOTHROW(GridSpec{8, 0.05}.validate());
  CHECK(GridSpec{8, 0.05}.points() == 321);
  CHECK(GridSpec{1, 0.5}.points() == 5);
  CHECK_THROWS_AS((GridSpec{1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{1, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{0, 0.1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{8, -0.1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{1, 0.3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(oscillator_1d(GridSpec{8, 8}, kTol), std::invalid_argument);
}

TEST_CASE("grid is symmetric through zero") {
  GridSpec g{8, 0.05};
  const std::size_t n = g.points();
  CHECK(n % 2 == 1);
  CHECK(std::abs(g.node(n / 2)) < 1e-12);
  CHECK(std::abs(g.node(n - 1) - 8.0) < 1e-9);
}

TEST_CASE("discrete operator annihilates the Gaussian to second order") {
  double prev = residual_on_gaussian(GridSpec{8, 0.2}, 1);
  for (double h : {0.1, 0.05, 0.025}) {
    double r = residual_on_gaussian(GridSpec{8, h}, 1);
    CHECK(r < prev / 3.5);
    prev = r;
  }
}

TEST_CASE("oscillator kernel at the default grid") {
  auto r = oscillator_1d(GridSpec{8, 0.05}, kTol);
  CHECK(r.kernel_dim_even == 1);
  CHECK(r.kernel_dim_odd == 0);
  CHECK(r.gaussian_l2_error < 1e-3);
  REQUIRE(r.smallest_singular_values.size() >= 2);
  CHECK(r.smallest_singular_values[1] > 0.5);
  // Spectrum of a^* a for the oscillator: 0, 2, 4, ... so sigma_2 ~ sqrt 2.
  CHECK(r.smallest_singular_values[1] == doctest::Approx(std::sqrt(2.0)).epsilon(0.01));
  CHECK(r.smallest_singular_values[2] == doctest::Approx(2.0).epsilon(0.01));
  CHECK(std::is_sorted(r.smallest_singular_values.begin(), r.smallest_singular_values.end()));
  CHECK(std::is_sorted(r.smallest_singular_values_odd.begin(), r.smallest_singular_values_odd.end()));
  CHECK(r.smallest_singular_values_odd.front() > 0.5);
}

TEST_CASE("refining the grid keeps the kernel and improves the Gaussian") {
  double prev = 1;
  for (double h : {0.2, 0.1, 0.05, 0.025}) {
    CAPTURE(h);
    auto r = oscillator_1d(GridSpec{8, h}, kTol);
    CHECK(r.kernel_dim_even == 1);
    CHECK(r.kernel_dim_odd == 0);
    CHECK(r.gaussian_l2_error < prev);
    prev = r.gaussian_l2_error;
  }
}

TEST_CASE("the growing solution is rejected") {
  for (double L : {6.0, 8.0, 10.0, 12.0}) {
    CAPTURE(L);
    CHECK(oscillator_1d(GridSpec{L, 0.05}, kTol).kernel_dim_odd == 0);
  }
}

TEST_CASE("kernel dimensions are stable under scaling the potential") {
  for (double f : {1.0, 2.0, 4.0}) {
    CAPTURE(f);
    auto r = oscillator_1d(GridSpec{8, 0.05}, kTol, f);
    CHECK(r.kernel_dim_even == 1);
    CHECK(r.kernel_dim_odd == 0);
    CHECK(r.gaussian_l2_error < 1e-3);
  }
}

TEST_CASE("inconclusive band") {
  // The smallest nonzero singular value sits near sqrt(2); a tolerance within
  // a factor 10 of it must refuse to decide.
  CHECK_THROWS_AS(oscillator_1d(GridSpec{8, 0.05}, 1.0), InconclusiveKernel);
  CHECK_THROWS_AS(oscillator_1d(GridSpec{8, 0.05}, 0.2), InconclusiveKernel);
  CHECK_THROWS_AS(oscillator_1d(GridSpec{8, 0.05}, 0), std::invalid_argument);
  CHECK_THROWS_AS(cylinder_sl2(Parity::even, 4, GridSpec{8, 0.05}, 1.0), InconclusiveKernel);
}

TEST_CASE("n-dimensional oscillator") {
  GridSpec g{8, 0.05};
  auto one = oscillator_nd(1, g, kTol);
  auto direct = oscillator_1d(g, kTol);
  CHECK(one.kernel_dim_even == direct.kernel_dim_even);
  CHECK(one.kernel_dim_odd == direct.kernel_dim_odd);
  CHECK(one.smallest_singular_values == direct.smallest_singular_values);
  CHECK_FALSE(one.explicit_2d.has_value());

  for (int n : {2, 3}) {
    auto r = oscillator_nd(n, GridSpec{6, 0.1}, kTol);
    CHECK(r.kernel_dim_even == 1);
    CHECK(r.kernel_dim_odd == 0);
  }
  CHECK_THROWS_AS(oscillator_nd(4, g, kTol), std::invalid_argument);
  CHECK_THROWS_AS(oscillator_nd(0, g, kTol), std::invalid_argument);
}

TEST_CASE("explicit 2-D operator") {
  auto r = oscillator_nd(2, GridSpec{6, 0.1}, kTol);
  REQUIRE(r.explicit_2d.has_value());
  const auto& e = *r.explicit_2d;
  CHECK(e.kernel_dim_even == 1);
  CHECK(e.kernel_dim_odd == 0);
  CHECK(e.gaussian_l2_error < 5e-3);
  REQUIRE(e.smallest_singular_values_even.size() >= 2);
  CHECK(e.smallest_singular_values_even[1] > 0.5);
}

TEST_CASE("2-D Laplacian has no cross terms between degrees 0 and 2") {
  // (D^+)^T D^+ is block diagonal on E00 + E11: the cross terms A^T (x) A^T
  // from the two odd targets cancel with opposite signs.
  GridSpec g{2, 0.25};
  auto d = oscillator_2d_even(g);
  const Eigen::Index n = Eigen::Index(g.points()), m = n - 1;
  CHECK(d.rows() == 2 * m * n);
  CHECK(d.cols() == n * n + m * m);
  Eigen::MatrixXd dd = Eigen::MatrixXd(d).transpose() * Eigen::MatrixXd(d);
  CHECK(dd.block(0, n * n, n * n, m * m).norm() < 1e-9);
}

TEST_CASE("cylinder examples") {
  GridSpec g{8, 0.05};
  auto even = cylinder_sl2(Parity::even, 6, g, kTol);
  std::map<Weight, Integer> e;
  for (Coord k : {-6, -4, -2, 0, 2, 4, 6}) e[Weight(Lattice::t, {k})] = 1;
  CHECK(even.entries == e);

  auto odd = cylinder_sl2(Parity::odd, 3, g, kTol);
  std::map<Weight, Integer> o;
  for (Coord k : {-3, -1, 1, 3}) o[Weight(Lattice::t, {k})] = 1;
  CHECK(odd.entries == o);

  CHECK(cylinder_sl2(Parity::odd, 0, g, kTol).entries.empty());
  CHECK_THROWS_AS(cylinder_sl2(Parity::odd, -1, g, kTol), std::invalid_argument);
}

TEST_CASE("cylinder equals the principal series oracle") {
  for (double f : {1.0, 2.0, 4.0}) {
    auto even = cylinder_sl2(Parity::even, 20, GridSpec{8, 0.05}, kTol, f);
    auto odd = cylinder_sl2(Parity::odd, 20, GridSpec{8, 0.05}, kTol, f);
    CHECK(oracle_match(even, SL2Series(SL2Kind::principal_spherical)).passed());
    CHECK(oracle_match(odd, SL2Series(SL2Kind::principal_nonspherical)).passed());
  }
}
