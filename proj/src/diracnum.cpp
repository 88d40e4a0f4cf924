#include "ktype/diracnum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>
#include <Eigen/SparseCholesky>

namespace ktype {

void GridSpec::validate() const {
  if (!(L > 0)) throw std::invalid_argument("grid half-width must be positive");
  if (!(h > 0) || !(h < L)) throw std::invalid_argument("grid step must satisfy 0 < h < L");
  const double ratio = L / h;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio)
    throw std::invalid_argument("L / h must be an integer so the grid is symmetric through 0");
}

std::size_t GridSpec::points() const { return 2 * std::size_t(std::llround(L / h)) + 1; }

Eigen::MatrixXd oscillator_matrix(const GridSpec& grid, double f) {
  grid.validate();
  const std::size_t n = grid.points();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(Eigen::Index(n - 1), Eigen::Index(n));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double mid = grid.node(j) + grid.h / 2;
    a(Eigen::Index(j), Eigen::Index(j)) = -1.0 / grid.h + f * mid / 2;
    a(Eigen::Index(j), Eigen::Index(j + 1)) = 1.0 / grid.h + f * mid / 2;
  }
  return a;
}

namespace {

constexpr std::size_t kReported = 6;

void check_band(const Eigen::VectorXd& sv, double tol, const char* which) {
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) >= tol / 10 && sv(i) <= tol * 10) {
      std::ostringstream os;
      os << "singular value " << sv(i) << " of the " << which << " operator lies within a factor 10 of the tolerance "
         << tol;
      throw InconclusiveKernel(os.str());
    }
  }
}

// Ascending singular values padded with the structural zeros (cols - rows).
std::vector<double> ascending_with_structural(const Eigen::VectorXd& sv, Eigen::Index structural) {
  std::vector<double> out(std::size_t(std::max<Eigen::Index>(structural, 0)), 0.0);
  for (Eigen::Index i = sv.size(); i-- > 0;) out.push_back(sv(i));
  std::sort(out.begin(), out.end());
  if (out.size() > kReported) out.resize(kReported);
  return out;
}

double relative_l2(Eigen::VectorXd v, Eigen::VectorXd g) {
  g.normalize();
  v.normalize();
  if (v.dot(g) < 0) v = -v;
  return (v - g).norm();
}

Eigen::VectorXd grid_gaussian(const GridSpec& grid, double f) {
  Eigen::VectorXd g(Eigen::Index(grid.points()));
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    const double x = grid.node(std::size_t(j));
    g(j) = std::exp(-f * x * x / 2);
  }
  return g;
}

}  // namespace

KernelReport oscillator_1d(const GridSpec& grid, double svd_tol, double f) {
  if (!(svd_tol > 0)) throw std::invalid_argument("svd tolerance must be positive");
  if (!(f > 0)) throw std::invalid_argument("potential scale must be positive");
  const Eigen::MatrixXd a = oscillator_matrix(grid, f);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  check_band(sv, svd_tol, "even");

  KernelReport r;
  const Eigen::Index structural = a.cols() - a.rows();
  Eigen::Index small = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) < svd_tol) ++small;
  r.kernel_dim_even = int(structural + small);
  r.smallest_singular_values = ascending_with_structural(sv, structural);

  // The transpose has the same nonzero singular values and no structural kernel.
  r.kernel_dim_odd = int(small);
  r.smallest_singular_values_odd = ascending_with_structural(sv, 0);

  if (r.kernel_dim_even > 0) {
    // Last right singular vector: smallest singular value (or structural null vector).
    Eigen::VectorXd v = svd.matrixV().col(a.cols() - 1);
    r.gaussian_l2_error = relative_l2(v, grid_gaussian(grid, f));
  } else {
    r.gaussian_l2_error = std::numeric_limits<double>::infinity();
  }
  return r;
}

// ---------------------------------------------------------------- 2-D

Eigen::SparseMatrix<double> oscillator_2d_even(const GridSpec& grid, double f) {
  const Eigen::MatrixXd a = oscillator_matrix(grid, f);
  const Eigen::Index n = a.cols(), m = a.rows();
  // Index of (ix, iy) in a block with ny entries along y: ix * ny + iy.
  const Eigen::Index e00 = 0, e11 = n * n;        // columns
  const Eigen::Index e10 = 0, e01 = m * n;        // rows
  std::vector<Eigen::Triplet<double>> t;
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double v = a(r, c);
      if (v == 0) continue;
      for (Eigen::Index k = 0; k < n; ++k) {
        // E00 -> E10: A in x.  E00 -> E01: A in y.
        t.emplace_back(e10 + r * n + k, e00 + c * n + k, v);
        t.emplace_back(e01 + k * m + r, e00 + k * n + c, v);
      }
      for (Eigen::Index k = 0; k < m; ++k) {
        // E11 -> E10: -A^T in y.  E11 -> E01: A^T in x.
        t.emplace_back(e10 + k * n + c, e11 + k * m + r, -v);
        t.emplace_back(e01 + c * m + k, e11 + r * m + k, v);
      }
    }
  }
  Eigen::SparseMatrix<double> d(2 * m * n, n * n + m * m);
  d.setFromTriplets(t.begin(), t.end());
  return d;
}

namespace {

struct RitzPairs {
  std::vector<double> sigma;  // ||D x|| ascending
  Eigen::MatrixXd vectors;
};

// Smallest singular values of d (acting on columns) by block inverse iteration
// on d^T d + shift, followed by Rayleigh-Ritz.
RitzPairs smallest_singular(const Eigen::SparseMatrix<double>& d, int block, int iterations) {
  const Eigen::Index n = d.cols();
  Eigen::SparseMatrix<double> normal = (d.transpose() * d).pruned();
  const double shift = 1e-10;
  for (Eigen::Index i = 0; i < n; ++i) normal.coeffRef(i, i) += shift;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(normal);
  if (ldlt.info() != Eigen::Success) throw std::runtime_error("factorisation of the normal operator failed");

  Eigen::MatrixXd x(n, block);
  for (int k = 0; k < block; ++k)
    for (Eigen::Index i = 0; i < n; ++i) x(i, k) = std::cos(0.37 * double(i) * (k + 1) + 0.11 * k) + 0.5;
  for (int it = 0; it < iterations; ++it) {
    x = ldlt.solve(x);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
    x = qr.householderQ() * Eigen::MatrixXd::Identity(n, block);
  }
  const Eigen::MatrixXd dx = d * x;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(dx.transpose() * dx);
  RitzPairs out;
  out.vectors = x * small.eigenvectors();
  for (int k = 0; k < block; ++k) out.sigma.push_back((d * out.vectors.col(k)).norm());
  return out;
}

}  // namespace

Explicit2D oscillator_2d(const GridSpec& grid, double svd_tol, double f) {
  if (!(svd_tol > 0)) throw std::invalid_argument("svd tolerance must be positive");
  const Eigen::SparseMatrix<double> d = oscillator_2d_even(grid, f);
  const Eigen::Index n = Eigen::Index(grid.points());
  constexpr int kBlock = 4, kIterations = 12;

  Explicit2D r;
  auto count = [&](const std::vector<double>& sigma, const char* which) {
    int c = 0;
    for (double s : sigma) {
      if (s >= svd_tol / 10 && s <= svd_tol * 10) {
        std::ostringstream os;
        os << "2-D " << which << " singular value " << s << " lies within a factor 10 of the tolerance " << svd_tol;
        throw InconclusiveKernel(os.str());
      }
      if (s < svd_tol) ++c;
    }
    // Every computed value small would leave the kernel dimension unresolved.
    if (c == int(sigma.size())) throw InconclusiveKernel(std::string("2-D ") + which + " kernel exceeds the search block");
    return c;
  };

  RitzPairs even = smallest_singular(d, kBlock, kIterations);
  r.kernel_dim_even = count(even.sigma, "even");
  r.smallest_singular_values_even = even.sigma;

  const Eigen::SparseMatrix<double> dt = d.transpose();
  RitzPairs odd = smallest_singular(dt, kBlock, kIterations);
  r.kernel_dim_odd = count(odd.sigma, "odd");
  r.smallest_singular_values_odd = odd.sigma;

  if (r.kernel_dim_even > 0) {
    Eigen::VectorXd g1 = grid_gaussian(grid, f);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(d.cols());
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) g(i * n + j) = g1(i) * g1(j);
    r.gaussian_l2_error = relative_l2(even.vectors.col(0), g);
  } else {
    r.gaussian_l2_error = std::numeric_limits<double>::infinity();
  }
  return r;
}

KernelReport oscillator_nd(int n, const GridSpec& grid, double svd_tol, double f) {
  if (n < 1 || n > 3) throw std::invalid_argument("oscillator_nd supports 1 <= n <= 3");
  KernelReport one = oscillator_1d(grid, svd_tol, f);
  if (n == 1) return one;
  // ker of the n-fold graded tensor product: even/odd parts of (e + o t)^n.
  long long plus = 1, minus = 1;
  for (int i = 0; i < n; ++i) {
    plus *= one.kernel_dim_even + one.kernel_dim_odd;
    minus *= one.kernel_dim_even - one.kernel_dim_odd;
  }
  KernelReport r = one;
  r.kernel_dim_even = int((plus + minus) / 2);
  r.kernel_dim_odd = int((plus - minus) / 2);
  if (n == 2) r.explicit_2d = oscillator_2d(grid, svd_tol, f);
  return r;
}

KTypeTable cylinder_sl2(Parity parity, Coord weight_window, const GridSpec& grid, double svd_tol, double f) {
  if (weight_window < 0) throw std::invalid_argument("negative weight window");
  const KernelReport y = oscillator_1d(grid, svd_tol, f);
  const Coord contribution = y.kernel_dim_even - y.kernel_dim_odd;
  KTypeTable t;
  t.window = weight_window;
  t.sign = 1;
  const Coord p = parity == Parity::even ? 0 : 1;
  for (Coord l = -weight_window; l <= weight_window; ++l) {
    if (((l % 2) + 2) % 2 != p) continue;
    if (contribution != 0) t.entries[Weight(Lattice::t, {l})] = contribution;
  }
  return t;
}

}  // namespace ktype
