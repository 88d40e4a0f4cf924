#pragma once

// Finite-difference kernels of the oscillator operators d/dx + f x and
// -d/dx + f x on [-L, L], their n-fold tensor products, and the SL(2,R)
// cylinder index assembled from them.
//
// Discretisation: even-degree sections live on the nodes x_j = -L + j h,
// odd-degree sections on the midpoints x_{j+1/2}. The even operator
//   (A s)_{j+1/2} = (s_{j+1} - s_j) / h + f x_{j+1/2} (s_j + s_{j+1}) / 2
// maps R^N -> R^{N-1}; the odd operator is its transpose, which is the same
// centred scheme for -d/dx + f x with zero (Dirichlet) values outside [-L, L].

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "ktype/ktype_table.hpp"

namespace ktype {

struct GridSpec {
  double L = 8.0;
  double h = 0.05;

  /// Throws std::invalid_argument unless L > 0, 0 < h < L and L/h is an integer
  /// (odd point count, symmetric through 0).
  void validate() const;
  std::size_t points() const;
  double node(std::size_t j) const { return -L + double(j) * h; }
};

/// A singular value fell inside [tol/10, 10 tol]: the kernel dimension is not decidable.
class InconclusiveKernel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Explicit2D {
  int kernel_dim_even = 0;
  int kernel_dim_odd = 0;
  std::vector<double> smallest_singular_values_even;
  std::vector<double> smallest_singular_values_odd;
  double gaussian_l2_error = 0;
};

struct KernelReport {
  int kernel_dim_even = 0;
  int kernel_dim_odd = 0;
  std::vector<double> smallest_singular_values;      // even operator, ascending
  std::vector<double> smallest_singular_values_odd;  // odd operator, ascending
  double gaussian_l2_error = 0;
  std::optional<Explicit2D> explicit_2d;
};

/// Staggered matrix of d/dx + f x, (N-1) x N.
Eigen::MatrixXd oscillator_matrix(const GridSpec& grid, double f = 1.0);

KernelReport oscillator_1d(const GridSpec& grid, double svd_tol, double f = 1.0);

/// Kernel of the n-dimensional operator from the 1-D report via the tensor
/// rule; for n = 2 additionally solved on the 2-D grid.
KernelReport oscillator_nd(int n, const GridSpec& grid, double svd_tol, double f = 1.0);

/// D^+ on R^2: (E00, E11) on node x node and mid x mid -> (E10, E01).
Eigen::SparseMatrix<double> oscillator_2d_even(const GridSpec& grid, double f = 1.0);
Explicit2D oscillator_2d(const GridSpec& grid, double svd_tol, double f = 1.0);

enum class Parity { even, odd };

/// K-type table of the cylinder operator: one K-weight l per admissible
/// Fourier mode (l = parity mod 2, |l| <= window), each contributing
/// dim ker(even) - dim ker(odd) of the transverse oscillator.
KTypeTable cylinder_sl2(Parity parity, Coord weight_window, const GridSpec& grid, double svd_tol, double f = 1.0);

}  // namespace ktype
