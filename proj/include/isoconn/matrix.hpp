#pragma once

// Dense square matrices, permutations and the symmetric eigensolver that the
// rest of the library is built on.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace isoconn {

using Vector = std::vector<double>;

/// Dense real n x n matrix, row-major. Every stored entry is finite; any
/// operation that would store NaN or Inf throws Error(NonFinite).
class Matrix {
 public:
  /// Zero matrix of the given order (order >= 1).
  explicit Matrix(std::size_t order);

  static Matrix zeros(std::size_t order) { return Matrix(order); }
  static Matrix identity(std::size_t order);
  static Matrix diagonal(std::span<const double> diag);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_row_major(std::size_t order, std::span<const double> entries);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }
  double at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);
  std::span<const double> data() const noexcept { return data_; }
  std::vector<std::vector<double>> rows() const;

  Matrix transposed() const;
  Vector row_sums() const;
  /// Infinity norm (max absolute row sum).
  double norm_inf() const noexcept;
  double norm_frobenius() const noexcept;
  double max_abs() const noexcept;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator*(double scale) const;
  Vector operator*(std::span<const double> v) const;

  /// Bitwise entry equality (0.0 and -0.0 compare equal).
  bool operator==(const Matrix& rhs) const noexcept;
  bool approx_equal(const Matrix& rhs, double tol) const noexcept;
  bool is_symmetric(double tol) const noexcept;

 private:
  std::size_t order_;
  std::vector<double> data_;
};

/// Largest |a_ij - b_ij|; orders must match.
double max_abs_difference(const Matrix& a, const Matrix& b);

/// Bijection on {0..n-1}; image(i) is where i is sent.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// Builds from 1-based images, the convention used in files and on the CLI.
  static Permutation from_one_based(std::span<const long long> images);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  std::vector<long long> one_based() const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

struct SpectralDecomposition {
  Vector eigenvalues;                ///< ascending
  std::vector<Vector> eigenvectors;  ///< eigenvectors[i] pairs with eigenvalues[i]
  std::vector<bool> degenerate;      ///< true when eigenvalue i sits in a cluster (gap < kClusterGap)
  double residual = 0.0;             ///< max_i ||M v_i - lambda_i v_i||_inf
  int sweeps = 0;

  static constexpr double kClusterGap = 1e-9;

  std::size_t order() const noexcept { return eigenvalues.size(); }
  /// Eigenvectors as the columns of a matrix (the modal matrix).
  Matrix modal_matrix() const;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Sweeps are row-by-row over the upper triangle; convergence is declared
/// once the off-diagonal Frobenius mass is at most 1e-14 * ||M||_F, with a
/// hard cap of 100 sweeps (Error NoConvergence). Eigenvalues come out
/// ascending and every eigenvector is flipped so its largest-magnitude entry
/// is positive (near-ties go to the lowest index). The input must be
/// symmetric to 1e-12 relative to max(1, max|m_ij|), otherwise NonSymmetric.
SpectralDecomposition symmetric_eigendecomposition(const Matrix& m);

/// Flips v in place to the library's sign convention.
void apply_sign_convention(std::span<double> v);

/// Matrix with entry (i, perm(i)) = 1.
Matrix permutation_matrix(const Permutation& perm);

struct IsoTransformVerdict {
  double orthonormality_error = 0.0;  ///< ||Q^T Q - I||_inf (max entry)
  double fixed_point_error = 0.0;     ///< ||Q 1 - 1||_inf
  bool orthonormal = false;
  bool fixes_ones = false;
  bool permutation = false;
  bool identity = false;

  bool passes() const noexcept { return orthonormal && fixes_ones; }
};

/// Checks that Q is orthonormal and maps the all-ones vector to itself, the
/// two conditions under which Q^T L Q keeps zero row sums and L's spectrum.
IsoTransformVerdict validate_iso_transform(const Matrix& q, double tol);

/// Orthonormal matrix rotating by theta inside the plane spanned by
/// (e1 - e2)/sqrt(2) and (e1 + e2 - 2 e3)/sqrt(6); it fixes the ones vector.
/// Needs n >= 3: for n = 2 the only orthonormal matrices with unit row sums
/// are the identity and the swap, so there is no continuous family.
Matrix ones_axis_rotation(std::size_t n, double theta);

}  // namespace isoconn
