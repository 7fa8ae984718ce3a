#include "isoconn/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "isoconn/error.hpp"

namespace isoconn {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
}

void require_same_order(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::OrderMismatch, "matrix orders differ: " + std::to_string(a.order()) +
                                              " vs " + std::to_string(b.order()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t order) : order_(order), data_(order * order, 0.0) {
  if (order == 0) throw Error(ErrorCode::OrderTooSmall, "matrix order must be at least 1");
}

Matrix Matrix::identity(std::size_t order) {
  Matrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.data_[i * order + i] = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

Matrix Matrix::from_row_major(std::size_t order, std::span<const double> entries) {
  if (entries.size() != order * order) {
    throw Error(ErrorCode::NotSquare, "expected " + std::to_string(order * order) + " entries");
  }
  Matrix m(order);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    require_finite(entries[k]);
    m.data_[k] = entries[k];
  }
  return m;
}

double Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= order_ || j >= order_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return data_[i * order_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= order_ || j >= order_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  require_finite(value);
  data_[i * order_ + j] = value;
}

std::vector<std::vector<double>> Matrix::rows() const {
  std::vector<std::vector<double>> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t.data_[j * order_ + i] = data_[i * order_ + j];
  return t;
}

Vector Matrix::row_sums() const {
  Vector sums(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) sums[i] += data_[i * order_ + j];
  return sums;
}

double Matrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < order_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < order_; ++j) s += std::abs(data_[i * order_ + j]);
    best = std::max(best, s);
  }
  return best;
}

double Matrix::norm_frobenius() const noexcept {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double Matrix::max_abs() const noexcept {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_order(*this, rhs);
  Matrix out(order_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    out.data_[k] = data_[k] + rhs.data_[k];
    require_finite(out.data_[k]);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_order(*this, rhs);
  Matrix out(order_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    out.data_[k] = data_[k] - rhs.data_[k];
    require_finite(out.data_[k]);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_order(*this, rhs);
  Matrix out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < order_; ++k) s += data_[i * order_ + k] * rhs.data_[k * order_ + j];
      require_finite(s);
      out.data_[i * order_ + j] = s;
    }
  }
  return out;
}

Matrix Matrix::operator*(double scale) const {
  Matrix out(order_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    out.data_[k] = data_[k] * scale;
    require_finite(out.data_[k]);
  }
  return out;
}

Vector Matrix::operator*(std::span<const double> v) const {
  if (v.size() != order_) throw Error(ErrorCode::OrderMismatch, "vector length does not match matrix order");
  Vector out(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < order_; ++j) s += data_[i * order_ + j] * v[j];
    out[i] = s;
  }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const noexcept {
  return order_ == rhs.order_ && data_ == rhs.data_;
}

bool Matrix::approx_equal(const Matrix& rhs, double tol) const noexcept {
  if (order_ != rhs.order_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (std::abs(data_[k] - rhs.data_[k]) > tol) return false;
  return true;
}

bool Matrix::is_symmetric(double tol) const noexcept {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (std::abs(data_[i * order_ + j] - data_[j * order_ + i]) > tol) return false;
  return true;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  require_same_order(a, b);
  double best = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
  return best;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::size_t img = images_[i];
    if (img >= images_.size() || seen[img]) {
      throw Error(ErrorCode::NotBijection,
                  "permutation repeats or skips an index at position " + std::to_string(i + 1));
    }
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const long long> images) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(images.size());
  for (long long v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size()) {
      throw Error(ErrorCode::NotBijection, "permutation image " + std::to_string(v) + " outside 1.." +
                                               std::to_string(images.size()));
    }
    zero_based.push_back(static_cast<std::size_t>(v - 1));
  }
  return Permutation(std::move(zero_based));
}

std::vector<long long> Permutation::one_based() const {
  std::vector<long long> out;
  out.reserve(images_.size());
  for (std::size_t v : images_) out.push_back(static_cast<long long>(v) + 1);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

// ---------------------------------------------------------------------------

Matrix SpectralDecomposition::modal_matrix() const {
  const std::size_t n = order();
  Matrix m(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, eigenvectors[j][i]);
  return m;
}

void apply_sign_convention(std::span<double> v) {
  double largest = 0.0;
  for (double x : v) largest = std::max(largest, std::abs(x));
  if (largest == 0.0) return;
  const double tie = largest * (1.0 - 1e-12);
  for (double x : v) {
    if (std::abs(x) >= tie) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

SpectralDecomposition symmetric_eigendecomposition(const Matrix& m) {
  const std::size_t n = m.order();
  const double scale = std::max(1.0, m.max_abs());
  if (!m.is_symmetric(1e-12 * scale)) {
    throw Error(ErrorCode::NonSymmetric, "matrix is not symmetric within 1e-12 relative tolerance");
  }

  // Work on the symmetrized copy so rounding-level asymmetry does not bias the result.
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (m(i, j) + m(j, i));
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
  };

  constexpr int kMaxSweeps = 100;
  const double threshold = 1e-14 * m.norm_frobenius();
  int sweeps = 0;
  while (off_mass() > threshold) {
    if (sweeps == kMaxSweeps) {
      throw Error(ErrorCode::NoConvergence, "Jacobi iteration did not converge in 100 sweeps");
    }
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          const double new_rp = c * arp - s * arq;
          const double new_rq = s * arp + c * arq;
          a[r * n + p] = new_rp;
          a[p * n + r] = new_rp;
          a[r * n + q] = new_rq;
          a[q * n + r] = new_rq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = c * vrp - s * vrq;
          v[r * n + q] = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

  SpectralDecomposition out;
  out.sweeps = sweeps;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a[k * n + k]);
    Vector vec(n);
    for (std::size_t r = 0; r < n; ++r) vec[r] = v[r * n + k];
    apply_sign_convention(vec);
    out.eigenvectors.push_back(std::move(vec));
  }

  out.degenerate.assign(n, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (out.eigenvalues[i + 1] - out.eigenvalues[i] < SpectralDecomposition::kClusterGap) {
      out.degenerate[i] = true;
      out.degenerate[i + 1] = true;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Vector mv = m * std::span<const double>(out.eigenvectors[i]);
    for (std::size_t r = 0; r < n; ++r) {
      out.residual = std::max(out.residual, std::abs(mv[r] - out.eigenvalues[i] * out.eigenvectors[i][r]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Matrix permutation_matrix(const Permutation& perm) {
  Matrix j(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) j.set(i, perm(i), 1.0);
  return j;
}

IsoTransformVerdict validate_iso_transform(const Matrix& q, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const std::size_t n = q.order();
  IsoTransformVerdict verdict;

  const Matrix gram = q.transposed() * q;
  verdict.orthonormality_error = (gram - Matrix::identity(n)).norm_inf();
  verdict.orthonormal = verdict.orthonormality_error <= tol;

  for (double s : q.row_sums()) verdict.fixed_point_error = std::max(verdict.fixed_point_error, std::abs(s - 1.0));
  verdict.fixes_ones = verdict.fixed_point_error <= tol;

  bool perm = true;
  std::vector<int> column_hits(n, 0);
  for (std::size_t i = 0; i < n && perm; ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double x = q(i, j);
      if (std::abs(x - 1.0) <= tol) {
        ++row_hits;
        ++column_hits[j];
      } else if (std::abs(x) > tol) {
        perm = false;
      }
    }
    if (row_hits != 1) perm = false;
  }
  for (int hits : column_hits)
    if (hits != 1) perm = false;
  verdict.permutation = perm;
  verdict.identity = q.approx_equal(Matrix::identity(n), tol);
  return verdict;
}

Matrix ones_axis_rotation(std::size_t n, double theta) {
  if (n < 3) {
    throw Error(ErrorCode::OrderTooSmall,
                "ones_axis_rotation needs n >= 3; for n = 2 only the identity and the swap fix the ones vector");
  }
  if (!std::isfinite(theta)) throw Error(ErrorCode::NonFinite, "rotation angle is not finite");
  Vector u(n, 0.0);
  Vector w(n, 0.0);
  u[0] = 1.0 / std::sqrt(2.0);
  u[1] = -1.0 / std::sqrt(2.0);
  w[0] = 1.0 / std::sqrt(6.0);
  w[1] = 1.0 / std::sqrt(6.0);
  w[2] = -2.0 / std::sqrt(6.0);
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  // Q = I + (c - 1)(u u^T + w w^T) + s (w u^T - u w^T)
  Matrix q(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double x = (i == j) ? 1.0 : 0.0;
      x += (c - 1.0) * (u[i] * u[j] + w[i] * w[j]);
      x += s * (w[i] * u[j] - u[i] * w[j]);
      q.set(i, j, x);
    }
  }
  return q;
}

}  // namespace isoconn
