#pragma once

#include "isoconn/matrix.hpp"

namespace isoconn {

inline constexpr double kEigenvalueTol = 1e-9;
inline constexpr double kResidualTol = 1e-8;

/// Algebraic connectivity and Fiedler vector of a Laplacian.
struct ConnectivityReport {
  double lambda2 = 0.0;
  Vector fiedler;      ///< unit norm, library sign convention
  bool degenerate = false;  ///< |lambda3 - lambda2| < 1e-9
  Vector spectrum;     ///< ascending
};

/// Throws NotLaplacian unless L passes structural validation at 1e-9
/// (scaled by max(1, max|l_ij|)); OrderTooSmall for order 1.
ConnectivityReport algebraic_connectivity(const Matrix& laplacian);

/// Sorted spectra agree entry-wise within tol. OrderMismatch on differing orders.
bool is_isospectral(const Matrix& a, const Matrix& b, double tol = kEigenvalueTol);

struct NullSpaceCheck {
  bool holds = false;         ///< residual <= tol
  double residual = 0.0;      ///< ||(L_b - L_a) v_F||_inf, v_F taken from L_a
  double lambda2_a = 0.0;
  double lambda2_b = 0.0;
  bool lambda2_agree = false;  ///< |lambda2_a - lambda2_b| <= tol
  Vector fiedler;
};

/// Tests whether the Fiedler vector of L_a lies in the null space of L_b - L_a.
/// Both inputs must be Laplacians with a simple lambda2 (else DegenerateFiedler).
NullSpaceCheck fiedler_null_space_check(const Matrix& a, const Matrix& b, double tol = kResidualTol);

/// Throws NotLaplacian when structural validation fails at kEigenvalueTol.
void require_laplacian(const Matrix& m, const char* what);

}  // namespace isoconn
