#include "isoconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isoconn/error.hpp"
#include "isoconn/topology.hpp"

namespace isoconn {

void require_laplacian(const Matrix& m, const char* what) {
  const double tol = kEigenvalueTol * std::max(1.0, m.max_abs());
  const LaplacianValidation v = validate_laplacian(m, tol);
  if (!v.passes()) {
    std::string why;
    if (!v.symmetric) why += " not symmetric;";
    if (!v.zero_row_sums) why += " nonzero row sums;";
    if (!v.nonpositive_offdiag) why += " positive off-diagonal entry;";
    if (v.symmetric && !v.psd) why += " negative eigenvalue;";
    throw Error(ErrorCode::NotLaplacian, std::string(what) + " is not a Laplacian:" + why);
  }
}

ConnectivityReport algebraic_connectivity(const Matrix& laplacian) {
  if (laplacian.order() < 2)
    throw Error(ErrorCode::OrderTooSmall, "algebraic connectivity needs at least two agents");
  require_laplacian(laplacian, "input");
  const SpectralDecomposition d = symmetric_eigendecomposition(laplacian);

  ConnectivityReport r;
  r.spectrum = d.eigenvalues;
  // lambda1 may come out as -1e-16; clamp the reported connectivity at zero.
  r.lambda2 = std::max(0.0, d.eigenvalues[1]);
  r.fiedler = d.eigenvectors[1];
  r.degenerate = d.order() > 2 && std::abs(d.eigenvalues[2] - d.eigenvalues[1]) < kEigenvalueTol;
  return r;
}

bool is_isospectral(const Matrix& a, const Matrix& b, double tol) {
  if (a.order() != b.order()) throw Error(ErrorCode::OrderMismatch, "matrices have different orders");
  const Vector sa = symmetric_eigendecomposition(a).eigenvalues;
  const Vector sb = symmetric_eigendecomposition(b).eigenvalues;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (std::abs(sa[i] - sb[i]) > tol) return false;
  return true;
}

NullSpaceCheck fiedler_null_space_check(const Matrix& a, const Matrix& b, double tol) {
  if (a.order() != b.order()) throw Error(ErrorCode::OrderMismatch, "matrices have different orders");
  const ConnectivityReport ra = algebraic_connectivity(a);
  const ConnectivityReport rb = algebraic_connectivity(b);
  if (ra.degenerate || rb.degenerate)
    throw Error(ErrorCode::DegenerateFiedler, "lambda2 is repeated; the Fiedler vector is not unique");

  NullSpaceCheck out;
  out.fiedler = ra.fiedler;
  out.lambda2_a = ra.lambda2;
  out.lambda2_b = rb.lambda2;
  out.lambda2_agree = std::abs(ra.lambda2 - rb.lambda2) <= tol;
  const Vector dv = (b - a) * std::span<const double>(ra.fiedler);
  for (double x : dv) out.residual = std::max(out.residual, std::abs(x));
  out.holds = out.residual <= tol;
  return out;
}

}  // namespace isoconn
