#include "isoconn/iso_connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isoconn/error.hpp"
#include "isoconn/spectral.hpp"

namespace isoconn {

namespace {

void require_parameters(ParametricL4 p) {
  if (!(std::isfinite(p.alpha) && p.alpha > 0.0) || !(std::isfinite(p.beta) && p.beta > 0.0))
    throw Error(ErrorCode::NonPositiveParameter, "alpha and beta must be positive and finite");
}

double lambda2_of(const Matrix& l) {
  return std::max(0.0, symmetric_eigendecomposition(l).eigenvalues[1]);
}

}  // namespace

Matrix parametric_l4(ParametricL4 p) {
  require_parameters(p);
  const double a = p.alpha;
  const double b = p.beta;
  return Matrix::from_rows({
      {2.0 + a, -1.0, -1.0, -a},
      {-1.0, 2.0 + b, -1.0, -b},
      {-1.0, -1.0, 3.0, -1.0},
      {-a, -b, -1.0, 1.0 + a + b},
  });
}

double l4_discriminant(ParametricL4 p) {
  require_parameters(p);
  const double a = p.alpha;
  const double b = p.beta;
  return 0.5 * ((a - b) * (a - b) + (a - 1.0) * (a - 1.0) + (b - 1.0) * (b - 1.0));
}

std::array<double, 4> l4_closed_form_spectrum(ParametricL4 p) {
  const double disc = l4_discriminant(p);
  if (disc < 0.0) throw Error(ErrorCode::NegativeDiscriminant, "characteristic polynomial has complex roots");
  const double mid = 2.0 + p.alpha + p.beta;
  const double root = std::sqrt(disc);
  std::array<double, 4> s{0.0, 4.0, mid - root, mid + root};
  std::sort(s.begin(), s.end());
  return s;
}

L4Validity l4_validity(ParametricL4 p) {
  const double disc = l4_discriminant(p);
  const double mid = 2.0 + p.alpha + p.beta;
  L4Validity v;
  v.upper_root_condition = mid + std::sqrt(disc) > 4.0;
  v.lower_root = mid - std::sqrt(disc);
  v.lambda2 = lambda2_of(parametric_l4(p));
  v.numeric_lambda2_is_4 = std::abs(v.lambda2 - 4.0) <= kEigenvalueTol;
  v.discrepancy = v.upper_root_condition && !v.numeric_lambda2_is_4;
  return v;
}

Position Grid::cell_center(std::size_t ix, std::size_t iy) const noexcept {
  const double dx = (x_max - x_min) / static_cast<double>(nx);
  const double dy = (y_max - y_min) / static_cast<double>(ny);
  return Position{x_min + (static_cast<double>(ix) + 0.5) * dx, y_min + (static_cast<double>(iy) + 0.5) * dy};
}

ZoneSample iso_connectivity_zone(const AgentConfiguration& config, std::size_t mobile, const Grid& grid,
                                 double tol, std::optional<double> target) {
  if (mobile >= config.size()) throw Error(ErrorCode::IndexOutOfRange, "agent index out of range");
  if (grid.nx == 0 || grid.ny == 0 || !(grid.x_max > grid.x_min) || !(grid.y_max > grid.y_min) ||
      !std::isfinite(grid.x_min) || !std::isfinite(grid.x_max) || !std::isfinite(grid.y_min) ||
      !std::isfinite(grid.y_max)) {
    throw Error(ErrorCode::EmptyGrid, "grid has no cells");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  ZoneSample out;
  out.grid = grid;
  out.tolerance = tol;
  out.target_lambda2 = target ? *target : lambda2_of(build_laplacian(config));

  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Position p = grid.cell_center(ix, iy);
      bool coincident = false;
      for (std::size_t j = 0; j < config.size(); ++j)
        if (j != mobile && distance(p, config.position(j)) == 0.0) coincident = true;
      if (coincident) {
        ++out.rejected_count;
        continue;
      }
      const double l2 = lambda2_of(build_laplacian(config.with_position(mobile, p)));
      if (std::abs(l2 - out.target_lambda2) <= tol)
        out.accepted.push_back({p, l2});
      else
        ++out.rejected_count;
    }
  }
  return out;
}

}  // namespace isoconn
