#pragma once

// Equal-lambda2 analysis for dense graphs: the four-agent family
//
//       [ 2+a   -1   -1    -a    ]
//   L = [ -1   2+b   -1    -b    ]
//       [ -1    -1    3    -1    ]
//       [ -a    -b   -1   1+a+b  ]
//
// whose spectrum is {0, 4, 2+a+b -/+ sqrt(D)} with
// D = 1 - a + a^2 - b - ab + b^2, plus a grid sampler for positions of a
// mobile agent that leave lambda2 unchanged in arbitrary configurations.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "isoconn/matrix.hpp"
#include "isoconn/topology.hpp"

namespace isoconn {

/// Weights of the mobile agent's links to agents 1 and 2; both > 0.
struct ParametricL4 {
  double alpha = 0.0;
  double beta = 0.0;
};

Matrix parametric_l4(ParametricL4 p);

/// D = 1 - a + a^2 - b - ab + b^2, evaluated as ((a-b)^2 + (a-1)^2 + (b-1)^2) / 2,
/// which shows it is never negative.
double l4_discriminant(ParametricL4 p);

/// Ascending {0, 4, 2+a+b-sqrt(D), 2+a+b+sqrt(D)}.
std::array<double, 4> l4_closed_form_spectrum(ParametricL4 p);

struct L4Validity {
  /// 2 + a + b + sqrt(D) > 4: only the larger root is constrained.
  bool upper_root_condition = false;
  /// lambda2 of the constructed matrix equals 4 within 1e-9.
  bool numeric_lambda2_is_4 = false;
  /// upper_root_condition holds but the numeric check fails.
  bool discrepancy = false;
  double lambda2 = 0.0;
  /// 2 + a + b - sqrt(D): lambda2 is 4 exactly when this is >= 4.
  double lower_root = 0.0;
};

L4Validity l4_validity(ParametricL4 p);

/// Cell-centred scan rectangle.
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  std::size_t nx = 0;
  std::size_t ny = 0;

  Position cell_center(std::size_t ix, std::size_t iy) const noexcept;
};

struct ZonePoint {
  Position position;
  double lambda2 = 0.0;
};

struct ZoneSample {
  double target_lambda2 = 0.0;
  double tolerance = 0.0;
  Grid grid;
  std::vector<ZonePoint> accepted;  ///< row-major scan order (y outer, x inner)
  std::size_t rejected_count = 0;   ///< includes cells that coincide with another agent
};

/// Places the mobile agent at every cell centre, rebuilds L and keeps the
/// cells where |lambda2 - target| <= tol. Target defaults to lambda2 of the
/// configuration as given. EmptyGrid when the grid has no cells or an empty
/// extent.
ZoneSample iso_connectivity_zone(const AgentConfiguration& config, std::size_t mobile, const Grid& grid,
                                 double tol, std::optional<double> target = std::nullopt);

}  // namespace isoconn
