#pragma once

// One mobile agent in an otherwise fixed network: how its motion changes the
// Laplacian and lambda2, and where it can go without changing either.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isoconn/matrix.hpp"
#include "isoconn/topology.hpp"

namespace isoconn {

/// L split around one agent k, with k moved to the last position:
///
///     [ reduced + diag(coupling)   -coupling ]
///     [ -coupling^T                   gamma  ]
///
/// `reduced` is the Laplacian of the other agents alone and does not depend
/// on where agent k is.
struct BlockDecomposition {
  std::size_t agent = 0;
  std::vector<std::size_t> others;  ///< original indices of the reduced rows, in order
  Matrix reduced;
  Vector coupling;
  Matrix coupling_diag;
  double gamma = 0.0;

  /// Rebuilds L in the original agent order.
  Matrix reassemble() const;
};

BlockDecomposition block_decompose(const Matrix& laplacian, std::size_t agent);

/// v_F^T dL v_F with v_F the unit Fiedler vector of L: the first-order
/// change of lambda2 under the variation dL.
/// Errors: NotLaplacian, DegenerateFiedler, InvalidVariation (dL not
/// symmetric with zero row sums), OrderMismatch.
double connectivity_differential(const Matrix& laplacian, const Matrix& variation);

/// dL/ds when the mobile agent moves along `direction` (not normalized: the
/// result scales with it). Pairs beyond the range contribute nothing.
Matrix laplacian_variation(const AgentConfiguration& config, std::size_t mobile, Position direction);

/// (d lambda2/dx, d lambda2/dy) of the mobile agent.
Position connectivity_gradient(const AgentConfiguration& config, std::size_t mobile);

enum class MoveKind {
  Free,        ///< no neighbours: any position out of everyone's range keeps L
  Circle,      ///< one neighbour: anywhere on the circle around it
  Mirror,      ///< collinear neighbours: the reflection across their line
  Collinear,   ///< mobile on the neighbours' line: the circles are tangent
  Rigid,       ///< three or more non-collinear neighbours: only the original point
  Blocked,     ///< the mirror point would enter a non-neighbour's range
};

std::string_view move_kind_name(MoveKind kind) noexcept;

struct Circle {
  Position center;
  double radius = 0.0;
};

struct MoveSolution {
  MoveKind kind = MoveKind::Rigid;
  Position original;
  std::vector<Position> alternatives;
  std::vector<std::size_t> preserved_neighbors;
  std::optional<Circle> circle;  ///< set for MoveKind::Circle; alternatives are samples on it
};

inline constexpr std::size_t kCircleSamples = 8;

/// Positions of the mobile agent that keep every in-range distance and keep
/// every out-of-range agent out of range, so L (and lambda2) is unchanged.
MoveSolution mirror_moves(const AgentConfiguration& config, std::size_t mobile);

struct PathIntegral {
  double integral = 0.0;   ///< sum over steps of v_F^T (dL/ds) v_F ds
  double direct = 0.0;     ///< lambda2(end) - lambda2(start)
  double lambda2_start = 0.0;
  double lambda2_end = 0.0;
  double min_gap = 0.0;    ///< smallest lambda3 - lambda2 seen at a quadrature node
  std::size_t steps = 0;
  bool range_crossing = false;
  std::vector<std::string> warnings;
};

inline constexpr double kPathGapTol = 1e-6;

/// Moves the mobile agent from its current position through `waypoints` and
/// compares the integrated differential with the direct change of lambda2.
/// Midpoint rule with `steps` nodes spread over the segments in proportion to
/// their length (at least one per non-empty segment); the Fiedler vector is
/// recomputed at each node. DegenerateFiedler if lambda3 - lambda2 drops
/// below 1e-6 at a node. Crossing the range boundary is reported as a warning
/// since the weight jumps there and the integral no longer tracks lambda2.
PathIntegral integrate_connectivity_change(const AgentConfiguration& config, std::size_t mobile,
                                           const std::vector<Position>& waypoints, std::size_t steps);

}  // namespace isoconn
