#pragma once

// Agent configurations in the plane and the distance-weighted Laplacians
// built from them.

#include <cstddef>
#include <string>
#include <vector>

#include "isoconn/matrix.hpp"

namespace isoconn {

struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

double distance(Position a, Position b) noexcept;

struct Agent {
  std::string id;
  Position position;

  bool operator==(const Agent&) const = default;
};

/// Planar agents with a shared decay constant sigma and range R.
///
/// Invariants (checked on construction, Error InvalidConfiguration or
/// CoincidentAgents otherwise): at least two agents, unique ids, finite
/// positions, no two agents at the same point, sigma > 0, range > 0.
class AgentConfiguration {
 public:
  AgentConfiguration(std::vector<Agent> agents, double sigma, double range);

  std::size_t size() const noexcept { return agents_.size(); }
  const std::vector<Agent>& agents() const noexcept { return agents_; }
  const Agent& agent(std::size_t i) const { return agents_.at(i); }
  Position position(std::size_t i) const { return agents_.at(i).position; }
  double sigma() const noexcept { return sigma_; }
  double range() const noexcept { return range_; }

  /// Index of the agent with the given id; IndexOutOfRange if absent.
  std::size_t index_of(const std::string& id) const;

  /// Copy with agent i placed at p (re-validated).
  AgentConfiguration with_position(std::size_t i, Position p) const;

  bool operator==(const AgentConfiguration&) const = default;

 private:
  std::vector<Agent> agents_;
  double sigma_;
  double range_;
};

/// exp(-(sigma/range) * distance) for distance <= range, exactly 0 beyond.
/// The model jumps from exp(-sigma) to 0 at distance == range.
double adjacency_weight(double distance, double sigma, double range) noexcept;

/// d(weight)/d(distance); 0 outside the range.
double adjacency_weight_slope(double distance, double sigma, double range) noexcept;

Matrix build_adjacency(const AgentConfiguration& config);

/// L = D - A in agent order. Diagonal sums are taken over sorted weights so
/// relabeling the agents permutes L bit-exactly.
Matrix build_laplacian(const AgentConfiguration& config);

struct LaplacianValidation {
  bool symmetric = false;
  bool zero_row_sums = false;
  bool nonpositive_offdiag = false;
  bool psd = false;
  bool connected = false;
  double max_row_sum = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  /// Structural pass; connectivity is reported separately.
  bool passes() const noexcept { return symmetric && zero_row_sums && nonpositive_offdiag && psd; }
};

LaplacianValidation validate_laplacian(const Matrix& m, double tol);

/// Breadth-first search over pairs with positive weight.
bool is_connected(const AgentConfiguration& config);

}  // namespace isoconn
