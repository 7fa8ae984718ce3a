#include "isoconn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "isoconn/error.hpp"

namespace isoconn {

double distance(Position a, Position b) noexcept {
  return std::hypot(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

AgentConfiguration::AgentConfiguration(std::vector<Agent> agents, double sigma, double range)
    : agents_(std::move(agents)), sigma_(sigma), range_(range) {
  if (agents_.size() < 2) throw Error(ErrorCode::InvalidConfiguration, "a configuration needs at least two agents");
  if (!(std::isfinite(sigma_) && sigma_ > 0.0))
    throw Error(ErrorCode::InvalidConfiguration, "sigma must be a positive finite number");
  if (!(std::isfinite(range_) && range_ > 0.0))
    throw Error(ErrorCode::InvalidConfiguration, "range must be a positive finite number");

  std::set<std::string> ids;
  for (const Agent& a : agents_) {
    if (!ids.insert(a.id).second) throw Error(ErrorCode::InvalidConfiguration, "duplicate agent id '" + a.id + "'");
    if (!std::isfinite(a.position.x) || !std::isfinite(a.position.y))
      throw Error(ErrorCode::InvalidConfiguration, "agent '" + a.id + "' has a non-finite position");
  }
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    for (std::size_t j = i + 1; j < agents_.size(); ++j) {
      if (distance(agents_[i].position, agents_[j].position) == 0.0) {
        throw Error(ErrorCode::CoincidentAgents,
                    "agents '" + agents_[i].id + "' and '" + agents_[j].id + "' are coincident");
      }
    }
  }
}

std::size_t AgentConfiguration::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < agents_.size(); ++i)
    if (agents_[i].id == id) return i;
  throw Error(ErrorCode::IndexOutOfRange, "no agent with id '" + id + "'");
}

AgentConfiguration AgentConfiguration::with_position(std::size_t i, Position p) const {
  if (i >= agents_.size()) throw Error(ErrorCode::IndexOutOfRange, "agent index out of range");
  std::vector<Agent> moved = agents_;
  moved[i].position = p;
  return AgentConfiguration(std::move(moved), sigma_, range_);
}

double adjacency_weight(double distance, double sigma, double range) noexcept {
  if (distance > range) return 0.0;
  return std::exp(-(sigma / range) * distance);
}

double adjacency_weight_slope(double distance, double sigma, double range) noexcept {
  if (distance > range) return 0.0;
  const double k = sigma / range;
  return -k * std::exp(-k * distance);
}

Matrix build_adjacency(const AgentConfiguration& config) {
  const std::size_t n = config.size();
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = adjacency_weight(distance(config.position(i), config.position(j)), config.sigma(), config.range());
      a.set(i, j, w);
      a.set(j, i, w);
    }
  }
  return a;
}

Matrix build_laplacian(const AgentConfiguration& config) {
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (distance(config.position(i), config.position(j)) == 0.0)
        throw Error(ErrorCode::CoincidentAgents, "coincident agents");

  const Matrix a = build_adjacency(config);
  Matrix l(n);
  std::vector<double> row;
  for (std::size_t i = 0; i < n; ++i) {
    row.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      l.set(i, j, -a(i, j));
      row.push_back(a(i, j));
    }
    std::sort(row.begin(), row.end());
    double degree = 0.0;
    for (double w : row) degree += w;
    l.set(i, i, degree);
  }
  return l;
}

LaplacianValidation validate_laplacian(const Matrix& m, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const std::size_t n = m.order();
  LaplacianValidation v;
  v.symmetric = m.is_symmetric(tol);
  for (double s : m.row_sums()) v.max_row_sum = std::max(v.max_row_sum, std::abs(s));
  v.zero_row_sums = v.max_row_sum <= tol;
  v.nonpositive_offdiag = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m(i, j) > tol) v.nonpositive_offdiag = false;

  if (v.symmetric) {
    // Symmetrize so a tolerated asymmetry above the eigensolver's own guard still decomposes.
    Matrix sym(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sym.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    const SpectralDecomposition d = symmetric_eigendecomposition(sym);
    v.lambda1 = d.eigenvalues.front();
    v.lambda2 = n > 1 ? d.eigenvalues[1] : 0.0;
    v.psd = v.lambda1 >= -tol;
    v.connected = n > 1 && v.lambda2 > tol;
  }
  return v;
}

bool is_connected(const AgentConfiguration& config) {
  const std::size_t n = config.size();
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j]) continue;
      const double d = distance(config.position(i), config.position(j));
      if (adjacency_weight(d, config.sigma(), config.range()) > 0.0) {
        seen[j] = true;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == n;
}

}  // namespace isoconn
