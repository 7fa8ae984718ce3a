#include "isoconn/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "isoconn/error.hpp"
#include "isoconn/spectral.hpp"

namespace isoconn {

namespace {

double sorted_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

void require_index(const AgentConfiguration& config, std::size_t i) {
  if (i >= config.size()) throw Error(ErrorCode::IndexOutOfRange, "agent index " + std::to_string(i) + " out of range");
}

double cross(Position a, Position b) noexcept { return a.x * b.y - a.y * b.x; }

bool clear_of(const AgentConfiguration& config, std::size_t mobile, const std::vector<std::size_t>& neighbors,
              Position p) {
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (j == mobile) continue;
    const double d = distance(p, config.position(j));
    if (d == 0.0) return false;
    if (std::find(neighbors.begin(), neighbors.end(), j) != neighbors.end()) continue;
    if (d <= config.range()) return false;
  }
  return true;
}

// Does the distance from the segment a->b to c cross `range`? The distance
// along a line is convex, so the in-range part of the segment is an interval.
bool segment_crosses_range(Position a, Position b, Position c, double range) {
  const bool in_a = distance(a, c) <= range;
  const bool in_b = distance(b, c) <= range;
  if (in_a != in_b) return true;
  if (in_a) return false;
  const Position ab{b.x - a.x, b.y - a.y};
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  if (len2 == 0.0) return false;
  const double t = std::clamp(((c.x - a.x) * ab.x + (c.y - a.y) * ab.y) / len2, 0.0, 1.0);
  return distance(Position{a.x + t * ab.x, a.y + t * ab.y}, c) <= range;
}

}  // namespace

Matrix BlockDecomposition::reassemble() const {
  const std::size_t n = others.size() + 1;
  Matrix l(n);
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (std::size_t j = 0; j < others.size(); ++j) {
      l.set(others[i], others[j], reduced(i, j) + (i == j ? coupling_diag(i, i) : 0.0));
    }
    l.set(others[i], agent, -coupling[i]);
    l.set(agent, others[i], -coupling[i]);
  }
  l.set(agent, agent, gamma);
  return l;
}

BlockDecomposition block_decompose(const Matrix& laplacian, std::size_t agent) {
  const std::size_t n = laplacian.order();
  if (agent >= n) throw Error(ErrorCode::IndexOutOfRange, "agent index " + std::to_string(agent) + " out of range");
  if (n < 2) throw Error(ErrorCode::OrderTooSmall, "block decomposition needs at least two agents");
  require_laplacian(laplacian, "input");

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i)
    if (i != agent) others.push_back(i);

  const std::size_t m = others.size();
  Matrix reduced(m);
  Vector coupling(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> weights;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double l_ij = laplacian(others[i], others[j]);
      reduced.set(i, j, l_ij);
      weights.push_back(-l_ij);
    }
    reduced.set(i, i, sorted_sum(std::move(weights)));
    coupling[i] = -laplacian(others[i], agent) + 0.0;
  }
  const double gamma = sorted_sum(coupling);
  Matrix coupling_diag = Matrix::diagonal(coupling);
  return BlockDecomposition{agent, std::move(others), std::move(reduced), std::move(coupling),
                            std::move(coupling_diag), gamma};
}

double connectivity_differential(const Matrix& laplacian, const Matrix& variation) {
  if (laplacian.order() != variation.order())
    throw Error(ErrorCode::OrderMismatch, "variation order differs from Laplacian order");
  const double tol = kEigenvalueTol * std::max(1.0, variation.max_abs());
  if (!variation.is_symmetric(tol)) throw Error(ErrorCode::InvalidVariation, "variation is not symmetric");
  for (double s : variation.row_sums())
    if (std::abs(s) > tol) throw Error(ErrorCode::InvalidVariation, "variation rows do not sum to zero");

  const ConnectivityReport report = algebraic_connectivity(laplacian);
  if (report.degenerate)
    throw Error(ErrorCode::DegenerateFiedler, "lambda2 is repeated; its differential is not defined");
  const Vector dv = variation * std::span<const double>(report.fiedler);
  double q = 0.0;
  for (std::size_t i = 0; i < dv.size(); ++i) q += report.fiedler[i] * dv[i];
  return q;
}

Matrix laplacian_variation(const AgentConfiguration& config, std::size_t mobile, Position direction) {
  require_index(config, mobile);
  const std::size_t n = config.size();
  const Position pm = config.position(mobile);
  Matrix dl(n);
  double diag_m = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == mobile) continue;
    const Position pj = config.position(j);
    const double d = distance(pm, pj);
    if (d > config.range()) continue;
    const double dd = ((pm.x - pj.x) * direction.x + (pm.y - pj.y) * direction.y) / d;
    const double da = adjacency_weight_slope(d, config.sigma(), config.range()) * dd;
    dl.set(mobile, j, -da);
    dl.set(j, mobile, -da);
    dl.set(j, j, da);
    diag_m += da;
  }
  dl.set(mobile, mobile, diag_m);
  return dl;
}

Position connectivity_gradient(const AgentConfiguration& config, std::size_t mobile) {
  const Matrix l = build_laplacian(config);
  return Position{connectivity_differential(l, laplacian_variation(config, mobile, {1.0, 0.0})),
                  connectivity_differential(l, laplacian_variation(config, mobile, {0.0, 1.0}))};
}

std::string_view move_kind_name(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::Free: return "free";
    case MoveKind::Circle: return "circle";
    case MoveKind::Mirror: return "mirror";
    case MoveKind::Collinear: return "collinear";
    case MoveKind::Rigid: return "rigid";
    case MoveKind::Blocked: return "blocked";
  }
  return "unknown";
}

MoveSolution mirror_moves(const AgentConfiguration& config, std::size_t mobile) {
  require_index(config, mobile);
  MoveSolution out;
  out.original = config.position(mobile);
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (j != mobile && distance(out.original, config.position(j)) <= config.range())
      out.preserved_neighbors.push_back(j);
  }
  const auto& nb = out.preserved_neighbors;

  if (nb.empty()) {
    out.kind = MoveKind::Free;
    return out;
  }

  if (nb.size() == 1) {
    out.kind = MoveKind::Circle;
    const Position c = config.position(nb[0]);
    const double r = distance(out.original, c);
    out.circle = Circle{c, r};
    const double start = std::atan2(out.original.y - c.y, out.original.x - c.x);
    for (std::size_t k = 1; k < kCircleSamples; ++k) {
      const double phi = start + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(kCircleSamples);
      const Position p{c.x + r * std::cos(phi), c.y + r * std::sin(phi)};
      if (clear_of(config, mobile, nb, p)) out.alternatives.push_back(p);
    }
    return out;
  }

  const double eps = 1e-12 * std::max(1.0, config.range());
  const Position p0 = config.position(nb[0]);
  const Position p1 = config.position(nb[1]);
  const double len = distance(p0, p1);
  const Position u{(p1.x - p0.x) / len, (p1.y - p0.y) / len};
  for (std::size_t k = 2; k < nb.size(); ++k) {
    const Position pk = config.position(nb[k]);
    if (std::abs(cross(u, Position{pk.x - p0.x, pk.y - p0.y})) > eps) {
      out.kind = MoveKind::Rigid;
      return out;
    }
  }

  // Signed distance of the mobile agent from the neighbours' line.
  const double h = cross(u, Position{out.original.x - p0.x, out.original.y - p0.y});
  if (std::abs(h) <= eps) {
    out.kind = MoveKind::Collinear;
    return out;
  }
  const Position normal{-u.y, u.x};
  const Position mirrored{out.original.x - 2.0 * h * normal.x, out.original.y - 2.0 * h * normal.y};
  if (!clear_of(config, mobile, nb, mirrored)) {
    out.kind = MoveKind::Blocked;
    return out;
  }
  out.kind = MoveKind::Mirror;
  out.alternatives.push_back(mirrored);
  return out;
}

PathIntegral integrate_connectivity_change(const AgentConfiguration& config, std::size_t mobile,
                                           const std::vector<Position>& waypoints, std::size_t steps) {
  require_index(config, mobile);
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be at least 1");
  for (const Position& w : waypoints)
    if (!std::isfinite(w.x) || !std::isfinite(w.y)) throw Error(ErrorCode::NonFinite, "waypoint is not finite");

  std::vector<Position> points{config.position(mobile)};
  points.insert(points.end(), waypoints.begin(), waypoints.end());

  struct Segment {
    Position from;
    Position to;
    double length;
    std::size_t nodes = 0;
  };
  std::vector<Segment> segments;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const double len = distance(points[k], points[k + 1]);
    if (len == 0.0) continue;
    segments.push_back({points[k], points[k + 1], len});
    total += len;
  }

  PathIntegral out;
  out.min_gap = std::numeric_limits<double>::infinity();

  auto lambda2_at = [&](const AgentConfiguration& c) {
    return std::max(0.0, symmetric_eigendecomposition(build_laplacian(c)).eigenvalues[1]);
  };
  out.lambda2_start = lambda2_at(config);
  const AgentConfiguration end = config.with_position(mobile, points.back());
  out.lambda2_end = lambda2_at(end);
  out.direct = out.lambda2_end - out.lambda2_start;
  if (segments.empty()) return out;

  // Largest-remainder split of the step budget, at least one node per segment.
  std::size_t assigned = 0;
  std::vector<std::pair<double, std::size_t>> remainders;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const double exact = static_cast<double>(steps) * segments[k].length / total;
    segments[k].nodes = static_cast<std::size_t>(std::floor(exact));
    assigned += segments[k].nodes;
    remainders.emplace_back(exact - std::floor(exact), k);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t r = 0; assigned < steps && r < remainders.size(); ++r, ++assigned)
    ++segments[remainders[r].second].nodes;
  for (Segment& s : segments) s.nodes = std::max<std::size_t>(s.nodes, 1);

  for (std::size_t k = 0; k < segments.size(); ++k) {
    for (std::size_t j = 0; j < config.size(); ++j) {
      if (j == mobile) continue;
      if (segment_crosses_range(segments[k].from, segments[k].to, config.position(j), config.range())) {
        out.range_crossing = true;
        out.warnings.push_back("RangeCrossing: agent '" + config.agent(j).id + "' crosses the communication range on segment " +
                               std::to_string(k + 1) + "; the integral does not account for the weight jump");
      }
    }
  }

  double integral = 0.0;
  for (const Segment& s : segments) {
    const Position dir{(s.to.x - s.from.x) / s.length, (s.to.y - s.from.y) / s.length};
    const double h = s.length / static_cast<double>(s.nodes);
    for (std::size_t i = 0; i < s.nodes; ++i) {
      const double t = (static_cast<double>(i) + 0.5) * h;
      const AgentConfiguration at = config.with_position(mobile, {s.from.x + t * dir.x, s.from.y + t * dir.y});
      const SpectralDecomposition d = symmetric_eigendecomposition(build_laplacian(at));
      if (d.order() > 2) {
        const double gap = d.eigenvalues[2] - d.eigenvalues[1];
        out.min_gap = std::min(out.min_gap, gap);
        if (gap < kPathGapTol)
          throw Error(ErrorCode::DegenerateFiedler, "lambda2 becomes repeated along the path (gap " + std::to_string(gap) + ")");
      }
      const Matrix dl = laplacian_variation(at, mobile, dir);
      const Vector& v = d.eigenvectors[1];
      const Vector dv = dl * std::span<const double>(v);
      double q = 0.0;
      for (std::size_t r = 0; r < v.size(); ++r) q += v[r] * dv[r];
      integral += q * h;
      ++out.steps;
    }
  }
  out.integral = integral;
  return out;
}

}  // namespace isoconn
