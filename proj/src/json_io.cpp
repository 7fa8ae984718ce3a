#include "isoconn/json_io.hpp"

#include <cmath>

#include "isoconn/error.hpp"

namespace isoconn::json_io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) schema_error("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) schema_error(what + " must be a number");
  return j.get<double>();
}

Json num(double v, Precision p) {
  if (!std::isfinite(v)) return nullptr;
  return round_for(v, p);
}

Json vec(const Vector& v, Precision p) {
  Json out = Json::array();
  for (double x : v) out.push_back(num(x, p));
  return out;
}

Json point(Position pos, Precision p) { return Json{{"x", num(pos.x, p)}, {"y", num(pos.y, p)}}; }

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
}

Matrix parse_matrix(const Json& j) {
  const Json& order = member(j, "order");
  const Json& rows = member(j, "rows");
  if (!order.is_number_integer() || order.get<long long>() < 1) schema_error("'order' must be a positive integer");
  if (!rows.is_array()) schema_error("'rows' must be an array");
  const auto n = static_cast<std::size_t>(order.get<long long>());
  if (rows.size() != n) schema_error("'rows' has " + std::to_string(rows.size()) + " rows, 'order' says " + std::to_string(n));
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n) schema_error("every row must hold 'order' numbers");
    for (const Json& x : row) entries.push_back(number(x, "matrix entry"));
  }
  return Matrix::from_row_major(n, entries);
}

AgentConfiguration parse_configuration(const Json& j) {
  const double sigma = number(member(j, "sigma"), "'sigma'");
  const double range = number(member(j, "range"), "'range'");
  const Json& agents = member(j, "agents");
  if (!agents.is_array()) schema_error("'agents' must be an array");
  std::vector<Agent> parsed;
  for (const Json& a : agents) {
    const Json& id = member(a, "id");
    if (!id.is_string()) schema_error("agent 'id' must be a string");
    parsed.push_back(Agent{id.get<std::string>(), {number(member(a, "x"), "agent 'x'"), number(member(a, "y"), "agent 'y'")}});
  }
  return AgentConfiguration(std::move(parsed), sigma, range);
}

PathSpec parse_path(const Json& j) {
  PathSpec spec;
  const Json& mobile = member(j, "mobile");
  if (!mobile.is_string()) schema_error("'mobile' must be an agent id string");
  spec.mobile = mobile.get<std::string>();
  const Json& wps = member(j, "waypoints");
  if (!wps.is_array()) schema_error("'waypoints' must be an array");
  for (const Json& w : wps) {
    if (!w.is_array() || w.size() != 2) schema_error("each waypoint must be [x, y]");
    spec.waypoints.push_back({number(w[0], "waypoint x"), number(w[1], "waypoint y")});
  }
  const Json& steps = member(j, "steps");
  if (!steps.is_number_integer() || steps.get<long long>() < 1) schema_error("'steps' must be a positive integer");
  spec.steps = static_cast<std::size_t>(steps.get<long long>());
  return spec;
}

double round_for(double v, Precision p) noexcept {
  if (p == Precision::Full || !std::isfinite(v)) return v;
  const double r = std::round(v * 1e4) / 1e4;
  return r == 0.0 ? 0.0 : r;
}

Json to_json(const Matrix& m, Precision p) {
  Json rows = Json::array();
  for (const auto& r : m.rows()) rows.push_back(vec(r, p));
  return Json{{"order", m.order()}, {"rows", rows}};
}

Json to_json(const AgentConfiguration& c, Precision p) {
  Json agents = Json::array();
  for (const Agent& a : c.agents()) agents.push_back(Json{{"id", a.id}, {"x", num(a.position.x, p)}, {"y", num(a.position.y, p)}});
  return Json{{"sigma", c.sigma()}, {"range", c.range()}, {"agents", agents}};
}

Json to_json(const SpectralDecomposition& d, Precision p) {
  Json vecs = Json::array();
  for (const Vector& v : d.eigenvectors) vecs.push_back(vec(v, p));
  Json degenerate = Json::array();
  for (bool b : d.degenerate) degenerate.push_back(b);
  return Json{{"order", d.order()}, {"eigenvalues", vec(d.eigenvalues, p)}, {"eigenvectors", vecs},
              {"degenerate", degenerate}, {"residual", d.residual}};
}

Json to_json(const ConnectivityReport& r, Precision p) {
  return Json{{"lambda2", num(r.lambda2, p)}, {"fiedler", vec(r.fiedler, p)}, {"degenerate", r.degenerate},
              {"spectrum", vec(r.spectrum, p)}};
}

Json to_json(const IsoTransformVerdict& v) {
  return Json{{"passes", v.passes()},
              {"orthonormal", v.orthonormal},
              {"fixes_ones", v.fixes_ones},
              {"permutation", v.permutation},
              {"identity", v.identity},
              {"orthonormality_error", v.orthonormality_error},
              {"fixed_point_error", v.fixed_point_error}};
}

Json to_json(const LaplacianValidation& v, Precision p) {
  return Json{{"passes", v.passes()},      {"symmetric", v.symmetric}, {"zero_row_sums", v.zero_row_sums},
              {"nonpositive_offdiag", v.nonpositive_offdiag}, {"psd", v.psd}, {"connected", v.connected},
              {"lambda1", num(v.lambda1, p)}, {"lambda2", num(v.lambda2, p)}};
}

Json to_json(const IsoFamilyEntry& e, Precision p) {
  Json out{{"perm", e.perm ? Json(e.perm->one_based()) : Json(nullptr)},
           {"matrix", to_json(e.result, p)},
           {"laplacian_structured", e.laplacian_structured},
           {"distinct_from_base", e.distinct_from_base}};
  return out;
}

Json family_to_json(const std::vector<IsoFamilyEntry>& family, Precision p) {
  Json out = Json::array();
  for (const auto& e : family) out.push_back(to_json(e, p));
  return out;
}

Json to_json(const NullSpaceCheck& c, Precision p) {
  return Json{{"holds", c.holds},
              {"residual", c.residual},
              {"lambda2_a", num(c.lambda2_a, p)},
              {"lambda2_b", num(c.lambda2_b, p)},
              {"lambda2_agree", c.lambda2_agree},
              {"fiedler", vec(c.fiedler, p)}};
}

Json to_json(const MoveSolution& s, const AgentConfiguration& c, Precision p) {
  Json alternatives = Json::array();
  for (Position a : s.alternatives) alternatives.push_back(point(a, p));
  Json neighbors = Json::array();
  for (std::size_t i : s.preserved_neighbors) neighbors.push_back(c.agent(i).id);
  Json circle = nullptr;
  if (s.circle) circle = Json{{"center", point(s.circle->center, p)}, {"radius", num(s.circle->radius, p)}};
  return Json{{"kind", std::string(move_kind_name(s.kind))}, {"original", point(s.original, p)},
              {"alternatives", alternatives}, {"preserved_neighbors", neighbors}, {"circle", circle}};
}

Json to_json(const PathIntegral& r, Precision p) {
  return Json{{"integral", num(r.integral, p)},
              {"direct", num(r.direct, p)},
              {"difference", r.integral - r.direct},
              {"lambda2_start", num(r.lambda2_start, p)},
              {"lambda2_end", num(r.lambda2_end, p)},
              {"min_gap", num(r.min_gap, p)},
              {"steps", r.steps},
              {"range_crossing", r.range_crossing},
              {"warnings", r.warnings}};
}

Json to_json(const ZoneSample& z, Precision p) {
  Json accepted = Json::array();
  for (const ZonePoint& pt : z.accepted)
    accepted.push_back(Json{{"x", num(pt.position.x, p)}, {"y", num(pt.position.y, p)}, {"lambda2", num(pt.lambda2, p)}});
  const Grid& g = z.grid;
  return Json{{"target", num(z.target_lambda2, p)},
              {"tol", z.tolerance},
              {"grid", Json{{"x_min", g.x_min}, {"x_max", g.x_max}, {"y_min", g.y_min}, {"y_max", g.y_max}, {"nx", g.nx}, {"ny", g.ny}}},
              {"accepted", accepted},
              {"rejected_count", z.rejected_count}};
}

Json to_json(const L4Validity& v, Precision p) {
  return Json{{"upper_root_condition", v.upper_root_condition},
              {"numeric_lambda2_is_4", v.numeric_lambda2_is_4},
              {"discrepancy", v.discrepancy},
              {"lambda2", num(v.lambda2, p)},
              {"lower_root", num(v.lower_root, p)}};
}

}  // namespace isoconn::json_io
