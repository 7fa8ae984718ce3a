#include "isoconn/isoconn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "isoconn/error.hpp"
#include "isoconn/iso_connectivity.hpp"
#include "isoconn/isospectral.hpp"
#include "isoconn/json_io.hpp"
#include "isoconn/matrix.hpp"
#include "isoconn/mobility.hpp"
#include "isoconn/spectral.hpp"
#include "isoconn/svg.hpp"
#include "isoconn/topology.hpp"

using namespace isoconn;
namespace jio = isoconn::json_io;

struct ic_matrix {
  Matrix value;
};
struct ic_spectrum {
  SpectralDecomposition value;
};
struct ic_config {
  AgentConfiguration value;
};
struct ic_report {
  ConnectivityReport value;
};
struct ic_family {
  std::vector<IsoFamilyEntry> entries;
};
struct ic_block {
  BlockDecomposition value;
};
struct ic_moves {
  MoveSolution value;
  AgentConfiguration config;
};
struct ic_path {
  jio::PathSpec value;
};
struct ic_integration {
  PathIntegral value;
};
struct ic_zone {
  ZoneSample value;
};

namespace {

thread_local std::string g_last_error;

ic_status to_status(ErrorCode code) { return static_cast<ic_status>(static_cast<int>(code) + 1); }

template <class F>
ic_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return IC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return IC_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return IC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

jio::Precision precision_of(ic_precision p) {
  return p == IC_PRECISION_DISPLAY ? jio::Precision::Display : jio::Precision::Full;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const jio::Json& j, char** out) {
  require(out, "out");
  *out = dup_string(j.dump());
}

void copy_out(const Vector& v, double* out, std::size_t capacity) {
  require(out, "out");
  if (capacity < v.size()) throw Error(ErrorCode::InvalidArgument, "output buffer too small");
  std::copy(v.begin(), v.end(), out);
}

std::size_t zero_based(std::size_t one_based, std::size_t n) {
  if (one_based < 1 || one_based > n) throw Error(ErrorCode::IndexOutOfRange, "agent index " + std::to_string(one_based) + " out of range");
  return one_based - 1;
}

Permutation perm_from(const std::size_t* images, std::size_t n) {
  require(images, "images");
  std::vector<long long> v(images, images + n);
  return Permutation::from_one_based(v);
}

template <class T>
void set_out(T** out, T* value) {
  *out = value;
}

}  // namespace

extern "C" {

const char* ic_status_name(ic_status status) {
  switch (status) {
    case IC_OK: return "Ok";
    case IC_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case IC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(ErrorCode::ParseError))
    return error_code_name(static_cast<ErrorCode>(code)).data();
  return "Unknown";
}

const char* ic_last_error(void) { return g_last_error.c_str(); }
void ic_string_free(char* s) { std::free(s); }
const char* ic_version(void) { return "1.0.0"; }

// ---- matrices

ic_status ic_matrix_create(size_t order, const double* row_major, ic_matrix** out) {
  return guard([&] {
    require(row_major, "row_major");
    require(out, "out");
    set_out(out, new ic_matrix{Matrix::from_row_major(order, {row_major, order * order})});
  });
}

ic_status ic_matrix_from_json(const char* text, ic_matrix** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    set_out(out, new ic_matrix{jio::parse_matrix(jio::parse_text(text))});
  });
}

ic_status ic_matrix_to_json(const ic_matrix* m, ic_precision precision, char** out) {
  return guard([&] {
    require(m, "matrix");
    emit(jio::to_json(m->value, precision_of(precision)), out);
  });
}

ic_status ic_matrix_clone(const ic_matrix* m, ic_matrix** out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    set_out(out, new ic_matrix{m->value});
  });
}

void ic_matrix_destroy(ic_matrix* m) { delete m; }
size_t ic_matrix_order(const ic_matrix* m) { return m ? m->value.order() : 0; }

ic_status ic_matrix_entries(const ic_matrix* m, double* out, size_t capacity) {
  return guard([&] {
    require(m, "matrix");
    const auto d = m->value.data();
    copy_out(Vector(d.begin(), d.end()), out, capacity);
  });
}

ic_status ic_matrix_equal(const ic_matrix* a, const ic_matrix* b, double tol, int* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = tol == 0.0 ? a->value == b->value : a->value.approx_equal(b->value, tol);
  });
}

ic_status ic_permutation_matrix(const size_t* images, size_t n, ic_matrix** out) {
  return guard([&] {
    require(out, "out");
    set_out(out, new ic_matrix{permutation_matrix(perm_from(images, n))});
  });
}

ic_status ic_ones_axis_rotation(size_t n, double theta, ic_matrix** out) {
  return guard([&] {
    require(out, "out");
    set_out(out, new ic_matrix{ones_axis_rotation(n, theta)});
  });
}

ic_status ic_validate_iso_transform(const ic_matrix* q, double tol, ic_iso_verdict* out) {
  return guard([&] {
    require(q, "q");
    require(out, "out");
    const IsoTransformVerdict v = validate_iso_transform(q->value, tol);
    *out = ic_iso_verdict{v.orthonormality_error, v.fixed_point_error, v.orthonormal, v.fixes_ones,
                          v.permutation, v.identity, v.passes()};
  });
}

// ---- eigendecomposition

ic_status ic_eigendecompose(const ic_matrix* m, ic_spectrum** out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    set_out(out, new ic_spectrum{symmetric_eigendecomposition(m->value)});
  });
}

void ic_spectrum_destroy(ic_spectrum* s) { delete s; }
size_t ic_spectrum_order(const ic_spectrum* s) { return s ? s->value.order() : 0; }

ic_status ic_spectrum_eigenvalues(const ic_spectrum* s, double* out, size_t capacity) {
  return guard([&] {
    require(s, "spectrum");
    copy_out(s->value.eigenvalues, out, capacity);
  });
}

ic_status ic_spectrum_eigenvector(const ic_spectrum* s, size_t index, double* out, size_t capacity) {
  return guard([&] {
    require(s, "spectrum");
    if (index >= s->value.order()) throw Error(ErrorCode::IndexOutOfRange, "eigenvector index out of range");
    copy_out(s->value.eigenvectors[index], out, capacity);
  });
}

double ic_spectrum_residual(const ic_spectrum* s) { return s ? s->value.residual : 0.0; }

ic_status ic_spectrum_to_json(const ic_spectrum* s, ic_precision precision, char** out) {
  return guard([&] {
    require(s, "spectrum");
    emit(jio::to_json(s->value, precision_of(precision)), out);
  });
}

// ---- configurations

double ic_adjacency_weight(double distance, double sigma, double range) {
  return adjacency_weight(distance, sigma, range);
}

ic_status ic_config_from_json(const char* text, ic_config** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    set_out(out, new ic_config{jio::parse_configuration(jio::parse_text(text))});
  });
}

ic_status ic_config_to_json(const ic_config* c, ic_precision precision, char** out) {
  return guard([&] {
    require(c, "config");
    emit(jio::to_json(c->value, precision_of(precision)), out);
  });
}

void ic_config_destroy(ic_config* c) { delete c; }
size_t ic_config_size(const ic_config* c) { return c ? c->value.size() : 0; }

ic_status ic_config_index_of(const ic_config* c, const char* id, size_t* out) {
  return guard([&] {
    require(c, "config");
    require(id, "id");
    require(out, "out");
    *out = c->value.index_of(id) + 1;
  });
}

ic_status ic_config_laplacian(const ic_config* c, ic_matrix** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    set_out(out, new ic_matrix{build_laplacian(c->value)});
  });
}

ic_status ic_config_is_connected(const ic_config* c, int* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = is_connected(c->value);
  });
}

ic_status ic_config_relabel(const ic_config* c, const size_t* images, size_t n, ic_config** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    set_out(out, new ic_config{relabel_configuration(c->value, perm_from(images, n))});
  });
}

ic_status ic_config_render_svg(const ic_config* c, const double* ghosts_xy, size_t n_ghosts, char** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    SvgOptions options;
    if (n_ghosts > 0) require(ghosts_xy, "ghosts_xy");
    for (size_t i = 0; i < n_ghosts; ++i) options.ghosts.push_back({ghosts_xy[2 * i], ghosts_xy[2 * i + 1]});
    *out = dup_string(render_svg(c->value, options));
  });
}

ic_status ic_validate_laplacian(const ic_matrix* m, double tol, ic_laplacian_validation* out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    const LaplacianValidation v = validate_laplacian(m->value, tol);
    *out = ic_laplacian_validation{v.symmetric, v.zero_row_sums, v.nonpositive_offdiag, v.psd,
                                   v.connected, v.passes(),    v.lambda1,       v.lambda2};
  });
}

// ---- connectivity

ic_status ic_algebraic_connectivity(const ic_matrix* laplacian, ic_report** out) {
  return guard([&] {
    require(laplacian, "laplacian");
    require(out, "out");
    set_out(out, new ic_report{algebraic_connectivity(laplacian->value)});
  });
}

void ic_report_destroy(ic_report* r) { delete r; }
double ic_report_lambda2(const ic_report* r) { return r ? r->value.lambda2 : 0.0; }
int ic_report_degenerate(const ic_report* r) { return r ? r->value.degenerate : 0; }
size_t ic_report_order(const ic_report* r) { return r ? r->value.spectrum.size() : 0; }

ic_status ic_report_fiedler(const ic_report* r, double* out, size_t capacity) {
  return guard([&] {
    require(r, "report");
    copy_out(r->value.fiedler, out, capacity);
  });
}

ic_status ic_report_spectrum(const ic_report* r, double* out, size_t capacity) {
  return guard([&] {
    require(r, "report");
    copy_out(r->value.spectrum, out, capacity);
  });
}

ic_status ic_report_to_json(const ic_report* r, ic_precision precision, char** out) {
  return guard([&] {
    require(r, "report");
    emit(jio::to_json(r->value, precision_of(precision)), out);
  });
}

ic_status ic_is_isospectral(const ic_matrix* a, const ic_matrix* b, double tol, int* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = is_isospectral(a->value, b->value, tol);
  });
}

ic_status ic_fiedler_null_space_check(const ic_matrix* a, const ic_matrix* b, double tol, ic_null_space_check* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    const NullSpaceCheck c = fiedler_null_space_check(a->value, b->value, tol);
    *out = ic_null_space_check{c.holds, c.residual, c.lambda2_a, c.lambda2_b, c.lambda2_agree};
  });
}

// ---- families

ic_status ic_similarity_transform(const ic_matrix* laplacian, const ic_matrix* q, ic_family** out) {
  return guard([&] {
    require(laplacian, "laplacian");
    require(q, "q");
    require(out, "out");
    set_out(out, new ic_family{{similarity_transform(laplacian->value, q->value)}});
  });
}

ic_status ic_permutation_family(const ic_matrix* laplacian, const ic_family_options* options, ic_family** out) {
  return guard([&] {
    require(laplacian, "laplacian");
    require(options, "options");
    require(out, "out");
    FamilyOptions o;
    o.limit = options->limit;
    o.dedupe = options->dedupe != 0;
    if (options->use_seed) o.seed = options->seed;
    set_out(out, new ic_family{permutation_family(laplacian->value, o)});
  });
}

void ic_family_destroy(ic_family* f) { delete f; }
size_t ic_family_size(const ic_family* f) { return f ? f->entries.size() : 0; }

namespace {
const IsoFamilyEntry& entry_at(const ic_family* f, size_t index) {
  require(f, "family");
  if (index >= f->entries.size()) throw Error(ErrorCode::IndexOutOfRange, "family index out of range");
  return f->entries[index];
}
}  // namespace

ic_status ic_family_result(const ic_family* f, size_t index, ic_matrix** out) {
  return guard([&] {
    require(out, "out");
    set_out(out, new ic_matrix{entry_at(f, index).result});
  });
}

ic_status ic_family_transform(const ic_family* f, size_t index, ic_matrix** out) {
  return guard([&] {
    require(out, "out");
    set_out(out, new ic_matrix{entry_at(f, index).transform});
  });
}

ic_status ic_family_flags(const ic_family* f, size_t index, int* laplacian_structured, int* distinct_from_base) {
  return guard([&] {
    const IsoFamilyEntry& e = entry_at(f, index);
    if (laplacian_structured) *laplacian_structured = e.laplacian_structured;
    if (distinct_from_base) *distinct_from_base = e.distinct_from_base;
  });
}

ic_status ic_family_perm(const ic_family* f, size_t index, size_t* out, size_t capacity, int* has_perm) {
  return guard([&] {
    require(has_perm, "has_perm");
    const IsoFamilyEntry& e = entry_at(f, index);
    *has_perm = e.perm.has_value();
    if (!e.perm) return;
    require(out, "out");
    if (capacity < e.perm->size()) throw Error(ErrorCode::InvalidArgument, "output buffer too small");
    for (std::size_t i = 0; i < e.perm->size(); ++i) out[i] = (*e.perm)(i) + 1;
  });
}

ic_status ic_family_to_json(const ic_family* f, ic_precision precision, char** out) {
  return guard([&] {
    require(f, "family");
    emit(jio::family_to_json(f->entries, precision_of(precision)), out);
  });
}

// ---- mobile agent

ic_status ic_block_decompose(const ic_matrix* laplacian, size_t agent, ic_block** out) {
  return guard([&] {
    require(laplacian, "laplacian");
    require(out, "out");
    set_out(out, new ic_block{block_decompose(laplacian->value, zero_based(agent, laplacian->value.order()))});
  });
}

void ic_block_destroy(ic_block* b) { delete b; }
double ic_block_gamma(const ic_block* b) { return b ? b->value.gamma : 0.0; }

ic_status ic_block_coupling(const ic_block* b, double* out, size_t capacity) {
  return guard([&] {
    require(b, "block");
    copy_out(b->value.coupling, out, capacity);
  });
}

ic_status ic_block_reduced(const ic_block* b, ic_matrix** out) {
  return guard([&] {
    require(b, "block");
    require(out, "out");
    set_out(out, new ic_matrix{b->value.reduced});
  });
}

ic_status ic_block_reassemble(const ic_block* b, ic_matrix** out) {
  return guard([&] {
    require(b, "block");
    require(out, "out");
    set_out(out, new ic_matrix{b->value.reassemble()});
  });
}

ic_status ic_connectivity_differential(const ic_matrix* laplacian, const ic_matrix* variation, double* out) {
  return guard([&] {
    require(laplacian, "laplacian");
    require(variation, "variation");
    require(out, "out");
    *out = connectivity_differential(laplacian->value, variation->value);
  });
}

ic_status ic_laplacian_variation(const ic_config* c, size_t mobile, double dx, double dy, ic_matrix** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    set_out(out, new ic_matrix{laplacian_variation(c->value, zero_based(mobile, c->value.size()), {dx, dy})});
  });
}

ic_status ic_connectivity_gradient(const ic_config* c, size_t mobile, double* gx, double* gy) {
  return guard([&] {
    require(c, "config");
    require(gx, "gx");
    require(gy, "gy");
    const Position g = connectivity_gradient(c->value, zero_based(mobile, c->value.size()));
    *gx = g.x;
    *gy = g.y;
  });
}

ic_status ic_mirror_moves(const ic_config* c, size_t mobile, ic_moves** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    set_out(out, new ic_moves{mirror_moves(c->value, zero_based(mobile, c->value.size())), c->value});
  });
}

void ic_moves_destroy(ic_moves* m) { delete m; }
const char* ic_moves_kind(const ic_moves* m) { return m ? move_kind_name(m->value.kind).data() : ""; }
size_t ic_moves_count(const ic_moves* m) { return m ? m->value.alternatives.size() : 0; }

ic_status ic_moves_alternative(const ic_moves* m, size_t index, double* x, double* y) {
  return guard([&] {
    require(m, "moves");
    require(x, "x");
    require(y, "y");
    if (index >= m->value.alternatives.size()) throw Error(ErrorCode::IndexOutOfRange, "alternative index out of range");
    *x = m->value.alternatives[index].x;
    *y = m->value.alternatives[index].y;
  });
}

ic_status ic_moves_to_json(const ic_moves* m, ic_precision precision, char** out) {
  return guard([&] {
    require(m, "moves");
    emit(jio::to_json(m->value, m->config, precision_of(precision)), out);
  });
}

ic_status ic_path_from_json(const char* text, ic_path** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    set_out(out, new ic_path{jio::parse_path(jio::parse_text(text))});
  });
}

void ic_path_destroy(ic_path* p) { delete p; }
const char* ic_path_mobile(const ic_path* p) { return p ? p->value.mobile.c_str() : ""; }
size_t ic_path_steps(const ic_path* p) { return p ? p->value.steps : 0; }
size_t ic_path_waypoint_count(const ic_path* p) { return p ? p->value.waypoints.size() : 0; }

ic_status ic_path_waypoints(const ic_path* p, double* xy, size_t capacity) {
  return guard([&] {
    require(p, "path");
    Vector flat;
    for (Position w : p->value.waypoints) {
      flat.push_back(w.x);
      flat.push_back(w.y);
    }
    if (flat.empty()) return;
    copy_out(flat, xy, capacity);
  });
}

ic_status ic_integrate_path(const ic_config* c, size_t mobile, const double* waypoints_xy, size_t n_waypoints,
                            size_t steps, ic_integration** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    if (n_waypoints > 0) require(waypoints_xy, "waypoints_xy");
    std::vector<Position> wps;
    for (size_t i = 0; i < n_waypoints; ++i) wps.push_back({waypoints_xy[2 * i], waypoints_xy[2 * i + 1]});
    set_out(out, new ic_integration{
                     integrate_connectivity_change(c->value, zero_based(mobile, c->value.size()), wps, steps)});
  });
}

void ic_integration_destroy(ic_integration* r) { delete r; }

void ic_integration_get(const ic_integration* r, ic_integration_values* out) {
  if (r == nullptr || out == nullptr) return;
  const PathIntegral& v = r->value;
  *out = ic_integration_values{v.integral, v.direct, v.lambda2_start, v.lambda2_end, v.min_gap, v.steps, v.range_crossing};
}

size_t ic_integration_warning_count(const ic_integration* r) { return r ? r->value.warnings.size() : 0; }

const char* ic_integration_warning(const ic_integration* r, size_t index) {
  if (r == nullptr || index >= r->value.warnings.size()) return nullptr;
  return r->value.warnings[index].c_str();
}

ic_status ic_integration_to_json(const ic_integration* r, ic_precision precision, char** out) {
  return guard([&] {
    require(r, "integration");
    emit(jio::to_json(r->value, precision_of(precision)), out);
  });
}

// ---- parametric family and zones

ic_status ic_parametric_l4(double alpha, double beta, ic_matrix** out) {
  return guard([&] {
    require(out, "out");
    set_out(out, new ic_matrix{parametric_l4({alpha, beta})});
  });
}

ic_status ic_l4_closed_form_spectrum(double alpha, double beta, double out[4]) {
  return guard([&] {
    require(out, "out");
    const auto s = l4_closed_form_spectrum({alpha, beta});
    std::copy(s.begin(), s.end(), out);
  });
}

ic_status ic_l4_validity_check(double alpha, double beta, ic_l4_validity* out) {
  return guard([&] {
    require(out, "out");
    const L4Validity v = l4_validity({alpha, beta});
    *out = ic_l4_validity{v.upper_root_condition, v.numeric_lambda2_is_4, v.discrepancy, v.lambda2, v.lower_root};
  });
}

ic_status ic_iso_connectivity_zone(const ic_config* c, size_t mobile, const ic_grid* grid, double tol,
                                   const double* target, ic_zone** out) {
  return guard([&] {
    require(c, "config");
    require(grid, "grid");
    require(out, "out");
    const Grid g{grid->x_min, grid->x_max, grid->y_min, grid->y_max, grid->nx, grid->ny};
    std::optional<double> t;
    if (target) t = *target;
    set_out(out, new ic_zone{iso_connectivity_zone(c->value, zero_based(mobile, c->value.size()), g, tol, t)});
  });
}

void ic_zone_destroy(ic_zone* z) { delete z; }
double ic_zone_target(const ic_zone* z) { return z ? z->value.target_lambda2 : 0.0; }
size_t ic_zone_accepted_count(const ic_zone* z) { return z ? z->value.accepted.size() : 0; }
size_t ic_zone_rejected_count(const ic_zone* z) { return z ? z->value.rejected_count : 0; }

ic_status ic_zone_accepted(const ic_zone* z, size_t index, double* x, double* y, double* lambda2) {
  return guard([&] {
    require(z, "zone");
    if (index >= z->value.accepted.size()) throw Error(ErrorCode::IndexOutOfRange, "zone index out of range");
    const ZonePoint& p = z->value.accepted[index];
    if (x) *x = p.position.x;
    if (y) *y = p.position.y;
    if (lambda2) *lambda2 = p.lambda2;
  });
}

ic_status ic_zone_to_json(const ic_zone* z, ic_precision precision, char** out) {
  return guard([&] {
    require(z, "zone");
    emit(jio::to_json(z->value, precision_of(precision)), out);
  });
}

}  // extern "C"
