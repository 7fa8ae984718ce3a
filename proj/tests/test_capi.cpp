// Exercises the shared library through its C interface only.

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "isoconn/isoconn.h"

namespace {

const char* kL1 = R"({"order": 4, "rows": [[3,-1,-1,-1],[-1,2,-1,0],[-1,-1,3,-1],[-1,0,-1,2]]})";
const char* kL4a = R"({"order": 4, "rows": [[4,-1,-1,-2],[-1,5,-1,-3],[-1,-1,3,-1],[-2,-3,-1,6]]})";
const char* kL4b = R"({"order": 4, "rows": [[5,-1,-1,-3],[-1,6,-1,-4],[-1,-1,3,-1],[-3,-4,-1,8]]})";
const char* kConfig = R"({"sigma": 1, "range": 5, "agents": [
  {"id": "n1", "x": 0, "y": 0}, {"id": "n2", "x": 4, "y": 0}, {"id": "m", "x": 1, "y": 2}, {"id": "far", "x": 20, "y": 20}]})";

ic_matrix* matrix(const char* json) {
  ic_matrix* m = nullptr;
  REQUIRE(ic_matrix_from_json(json, &m) == IC_OK);
  return m;
}

std::string take(char* s) {
  std::string out = s;
  ic_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("status codes and last error") {
    ic_matrix* m = nullptr;
    CHECK(ic_matrix_from_json("{\"order\": 2", &m) == IC_ERR_PARSE);
    CHECK(m == nullptr);
    CHECK(std::string(ic_status_name(IC_ERR_PARSE)) == "ParseError");
    CHECK(std::strlen(ic_last_error()) > 0);
    CHECK(ic_matrix_from_json(nullptr, &m) == IC_ERR_INVALID_ARGUMENT);
    CHECK(std::string(ic_status_name(IC_OK)) == "Ok");
    CHECK(std::string(ic_version()).size() > 0);

    const double bad[] = {1, 2, 3, 1};
    CHECK(ic_matrix_create(2, bad, &m) == IC_OK);
    ic_spectrum* s = nullptr;
    CHECK(ic_eigendecompose(m, &s) == IC_ERR_NON_SYMMETRIC);
    ic_matrix_destroy(m);
    ic_matrix_destroy(nullptr);
  }

  TEST_CASE("spectrum through handles") {
    ic_matrix* m = matrix(kL4a);
    ic_spectrum* s = nullptr;
    REQUIRE(ic_eigendecompose(m, &s) == IC_OK);
    CHECK(ic_spectrum_order(s) == 4);
    double values[4];
    CHECK(ic_spectrum_eigenvalues(s, values, 3) == IC_ERR_INVALID_ARGUMENT);
    REQUIRE(ic_spectrum_eigenvalues(s, values, 4) == IC_OK);
    CHECK(values[2] == doctest::Approx(7 - std::sqrt(3.0)));
    double v[4];
    CHECK(ic_spectrum_eigenvector(s, 9, v, 4) == IC_ERR_INDEX_OUT_OF_RANGE);
    REQUIRE(ic_spectrum_eigenvector(s, 1, v, 4) == IC_OK);
    CHECK(v[2] == doctest::Approx(3 / std::sqrt(12.0)));
    CHECK(ic_spectrum_residual(s) < 1e-12);
    char* json = nullptr;
    REQUIRE(ic_spectrum_to_json(s, IC_PRECISION_DISPLAY, &json) == IC_OK);
    CHECK(take(json).find("5.2679") != std::string::npos);
    ic_spectrum_destroy(s);
    ic_matrix_destroy(m);
  }

  TEST_CASE("permutation family and transforms") {
    ic_matrix* l1 = matrix(kL1);
    ic_family_options opts{0, 1, 0, 0};
    ic_family* f = nullptr;
    REQUIRE(ic_permutation_family(l1, &opts, &f) == IC_OK);
    CHECK(ic_family_size(f) == 6);
    size_t perm[4];
    int has = 0;
    REQUIRE(ic_family_perm(f, 0, perm, 4, &has) == IC_OK);
    CHECK(has == 1);
    CHECK(std::vector<size_t>(perm, perm + 4) == std::vector<size_t>{1, 2, 4, 3});
    ic_family_destroy(f);

    const size_t reversal[] = {4, 3, 2, 1};
    ic_matrix* j1 = nullptr;
    REQUIRE(ic_permutation_matrix(reversal, 4, &j1) == IC_OK);
    ic_iso_verdict verdict{};
    REQUIRE(ic_validate_iso_transform(j1, 1e-12, &verdict) == IC_OK);
    CHECK(verdict.passes);
    CHECK(verdict.permutation);
    REQUIRE(ic_similarity_transform(l1, j1, &f) == IC_OK);
    ic_matrix* l2 = nullptr;
    REQUIRE(ic_family_result(f, 0, &l2) == IC_OK);
    double e[16];
    REQUIRE(ic_matrix_entries(l2, e, 16) == IC_OK);
    const std::vector<double> expected{2, -1, 0, -1, -1, 3, -1, -1, 0, -1, 2, -1, -1, -1, -1, 3};
    CHECK(std::vector<double>(e, e + 16) == expected);
    int iso = 0;
    REQUIRE(ic_is_isospectral(l1, l2, 1e-12, &iso) == IC_OK);
    CHECK(iso == 1);

    const size_t dup[] = {1, 1, 2, 3};
    ic_matrix* bad = nullptr;
    CHECK(ic_permutation_matrix(dup, 4, &bad) == IC_ERR_NOT_BIJECTION);
    CHECK(ic_ones_axis_rotation(2, 0.1, &bad) == IC_ERR_ORDER_TOO_SMALL);

    ic_matrix_destroy(l2);
    ic_family_destroy(f);
    ic_matrix_destroy(j1);
    ic_matrix_destroy(l1);
  }

  TEST_CASE("connectivity and the null-space check") {
    ic_matrix* a = matrix(kL4a);
    ic_matrix* b = matrix(kL4b);
    ic_report* r = nullptr;
    REQUIRE(ic_algebraic_connectivity(a, &r) == IC_OK);
    CHECK(ic_report_lambda2(r) == doctest::Approx(4.0));
    CHECK(ic_report_degenerate(r) == 0);
    ic_report_destroy(r);
    ic_null_space_check c{};
    REQUIRE(ic_fiedler_null_space_check(a, b, 1e-9, &c) == IC_OK);
    CHECK(c.holds);
    CHECK(c.residual <= 1e-9);
    ic_matrix_destroy(a);
    ic_matrix_destroy(b);
  }

  TEST_CASE("configurations, moves and zones") {
    ic_config* c = nullptr;
    REQUIRE(ic_config_from_json(kConfig, &c) == IC_OK);
    CHECK(ic_config_size(c) == 4);
    size_t idx = 0;
    REQUIRE(ic_config_index_of(c, "m", &idx) == IC_OK);
    CHECK(idx == 3);
    CHECK(ic_config_index_of(c, "zz", &idx) == IC_ERR_INDEX_OUT_OF_RANGE);

    ic_moves* mv = nullptr;
    REQUIRE(ic_mirror_moves(c, 3, &mv) == IC_OK);
    CHECK(std::string(ic_moves_kind(mv)) == "mirror");
    REQUIRE(ic_moves_count(mv) == 1);
    double x = 0, y = 0;
    REQUIRE(ic_moves_alternative(mv, 0, &x, &y) == IC_OK);
    CHECK(x == doctest::Approx(1.0));
    CHECK(y == doctest::Approx(-2.0));
    ic_moves_destroy(mv);
    CHECK(ic_mirror_moves(c, 0, &mv) == IC_ERR_INDEX_OUT_OF_RANGE);

    const ic_grid grid{-3.5, 4.5, -3.5, 3.5, 8, 7};
    ic_zone* z = nullptr;
    REQUIRE(ic_iso_connectivity_zone(c, 3, &grid, 1e-9, nullptr, &z) == IC_OK);
    CHECK(ic_zone_accepted_count(z) + ic_zone_rejected_count(z) == 56);
    ic_zone_destroy(z);

    int connected = 0;
    REQUIRE(ic_config_is_connected(c, &connected) == IC_OK);
    CHECK(connected == 0);

    char* svg = nullptr;
    REQUIRE(ic_config_render_svg(c, nullptr, 0, &svg) == IC_OK);
    CHECK(take(svg).find("<svg") != std::string::npos);
    ic_config_destroy(c);

    CHECK(ic_config_from_json(R"({"sigma": 1, "range": 1, "agents": [{"id": "a", "x": 0, "y": 0}, {"id": "b", "x": 0, "y": 0}]})", &c) ==
          IC_ERR_COINCIDENT_AGENTS);
  }

  TEST_CASE("path integration") {
    ic_config* c = nullptr;
    REQUIRE(ic_config_from_json(kConfig, &c) == IC_OK);
    ic_path* p = nullptr;
    REQUIRE(ic_path_from_json(R"({"mobile": "m", "waypoints": [[1.5, 1.5], [2, 1]], "steps": 2000})", &p) == IC_OK);
    CHECK(std::string(ic_path_mobile(p)) == "m");
    std::vector<double> xy(2 * ic_path_waypoint_count(p));
    REQUIRE(ic_path_waypoints(p, xy.data(), xy.size()) == IC_OK);
    ic_integration* r = nullptr;
    REQUIRE(ic_integrate_path(c, 3, xy.data(), xy.size() / 2, ic_path_steps(p), &r) == IC_OK);
    ic_integration_values v{};
    ic_integration_get(r, &v);
    CHECK(std::abs(v.integral - v.direct) < 1e-5);
    CHECK(v.steps == 2000);
    CHECK(ic_integration_warning_count(r) == 0);
    ic_integration_destroy(r);
    ic_path_destroy(p);
    ic_config_destroy(c);
  }

  TEST_CASE("parametric family") {
    double s[4];
    REQUIRE(ic_l4_closed_form_spectrum(3, 4, s) == IC_OK);
    CHECK(s[3] == doctest::Approx(9 + std::sqrt(7.0)));
    ic_l4_validity v{};
    REQUIRE(ic_l4_validity_check(2, 0.1, &v) == IC_OK);
    CHECK(v.discrepancy == 1);
    ic_matrix* m = nullptr;
    CHECK(ic_parametric_l4(-1, 2, &m) == IC_ERR_NON_POSITIVE_PARAMETER);
  }
}
