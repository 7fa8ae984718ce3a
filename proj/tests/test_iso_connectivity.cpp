#include <cmath>
#include <random>

#include "doctest.h"
#include "isoconn/error.hpp"
#include "isoconn/iso_connectivity.hpp"
#include "isoconn/mobility.hpp"
#include "isoconn/spectral.hpp"
#include "support/oracles.hpp"

using namespace isoconn;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an isoconn::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("iso_connectivity") {
  TEST_CASE("parametric matrix") {
    CHECK(parametric_l4({2, 3}) == oracle::l4_prime());
    CHECK(parametric_l4({3, 4}) == oracle::l4_double_prime());
    const Matrix tiny = parametric_l4({1e-12, 1e-12});
    const Matrix limit = Matrix::from_rows({{2, -1, -1, 0}, {-1, 2, -1, 0}, {-1, -1, 3, -1}, {0, 0, -1, 1}});
    CHECK(tiny.approx_equal(limit, 1e-11));
    CHECK(validate_laplacian(parametric_l4({0.3, 4.2}), 1e-12).passes());
    CHECK(code_of([] { parametric_l4({0, 1}); }) == ErrorCode::NonPositiveParameter);
    CHECK(code_of([] { parametric_l4({1, -2}); }) == ErrorCode::NonPositiveParameter);
    CHECK(code_of([] { parametric_l4({NAN, 1}); }) == ErrorCode::NonPositiveParameter);
  }

  TEST_CASE("closed-form spectrum") {
    const auto s23 = l4_closed_form_spectrum({2, 3});
    CHECK(s23[2] == doctest::Approx(7 - std::sqrt(3.0)).epsilon(1e-15));
    CHECK(s23[3] == doctest::Approx(7 + std::sqrt(3.0)).epsilon(1e-15));
    const auto s34 = l4_closed_form_spectrum({3, 4});
    CHECK(s34[2] == doctest::Approx(9 - std::sqrt(7.0)).epsilon(1e-15));
    CHECK(s34[3] == doctest::Approx(9 + std::sqrt(7.0)).epsilon(1e-15));
    const auto s22 = l4_closed_form_spectrum({2, 2});
    // 2 + a + b = 6 and D = 1 here, so the outer pair is 5 and 7
    const std::vector<double> expected22{0, 4, 5, 7};
    const auto numeric22 = symmetric_eigendecomposition(parametric_l4({2, 2})).eigenvalues;
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(std::abs(s22[i] - expected22[i]) <= 1e-12);
      CHECK(std::abs(numeric22[i] - expected22[i]) <= 1e-12);
    }
    CHECK(l4_discriminant({0.1, 0.1}) == doctest::Approx(0.81));
  }

  TEST_CASE("closed form agrees with the eigensolver and the polynomial") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.01, 6.0);
    for (int t = 0; t < 200; ++t) {
      const ParametricL4 p{u(rng), u(rng)};
      const auto closed = l4_closed_form_spectrum(p);
      const auto numeric = symmetric_eigendecomposition(parametric_l4(p)).eigenvalues;
      for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(closed[i] - numeric[i]) <= 1e-9);
      // lambda (lambda - 4) (lambda^2 - (4 + 2a + 2b) lambda + 3 + 5a + 5b + 3ab)
      const double a = p.alpha, b = p.beta;
      const oracle::Poly quad{3 + 5 * a + 5 * b + 3 * a * b, -(4 + 2 * a + 2 * b), 1};
      const oracle::Poly factored = oracle::poly_mul(oracle::Poly{0, -4, 1}, quad);
      const oracle::Poly leibniz = oracle::characteristic_polynomial(parametric_l4(p));
      for (std::size_t k = 0; k < 5; ++k) CHECK(leibniz[k] == doctest::Approx(factored[k]).epsilon(1e-12).scale(100));
      CHECK(l4_discriminant(p) >= 0.0);
    }
  }

  TEST_CASE("validity check") {
    for (ParametricL4 p : {ParametricL4{2, 3}, ParametricL4{3, 4}}) {
      const auto v = l4_validity(p);
      CHECK(v.upper_root_condition);
      CHECK(v.numeric_lambda2_is_4);
      CHECK_FALSE(v.discrepancy);
    }
    const auto small = l4_validity({0.1, 0.1});
    CHECK_FALSE(small.upper_root_condition);
    CHECK_FALSE(small.numeric_lambda2_is_4);
    CHECK(2.2 + std::sqrt(0.81) < 4.0);

    // the upper-root condition can pass while lambda2 < 4
    const auto off = l4_validity({2, 0.1});
    CHECK(off.upper_root_condition);
    CHECK_FALSE(off.numeric_lambda2_is_4);
    CHECK(off.discrepancy);
    CHECK(off.lambda2 == doctest::Approx(off.lower_root));
    CHECK(off.lambda2 < 4.0);
  }

  TEST_CASE("lower root decides whether lambda2 stays at 4") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(0.05, 5.0);
    for (int t = 0; t < 300; ++t) {
      const ParametricL4 p{u(rng), u(rng)};
      const auto v = l4_validity(p);
      if (std::abs(v.lower_root - 4.0) < 1e-6) continue;
      CHECK(v.numeric_lambda2_is_4 == (v.lower_root > 4.0));
    }
  }

  TEST_CASE("zone scan accepts the original and mirror cells") {
    const AgentConfiguration c({{"n1", {0, 0}}, {"n2", {4, 0}}, {"m", {1, 2}}, {"far", {20, 20}}}, 1.0, 5.0);
    const Grid g{-3.5, 4.5, -3.5, 3.5, 8, 7};
    CHECK(g.cell_center(4, 5) == Position{1, 2});
    const auto z = iso_connectivity_zone(c, 2, g, 1e-9);
    const auto has = [&](Position p) {
      return std::any_of(z.accepted.begin(), z.accepted.end(), [&](const ZonePoint& q) { return q.position == p; });
    };
    CHECK(has({1, 2}));
    CHECK(has({1, -2}));
    CHECK(z.accepted.size() + z.rejected_count == 56);
    for (const auto& pt : z.accepted) {
      const double l2 = algebraic_connectivity(build_laplacian(c.with_position(2, pt.position))).lambda2;
      CHECK(std::abs(l2 - z.target_lambda2) <= 1e-9);
    }
    for (std::size_t i = 1; i < z.accepted.size(); ++i) {
      const Position a = z.accepted[i - 1].position, b = z.accepted[i].position;
      CHECK((a.y < b.y || (a.y == b.y && a.x < b.x)));
    }
  }

  TEST_CASE("isolated mobile agent: every cell is accepted at lambda2 = 0") {
    const AgentConfiguration c({{"a", {0, 0}}, {"b", {0.5, 0}}, {"m", {10, 10}}}, 1.0, 1.0);
    const auto z = iso_connectivity_zone(c, 2, {8, 12, 8, 12, 5, 5}, 1e-9);
    CHECK(z.target_lambda2 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(z.accepted.size() == 25);
    CHECK(z.rejected_count == 0);
  }

  TEST_CASE("explicit target and coincident cells") {
    const AgentConfiguration c({{"a", {0, 0}}, {"b", {1, 0}}, {"m", {0.5, 0.5}}}, 1.0, 2.0);
    const auto z = iso_connectivity_zone(c, 2, {-0.5, 1.5, -0.5, 0.5, 2, 1}, 1e-9, 123.0);
    CHECK(z.accepted.empty());
    CHECK(z.rejected_count == 2);  // both centres sit on agents a and b
    CHECK(z.target_lambda2 == 123.0);
  }

  TEST_CASE("empty grids") {
    const AgentConfiguration c({{"a", {0, 0}}, {"b", {1, 0}}}, 1.0, 2.0);
    CHECK(code_of([&] { iso_connectivity_zone(c, 1, {0, 1, 0, 1, 0, 3}, 1e-9); }) == ErrorCode::EmptyGrid);
    CHECK(code_of([&] { iso_connectivity_zone(c, 1, {1, 1, 0, 1, 3, 3}, 1e-9); }) == ErrorCode::EmptyGrid);
    CHECK(code_of([&] { iso_connectivity_zone(c, 5, {0, 1, 0, 1, 3, 3}, 1e-9); }) == ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("closed form over the 50 x 50 grid") {
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i)
      for (int k = 1; k <= 50; ++k) {
        const ParametricL4 p{0.1 * i, 0.1 * k};
        const auto closed = l4_closed_form_spectrum(p);
        const auto numeric = symmetric_eigendecomposition(parametric_l4(p)).eigenvalues;
        for (std::size_t j = 0; j < 4; ++j) worst = std::max(worst, std::abs(closed[j] - numeric[j]));
      }
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("eigenvectors for 0 and 4 do not depend on the parameters") {
    const std::vector<double> ones{0.5, 0.5, 0.5, 0.5};
    const double r = std::sqrt(12.0);
    const std::vector<double> four{1 / r, 1 / r, -3 / r, 1 / r};
    for (int i = 1; i <= 50; i += 7)
      for (int k = 1; k <= 50; k += 7) {
        const Matrix l = parametric_l4({0.1 * i, 0.1 * k});
        const auto l1v = l * std::span<const double>(ones);
        const auto l4v = l * std::span<const double>(four);
        for (std::size_t j = 0; j < 4; ++j) {
          CHECK(std::abs(l1v[j]) <= 1e-9);
          CHECK(std::abs(l4v[j] - 4 * four[j]) <= 1e-9);
        }
      }
  }
}
