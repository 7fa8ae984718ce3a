#include <cmath>
#include <random>

#include "doctest.h"
#include "isoconn/error.hpp"
#include "isoconn/spectral.hpp"
#include "isoconn/topology.hpp"
#include "support/oracles.hpp"

using namespace isoconn;

namespace {

AgentConfiguration pair_at(double d, double sigma, double range) {
  return AgentConfiguration({{"a", {0, 0}}, {"b", {d, 0}}}, sigma, range);
}

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

TEST_SUITE("topology") {
  TEST_CASE("weight model") {
    CHECK(adjacency_weight(0.0, 1.3, 2.0) == 1.0);
    CHECK(adjacency_weight(2.0, 1.3, 2.0) == doctest::Approx(std::exp(-1.3)));
    CHECK(adjacency_weight(3.0, 1.3, 2.0) == 0.0);
    CHECK(adjacency_weight(std::nextafter(2.0, 3.0), 1.3, 2.0) == 0.0);
    CHECK(adjacency_weight(1.0, 2.0, 4.0) == doctest::Approx(std::exp(-0.5)));
    // slope is d/dd of the weight inside the range
    const double h = 1e-6;
    const double fd = (adjacency_weight(1.0 + h, 2.0, 4.0) - adjacency_weight(1.0 - h, 2.0, 4.0)) / (2 * h);
    CHECK(adjacency_weight_slope(1.0, 2.0, 4.0) == doctest::Approx(fd).epsilon(1e-6));
    CHECK(adjacency_weight_slope(5.0, 2.0, 4.0) == 0.0);
  }

  TEST_CASE("configuration validation") {
    CHECK(code_of([] { AgentConfiguration({{"a", {0, 0}}}, 1, 1); }) == ErrorCode::InvalidConfiguration);
    CHECK(code_of([] { pair_at(1, 0, 1); }) == ErrorCode::InvalidConfiguration);
    CHECK(code_of([] { pair_at(1, 1, -1); }) == ErrorCode::InvalidConfiguration);
    CHECK(code_of([] { AgentConfiguration({{"a", {0, 0}}, {"a", {1, 0}}}, 1, 1); }) == ErrorCode::InvalidConfiguration);
    CHECK(code_of([] { AgentConfiguration({{"a", {0, 0}}, {"b", {NAN, 0}}}, 1, 1); }) == ErrorCode::InvalidConfiguration);
    CHECK(code_of([] { pair_at(0, 1, 1); }) == ErrorCode::CoincidentAgents);
    const auto c = pair_at(1, 1, 2);
    CHECK(c.index_of("b") == 1);
    CHECK(code_of([&] { c.index_of("zz"); }) == ErrorCode::IndexOutOfRange);
    CHECK(c.with_position(1, {0, 3}).position(1) == Position{0, 3});
    CHECK(code_of([&] { c.with_position(1, {0, 0}); }) == ErrorCode::CoincidentAgents);
  }

  TEST_CASE("two agents at the range and beyond") {
    const double e = std::exp(-1.0);
    const Matrix l = build_laplacian(pair_at(2.0, 1.0, 2.0));
    CHECK(l.approx_equal(Matrix::from_rows({{e, -e}, {-e, e}}), 1e-15));
    CHECK(build_laplacian(pair_at(4.0, 1.0, 2.0)) == Matrix(2));
    CHECK(is_connected(pair_at(1.9, 1.0, 2.0)));
    CHECK_FALSE(is_connected(pair_at(2.1, 1.0, 2.0)));
  }

  TEST_CASE("near-unit weights reproduce the integer four-agent pattern") {
    // edges 12, 13, 14, 23, 34; agents 2 and 4 are out of range of each other
    const AgentConfiguration c({{"1", {0, 0}}, {"2", {-1, 0.5}}, {"3", {0, 1}}, {"4", {1, 0.5}}}, 1e-7, 1.5);
    CHECK(build_laplacian(c).approx_equal(oracle::l1(), 1e-6));
    CHECK(validate_laplacian(build_laplacian(c), 1e-12).passes());
  }

  TEST_CASE("laplacian matches the formula and is structurally valid") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 40; ++t) {
      const auto c = oracle::random_configuration(rng, 2 + t % 7, 3.0, 1.5, 2.0);
      const Matrix l = build_laplacian(c);
      CHECK(l.approx_equal(oracle::laplacian_from_formula(c), 1e-14));
      const auto v = validate_laplacian(l, 1e-12);
      CHECK(v.symmetric);
      CHECK(v.zero_row_sums);
      CHECK(v.nonpositive_offdiag);
      CHECK(v.psd);
      CHECK(build_adjacency(c)(0, 0) == 0.0);
    }
  }

  TEST_CASE("graph search agrees with the spectral test") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      const auto c = oracle::random_configuration(rng, 2 + t % 6, 4.0, 1.0, 1.5);
      const double lambda2 = algebraic_connectivity(build_laplacian(c)).lambda2;
      CHECK(is_connected(c) == (lambda2 > 1e-9));
    }
  }

  TEST_CASE("complete graph in a small box") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) CHECK(is_connected(oracle::random_configuration(rng, 5, 0.5, 1.0, 1.0)));
  }

  TEST_CASE("validation flags") {
    const auto v = validate_laplacian(oracle::l1(), 1e-12);
    CHECK(v.passes());
    CHECK(v.connected);
    CHECK(v.lambda2 == doctest::Approx(2.0));

    const Matrix split = Matrix::from_rows({{1, -1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 2, -2}, {0, 0, -2, 2}});
    const auto vs = validate_laplacian(split, 1e-12);
    CHECK(vs.passes());
    CHECK_FALSE(vs.connected);
    CHECK(std::abs(vs.lambda2) <= 1e-12);

    const auto vp = validate_laplacian(Matrix::from_rows({{-1, 1}, {1, -1}}), 1e-12);
    CHECK_FALSE(vp.nonpositive_offdiag);
    CHECK(vp.zero_row_sums);
    CHECK_FALSE(vp.psd);

    const auto va = validate_laplacian(Matrix::from_rows({{1, -1}, {-0.5, 0.5}}), 1e-12);
    CHECK_FALSE(va.symmetric);

    const auto vr = validate_laplacian(Matrix::from_rows({{2, -1}, {-1, 1}}), 1e-12);
    CHECK_FALSE(vr.zero_row_sums);
    CHECK(vr.max_row_sum == 1.0);
  }
}
