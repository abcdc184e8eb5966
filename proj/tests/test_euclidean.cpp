#include <doctest.h>

#include <cmath>

#include "core/calculus.hpp"
#include "core/errors.hpp"
#include "core/euclidean.hpp"
#include "helpers.hpp"

using namespace ahk;
using test::close;

TEST_CASE("gauss_kronecker: unit paraboloid examples") {
  const auto spec = test::identity_spec({test::quad(0.5), test::quad(0.5)});
  const auto at_origin = gauss_kronecker(spec, std::vector<double>{0.0, 0.0});
  CHECK(at_origin.k == 1.0);
  CHECK(at_origin.w == 1.0);
  CHECK(at_origin.det_hess == 1.0);

  const auto off_axis = gauss_kronecker(spec, std::vector<double>{1.0, 0.0});
  CHECK(off_axis.w == 2.0);
  CHECK(off_axis.k == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("gauss_kronecker: a linear profile flattens the product exactly") {
  const auto spec =
      test::spec_with_map({{1, 0}, {1, 1}}, {test::lin(2, 1), test::quad(1, -1, 0)});
  Rng rng(3);
  for (int t = 0; t < 25; ++t) {
    std::vector<double> x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const auto gk = gauss_kronecker(spec, x);
    CHECK(gk.k == 0.0);
    CHECK(std::abs(gk.k) <= 1e-14);
  }
}

TEST_CASE("gauss_kronecker requires the Euclidean ambient") {
  const auto iso = test::identity_spec({test::quad(), test::quad()}, Ambient::Isotropic);
  CHECK_THROWS_AS(gauss_kronecker(iso, std::vector<double>{0, 0}), Error);
  try {
    gauss_kronecker(iso, std::vector<double>{0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbientMismatch);
  }
}

TEST_CASE("gauss_kronecker invariants on random specs") {
  Rng rng(404);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const auto spec = random_spec(rng, n, Ambient::Euclidean, {});
    const auto x = random_domain_point(rng, spec, 0.12);
    const auto gk = gauss_kronecker(spec, x);
    CHECK(gk.w >= 1.0);

    // k * w^{(n+2)/2} recovers det(A)^2 * prod f_i''.
    const double det = spec.map().det();
    const double lhs = gk.k * std::pow(gk.w, 0.5 * (n + 2));
    CHECK(close(lhs, det * det * gk.det_hess, 1e-9));

    // Same sign as the diagonal product, since w > 0.
    if (gk.det_hess != 0.0) CHECK(std::signbit(gk.k) == std::signbit(gk.det_hess));

    // Generic route, recomputed here from first principles.
    const auto hp = hessian_at(spec, x);
    double grad_sq = 0.0;
    for (double g : hp.grad_x) grad_sq += g * g;
    const double generic =
        lu_determinant(hp.hess_x) / std::pow(1.0 + grad_sq, 0.5 * (n + 2));
    CHECK(close(gk.k, generic, 1e-10));
  }
}

TEST_CASE("detect_cylinder picks the smallest linear index with its ruling") {
  const auto mixed = test::spec_with_map({{1, 0}, {1, 1}}, {test::lin(3, 1), test::quad()});
  const auto hit = detect_cylinder(mixed);
  REQUIRE(hit.has_value());
  CHECK(hit->index == 0);
  // Column 0 of the inverse of [[1,0],[1,1]] is (1,-1); the slope rides last.
  REQUIRE(hit->ruling.size() == 3);
  CHECK(hit->ruling[0] == doctest::Approx(1.0));
  CHECK(hit->ruling[1] == doctest::Approx(-1.0));
  CHECK(hit->ruling[2] == 3.0);

  CHECK_FALSE(detect_cylinder(test::identity_spec({test::quad(), test::quad()})).has_value());

  const auto both = test::identity_spec({test::lin(1, 0), test::lin(2, 0)});
  REQUIRE(detect_cylinder(both).has_value());
  CHECK(detect_cylinder(both)->index == 0);
}

TEST_CASE("check_constant_gk: cylinder specs are constant zero") {
  const auto cyl = test::spec_with_map({{1, 0}, {1, 1}}, {test::lin(1, 0), test::quad()});
  const auto report = check_constant_gk(cyl, GridSpec::uniform(2, -1, 1, 21));
  CHECK(report.is_constant);
  CHECK(std::abs(report.mean) <= 1e-14);
  CHECK(report.verdict == Verdict::ConfirmsTheorem);
  CHECK(report.samples == 441);
}

TEST_CASE("check_constant_gk: curved non-cylinders are not constant") {
  const auto spec = test::spec_with_map({{1, 0}, {1, 1}}, {test::quad(), test::quad()});
  const auto report = check_constant_gk(spec, GridSpec::uniform(2, -1, 1, 21));
  CHECK_FALSE(report.is_constant);
  CHECK(report.min < report.max);
  CHECK(report.verdict == Verdict::NotApplicable);
}

TEST_CASE("check_constant_gk: hyperplanes are constant zero exactly") {
  const auto plane = test::identity_spec({test::lin(1, 2), test::lin(-1, 0)});
  const auto report = check_constant_gk(plane, GridSpec::uniform(2, -1, 1, 11));
  CHECK(report.is_constant);
  CHECK(report.mean == 0.0);
  CHECK(report.verdict == Verdict::ConfirmsTheorem);
}

TEST_CASE("no all-non-linear spec scans as constant (falsification sweep)") {
  Rng rng(777);
  for (int t = 0; t < 30; ++t) {
    const int n = rng.uniform_int(2, 3);
    const auto spec = random_spec(rng, n, Ambient::Euclidean, {});
    const auto report =
        check_constant_gk(spec, GridSpec::uniform(n, -1, 1, 21, 1e-6));
    CHECK_FALSE(report.is_constant);
    CHECK(report.verdict == Verdict::NotApplicable);
  }
}
