#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "core/constructors.hpp"
#include "core/errors.hpp"
#include "core/serialization.hpp"
#include "core/verification.hpp"
#include "helpers.hpp"

using namespace ahk;

TEST_CASE("grid validation") {
  const auto spec = test::identity_spec({test::quad(), test::quad()});
  GridSpec bad = GridSpec::uniform(2, 1.0, -1.0, 5);
  CHECK_THROWS_AS(scan(spec, {Quantity::GaussKronecker}, bad), Error);
  bad = GridSpec::uniform(2, -1.0, 1.0, 1);
  CHECK_THROWS_AS(scan(spec, {Quantity::GaussKronecker}, bad), Error);
  bad = GridSpec::uniform(3, -1.0, 1.0, 5);
  CHECK_THROWS_AS(scan(spec, {Quantity::GaussKronecker}, bad), Error);
  bad = GridSpec::uniform(2, -1.0, 1.0, 4000);
  CHECK_THROWS_AS(scan(spec, {Quantity::GaussKronecker}, bad), Error);
  bad = GridSpec::uniform(2, -1.0, 1.0, 5, -0.1);
  CHECK_THROWS_AS(scan(spec, {Quantity::GaussKronecker}, bad), Error);
}

TEST_CASE("scan: cylinder spec means zero and reports every sample") {
  const auto cyl = test::spec_with_map({{1, 0}, {1, 1}}, {test::lin(1, 0), test::quad()});
  const auto report = scan(cyl, {Quantity::GaussKronecker}, GridSpec::uniform(2, -1, 1, 21));
  CHECK(report.quantity == "gk");
  CHECK(report.samples == 441);
  CHECK(report.skipped == 0);
  CHECK(report.mean == 0.0);
  CHECK(report.is_constant);
  CHECK(report.verdict == Verdict::NotApplicable);  // plain scans carry no verdict
}

TEST_CASE("scan: constructed solution reports its constant") {
  const auto spec =
      construct_crc(AffineMap::identity(2), 4.0, {1.0}, {0.0, 0.0}, {0.0, 0.0});
  const auto report =
      scan(spec, {Quantity::RelativeCurvature}, GridSpec::uniform(2, -1, 1, 11));
  CHECK(report.is_constant);
  REQUIRE(report.constant_value.has_value());
  CHECK(*report.constant_value == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("scan: exclusion radius skips points near singularities") {
  const auto scherk = test::identity_spec(
      {GeneratingFunction::log_cos(1.0), GeneratingFunction::log_cos(-1.0)});
  GridSpec grid = GridSpec::uniform(2, -1.6, 1.6, 21, 0.05);
  const auto report = scan(scherk, {Quantity::GaussKronecker}, grid);
  CHECK(report.skipped > 0);
  CHECK(report.samples + report.skipped == 441);

  grid.exclusion_radius = 10.0;  // everything excluded
  CHECK_THROWS_AS(scan(scherk, {Quantity::GaussKronecker}, grid), Error);
}

TEST_CASE("scan: ambient gating") {
  const auto euclidean = test::identity_spec({test::quad(), test::quad()});
  const auto isotropic = euclidean.with_ambient(Ambient::Isotropic);
  const GridSpec grid = GridSpec::uniform(2, -1, 1, 5);
  CHECK_THROWS_AS(scan(isotropic, {Quantity::GaussKronecker}, grid), Error);
  CHECK_THROWS_AS(scan(euclidean, {Quantity::RelativeCurvature}, grid), Error);
  CHECK_THROWS_AS(scan(euclidean, {Quantity::IsotropicMean}, grid), Error);
  CHECK_NOTHROW(scan(isotropic, {Quantity::PrincipalMax}, grid));
  QuantityRequest ki{Quantity::CurvatureFunction, 2, 0.0};
  CHECK_NOTHROW(scan(isotropic, ki, grid));
  ki.ki_index = 3;
  CHECK_THROWS_AS(scan(isotropic, ki, grid), Error);
}

TEST_CASE("scan is deterministic") {
  const auto spec = test::spec_with_map({{1, 0.5}, {-0.5, 1}}, {test::quad(0.7), test::quad(-0.3)});
  const auto a = scan(spec, {Quantity::GaussKronecker}, GridSpec::uniform(2, -1, 1, 15));
  const auto b = scan(spec, {Quantity::GaussKronecker}, GridSpec::uniform(2, -1, 1, 15));
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("theorem_verdict positive and not-applicable paths") {
  const GridSpec grid2 = GridSpec::uniform(2, -1, 1, 11);

  const auto cimc =
      construct_cimc(AffineMap::identity(2), 1.0, {1.0, 1.0}, {0.0, 0.0}, {0.0, 0.0});
  CHECK(theorem_verdict(cimc, TheoremId::ConstantIsotropicMean, 0.0, grid2).verdict ==
        Verdict::ConfirmsTheorem);

  const auto exp_spec = test::identity_spec(
      {GeneratingFunction::exp_pair(1, 0, 1, 0), test::quad()}, Ambient::Isotropic);
  CHECK(theorem_verdict(exp_spec, TheoremId::ConstantRelativeCurvature, 0.0, grid2).verdict ==
        Verdict::NotApplicable);
  CHECK(theorem_verdict(exp_spec, TheoremId::ConstantIsotropicMean, 0.0, grid2).verdict ==
        Verdict::NotApplicable);

  EigenSolutionParams p;
  p.lambda = -2.0;
  p.c = {1.0, 0.5};
  p.d = {0.0, -0.5};
  p.mu = {0.0, 0.0};
  const auto eigen = construct_eigen(AffineMap::identity(2), p);
  CHECK(theorem_verdict(eigen, TheoremId::LaplacianEigenfunction, -2.0, grid2).verdict ==
        Verdict::ConfirmsTheorem);
  CHECK(theorem_verdict(eigen, TheoremId::LaplacianEigenfunction, -1.0, grid2).verdict ==
        Verdict::NotApplicable);
  CHECK(theorem_verdict(eigen, TheoremId::LaplacianEigenfunction, 0.0, grid2).verdict ==
        Verdict::NotApplicable);
}

TEST_CASE("no verdict violation appears over a random corpus") {
  Rng rng(9000);
  const GridSpec grid = GridSpec::uniform(2, -1, 1, 9, 1e-6);
  for (int t = 0; t < 25; ++t) {
    const auto spec = random_spec(rng, 2, Ambient::Euclidean, {});
    CHECK(theorem_verdict(spec, TheoremId::CylinderFlatness, 0.0, grid).verdict !=
          Verdict::ViolatesTheorem);
    const auto iso = spec.with_ambient(Ambient::Isotropic);
    CHECK(theorem_verdict(iso, TheoremId::ConstantRelativeCurvature, 0.0, grid).verdict !=
          Verdict::ViolatesTheorem);
    CHECK(theorem_verdict(iso, TheoremId::ConstantIsotropicMean, 0.0, grid).verdict !=
          Verdict::ViolatesTheorem);
  }
}

TEST_CASE("tolerance scale is read from the environment") {
  const Tolerances base = Tolerances::current();
  CHECK(base.constancy == 1e-8);
  setenv("AHK_TOLERANCE_SCALE", "10", 1);
  const Tolerances scaled = Tolerances::current();
  CHECK(scaled.constancy == doctest::Approx(1e-7));
  CHECK(scaled.eigen_residual == doctest::Approx(1e-8));
  setenv("AHK_TOLERANCE_SCALE", "garbage", 1);
  CHECK(Tolerances::current().constancy == 1e-8);
  unsetenv("AHK_TOLERANCE_SCALE");
}

TEST_CASE("fuzz_suite: clean run, determinism, precondition") {
  const FuzzSummary summary = fuzz_suite(42, 100);
  CHECK(summary.failures == 0);
  CHECK(summary.checks > 0);
  CHECK(summary.messages.empty());

  const FuzzSummary again = fuzz_suite(42, 100);
  CHECK(fuzz_summary_to_json(summary) == fuzz_summary_to_json(again));

  const FuzzSummary other = fuzz_suite(43, 10);
  CHECK(fuzz_summary_to_json(other) != fuzz_summary_to_json(summary));

  CHECK_THROWS_AS(fuzz_suite(1, 0), Error);
}
