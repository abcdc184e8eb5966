#include <doctest.h>

#include <cmath>

#include "core/calculus.hpp"
#include "core/constructors.hpp"
#include "core/errors.hpp"
#include "core/euclidean.hpp"
#include "core/isotropic.hpp"
#include "helpers.hpp"

using namespace ahk;
using test::close;

namespace {

std::vector<double> zeros(int n) { return std::vector<double>(n, 0.0); }

}  // namespace

TEST_CASE("construct_crc solves for the last coefficient") {
  const AffineMap id = AffineMap::identity(2);
  auto spec = construct_crc(id, 4.0, {1.0}, zeros(2), zeros(2));
  CHECK(spec.profiles()[1].params()[0] == 1.0);
  CHECK(relative_curvature(spec, std::vector<double>{0.7, -0.2}) == 4.0);

  spec = construct_crc(id, 4.0, {2.0}, zeros(2), zeros(2));
  CHECK(spec.profiles()[1].params()[0] == 0.5);

  const AffineMap stretch = make_affine_map({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  spec = construct_crc(stretch, 32.0, {1.0, 1.0}, zeros(3), zeros(3));
  CHECK(spec.profiles()[2].params()[0] == 1.0);
}

TEST_CASE("construct_crc guards its preconditions") {
  const AffineMap id = AffineMap::identity(2);
  CHECK_THROWS_AS(construct_crc(id, 0.0, {1.0}, zeros(2), zeros(2)), Error);
  try {
    construct_crc(id, 0.0, {1.0}, zeros(2), zeros(2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroTargetCurvature);
  }
  CHECK_THROWS_AS(construct_crc(id, 1.0, {0.0}, zeros(2), zeros(2)), Error);
  CHECK_THROWS_AS(construct_crc(id, 1.0, {1.0, 1.0}, zeros(2), zeros(2)), Error);
}

TEST_CASE("construct_crc round trip over random data") {
  Rng rng(11);
  for (double k0 : {4.0, -4.0, 0.5, -0.5}) {
    for (int rep = 0; rep < 5; ++rep) {
      const int n = 2 + rep % 3;
      const AffineMap map = random_affine_map(rng, n);
      std::vector<double> c(n - 1), d(n), e(n);
      for (auto& v : c) v = rng.signed_magnitude(0.3, 1.5);
      for (auto& v : d) v = rng.uniform(-1, 1);
      for (auto& v : e) v = rng.uniform(-1, 1);
      const auto spec = construct_crc(map, k0, c, d, e);

      const auto report =
          check_constant(spec, Quantity::RelativeCurvature, GridSpec::uniform(n, -1, 1, 9));
      CHECK(report.is_constant);
      CHECK(close(report.mean, k0, 1e-9));
      CHECK(report.verdict == Verdict::ConfirmsTheorem);

      double prod = 1.0;
      for (const auto& f : spec.profiles()) prod *= f.params()[0];
      const double det = map.det();
      CHECK(std::abs(prod - k0 / (std::ldexp(1.0, n) * det * det)) <=
            1e-12 * (1.0 + std::abs(prod)));

      // Reinterpreted in the Euclidean ambient the same graph has
      // non-constant Gauss-Kronecker curvature.
      const auto gk_report = check_constant_gk(spec.with_ambient(Ambient::Euclidean),
                                               GridSpec::uniform(n, -1, 1, 9));
      CHECK_FALSE(gk_report.is_constant);
    }
  }
}

TEST_CASE("construct_cimc examples") {
  const AffineMap id = AffineMap::identity(2);
  auto spec = construct_cimc(id, 2.0, {2.0, 2.0}, zeros(2), zeros(2));
  CHECK(isotropic_mean(spec, std::vector<double>{0.3, 0.4}) == 2.0);
  CHECK(spec.profiles()[0].params()[0] == 1.0);

  const AffineMap shear = make_affine_map({{1, 0}, {1, 1}});
  spec = construct_cimc(shear, 0.0, {1.0, -1.0}, zeros(2), zeros(2));
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> x{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    CHECK(std::abs(isotropic_mean(spec, x)) <= 1e-15);
  }

  spec = construct_cimc(id, 0.0, {0.0, 0.0}, {1.0, 2.0}, {3.0, 4.0});
  CHECK(spec.profiles()[0].is_linear());
  CHECK(spec.profiles()[1].is_linear());

  CHECK_THROWS_AS(construct_cimc(id, 1.0, {1.0, 2.0}, zeros(2), zeros(2)), Error);
}

TEST_CASE("construct_cimc round trip including the minimal case") {
  Rng rng(12);
  for (double h0 : {0.0, 1.0, -3.0}) {
    for (int rep = 0; rep < 5; ++rep) {
      const int n = 2 + rep % 3;
      const AffineMap map = random_affine_map(rng, n);
      std::vector<double> c(n), d(n), e(n);
      double sum = 0.0;
      for (int i = 0; i + 1 < n; ++i) {
        c[i] = rng.uniform(-1.0, 1.0);
        sum += c[i];
      }
      c[n - 1] = n * h0 - sum;
      for (auto& v : d) v = rng.uniform(-1, 1);
      for (auto& v : e) v = rng.uniform(-1, 1);
      const auto spec = construct_cimc(map, h0, c, d, e);

      const auto report =
          check_constant(spec, Quantity::IsotropicMean, GridSpec::uniform(n, -1, 1, 9));
      CHECK(report.is_constant);
      CHECK(std::abs(report.mean - h0) <= 1e-10 * (1.0 + std::abs(h0)));
      CHECK(report.verdict == Verdict::ConfirmsTheorem);
    }
  }
}

TEST_CASE("construct_eigen: positive branch builds exponentials") {
  const AffineMap id = AffineMap::identity(2);
  EigenSolutionParams p;
  p.lambda = 1.0;
  p.c = {1.0, 1.0};
  p.d = {0.0, 0.0};
  p.mu = {0.0, 0.0};
  const auto spec = construct_eigen(id, p);
  CHECK(spec.profiles()[0].kind() == GeneratingFunction::Kind::ExpPair);

  // z = e^{x1} + e^{x2} satisfies lap z = z.
  const std::vector<double> x{0.3, -0.8};
  const double z = eval_height(spec, x);
  CHECK(close(z, std::exp(0.3) + std::exp(-0.8), 1e-14));
  const double lap = fd_laplacian(spec, x);
  CHECK(close(lap, z, 1e-7));
}

TEST_CASE("construct_eigen: negative branch builds trig pairs") {
  const AffineMap id = AffineMap::identity(2);
  EigenSolutionParams p;
  p.lambda = -1.0;
  p.c = {1.0, 0.0};
  p.d = {0.0, 1.0};
  p.mu = {0.0, 0.0};
  const auto spec = construct_eigen(id, p);
  CHECK(spec.profiles()[0].kind() == GeneratingFunction::Kind::TrigPair);
  const std::vector<double> x{0.4, 1.1};
  const double z = eval_height(spec, x);
  CHECK(close(z, std::cos(0.4) + std::sin(1.1), 1e-14));
  CHECK(close(fd_laplacian(spec, x), -z, 1e-7));
}

TEST_CASE("construct_eigen: zero amplitudes degenerate to canceling constants") {
  const AffineMap id = AffineMap::identity(2);
  EigenSolutionParams p;
  p.lambda = 1.0;
  p.c = {0.0, 0.0};
  p.d = {0.0, 0.0};
  p.mu = {1.0, -1.0};
  const auto spec = construct_eigen(id, p);
  CHECK(spec.profiles()[0].is_linear());
  CHECK(eval_height(spec, std::vector<double>{0.5, 0.5}) == 0.0);
}

TEST_CASE("construct_eigen validates its parameters") {
  const AffineMap id = AffineMap::identity(2);
  EigenSolutionParams p;
  p.lambda = 0.0;
  p.c = {1.0, 1.0};
  p.d = {0.0, 0.0};
  p.mu = {0.0, 0.0};
  CHECK_THROWS_AS(construct_eigen(id, p), Error);
  p.lambda = 1.0;
  p.mu = {1.0, 0.0};
  CHECK_THROWS_AS(construct_eigen(id, p), Error);
}

TEST_CASE("construct_cylinder flattens both curvatures") {
  const AffineMap map = make_affine_map({{1, 0}, {1, 1}});
  const auto spec = construct_cylinder(map, 0, 1.5, -0.5, {test::quad()});
  CHECK(spec.profiles()[0].is_linear());
  const auto gk = gauss_kronecker(spec, std::vector<double>{0.4, 0.4});
  CHECK(gk.k == 0.0);
  const auto iso = spec.with_ambient(Ambient::Isotropic);
  CHECK(relative_curvature(iso, std::vector<double>{0.4, 0.4}) == 0.0);

  const auto plane = construct_cylinder(AffineMap::identity(2), 1, 1, 0, {test::lin(2, 0)});
  CHECK(gauss_kronecker(plane, std::vector<double>{0, 0}).k == 0.0);
  CHECK(isotropic_mean(plane.with_ambient(Ambient::Isotropic), std::vector<double>{0, 0}) == 0.0);

  const auto scherk_like = construct_cylinder(AffineMap::identity(2), 0, 1, 0,
                                              {GeneratingFunction::log_cos(1.0)});
  CHECK(gauss_kronecker(scherk_like, std::vector<double>{0.3, 0.3}).k == 0.0);

  CHECK_THROWS_AS(construct_cylinder(map, 5, 1, 0, {test::quad()}), Error);
}

TEST_CASE("verify_eigen_condition separates matching and mismatched eigenvalues") {
  Rng rng(13);
  const AffineMap map = random_affine_map(rng, 2);
  EigenSolutionParams p;
  p.lambda = -2.0;
  p.c = {0.7, -0.4};
  p.d = {0.2, 0.9};
  p.mu = {0.3, -0.3};
  const auto spec = construct_eigen(map, p);

  const GridSpec grid = GridSpec::uniform(2, -1, 1, 11);
  const auto match = verify_eigen_condition(spec, -2.0, grid);
  CHECK(match.max <= 1e-10);
  CHECK(match.verdict == Verdict::ConfirmsTheorem);

  const auto mismatch = verify_eigen_condition(spec, -1.5, grid);
  CHECK(mismatch.max > 1e-3);
  CHECK(mismatch.verdict == Verdict::NotApplicable);

  const auto plane = test::identity_spec({test::lin(1, 0), test::lin(0, 0)}, Ambient::Isotropic);
  const auto harmonic = verify_eigen_condition(plane, 0.0, grid);
  CHECK(harmonic.max == 0.0);
}

TEST_CASE("eigen profiles satisfy their one-dimensional equation pointwise") {
  Rng rng(14);
  for (double lambda : {2.0, -2.0}) {
    const int n = 3;
    const AffineMap map = random_affine_map(rng, n);
    EigenSolutionParams p;
    p.lambda = lambda;
    p.c.resize(n);
    p.d.resize(n);
    p.mu.resize(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      p.c[i] = rng.signed_magnitude(0.2, 1.0);
      p.d[i] = rng.signed_magnitude(0.2, 1.0);
      if (i + 1 < n) {
        p.mu[i] = rng.uniform(-1, 1);
        sum += p.mu[i];
      }
    }
    p.mu[n - 1] = -sum;
    const auto spec = construct_eigen(map, p);

    for (int i = 0; i < n; ++i) {
      const double row = map.row_norm_sq(i);
      const double reach = std::sqrt(row) * std::sqrt(static_cast<double>(n));
      for (int t = 0; t < 50; ++t) {
        const double y = rng.uniform(-reach, reach);
        const auto& f = spec.profiles()[i];
        const double residual = row * f.derivative(2, y) - lambda * f(y) - p.mu[i];
        CHECK(std::abs(residual) <= 1e-10);
      }
    }
  }
}
