#include <doctest.h>

#include <cmath>

#include "core/calculus.hpp"
#include "core/errors.hpp"
#include "core/verification.hpp"
#include "helpers.hpp"

using namespace ahk;
using test::close;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("make_affine_map: identity") {
  const AffineMap map = make_affine_map({{1, 0}, {0, 1}});
  CHECK(map.det() == 1.0);
  CHECK(map.is_orthogonal());
}

TEST_CASE("make_affine_map: shear is regular but not orthogonal") {
  const AffineMap map = make_affine_map({{1, 0}, {1, 1}});
  CHECK(map.det() == 1.0);
  CHECK_FALSE(map.is_orthogonal());
}

TEST_CASE("make_affine_map: rank-1 matrix is rejected") {
  CHECK_THROWS_WITH_AS(make_affine_map({{1, 2}, {2, 4}}), doctest::Contains("determinant"),
                       Error);
  try {
    make_affine_map({{1, 2}, {2, 4}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("make_affine_map: dimension bounds") {
  CHECK_THROWS_AS(make_affine_map({{1.0}}), Error);
  std::vector<std::vector<double>> big(9, std::vector<double>(9, 0.0));
  for (int i = 0; i < 9; ++i) big[i][i] = 1.0;
  CHECK_THROWS_AS(make_affine_map(big), Error);
}

TEST_CASE("pullback_coords examples") {
  const AffineMap id = AffineMap::identity(2);
  const std::vector<double> x{3, 5};
  CHECK(pullback_coords(id, x) == std::vector<double>{3, 5});

  const AffineMap shear = make_affine_map({{1, 0}, {1, 1}});
  CHECK(pullback_coords(shear, std::vector<double>{2, 3}) == std::vector<double>{2, 5});

  const AffineMap swap = make_affine_map({{0, 1}, {1, 0}});
  CHECK(pullback_coords(swap, std::vector<double>{7, -4}) == std::vector<double>{-4, 7});

  CHECK_THROWS_AS(pullback_coords(id, std::vector<double>{1, 2, 3}), Error);
}

TEST_CASE("pullback round trip on random maps") {
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.uniform_int(2, 5);
    const AffineMap map = random_affine_map(rng, n);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(-3.0, 3.0);
    const std::vector<double> back = map.push_forward(map.pullback(x));
    for (int i = 0; i < n; ++i) CHECK(std::abs(back[i] - x[i]) <= 1e-10);
  }
}

TEST_CASE("eval_height examples") {
  const auto spec = test::identity_spec({test::quad(), test::quad()});
  CHECK(eval_height(spec, std::vector<double>{1, 2}) == 5.0);

  const auto flat = test::identity_spec({test::lin(), test::lin()});
  CHECK(eval_height(flat, std::vector<double>{0.3, -0.7}) == 0.0);

  const auto scherk_half =
      test::identity_spec({GeneratingFunction::log_cos(1.0), test::lin()});
  CHECK_THROWS_AS(eval_height(scherk_half, std::vector<double>{kPi / 2.0, 0.0}), Error);
}

TEST_CASE("orthogonal and non-orthogonal maps share the evaluation path bitwise") {
  const auto profiles = {test::quad(2, 1, 0), test::quad(-1, 0, 3)};
  const auto rot = test::spec_with_map({{0, 1}, {-1, 0}}, profiles);
  CHECK(rot.map().is_orthogonal());
  const std::vector<double> x{0.37, -1.21};
  const std::vector<double> y = rot.map().pullback(x);
  double direct = 0.0;
  for (int i = 0; i < 2; ++i) direct += rot.profiles()[i](y[i]);
  CHECK(eval_height(rot, x) == direct);  // bitwise equal, same code path

  const auto shear = test::spec_with_map({{1, 0}, {1, 1}}, profiles);
  CHECK_FALSE(shear.map().is_orthogonal());
  const std::vector<double> ys = shear.map().pullback(x);
  direct = 0.0;
  for (int i = 0; i < 2; ++i) direct += shear.profiles()[i](ys[i]);
  CHECK(eval_height(shear, x) == direct);
}

TEST_CASE("EvalPoint rejects non-finite coordinates") {
  CHECK_THROWS_AS(EvalPoint({1.0, std::nan("")}), Error);
  CHECK_THROWS_AS(EvalPoint({std::numeric_limits<double>::infinity()}), Error);
  const EvalPoint p({1.0, 2.0});
  CHECK(p.dim() == 2);
}

TEST_CASE("profile constructors enforce the family constraints") {
  CHECK_THROWS_AS(GeneratingFunction::quadratic(0.0, 1.0, 2.0), Error);
  CHECK_THROWS_AS(GeneratingFunction::exp_pair(0.0, 0.0, 1.0, 0.0), Error);
  CHECK_THROWS_AS(GeneratingFunction::trig_pair(0.0, 0.0, 2.0, 1.0), Error);
  CHECK_THROWS_AS(GeneratingFunction::exp_pair(1.0, 0.0, -1.0, 0.0), Error);
  CHECK_THROWS_AS(GeneratingFunction::log_cos(0.0), Error);
  CHECK_THROWS_AS(GeneratingFunction::polynomial({}), Error);
  CHECK_THROWS_AS(GeneratingFunction::polynomial({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), Error);
}

TEST_CASE("is_linear is decided structurally") {
  CHECK(GeneratingFunction::linear(3, 4).is_linear());
  CHECK(GeneratingFunction::polynomial({1.0, 2.0}).is_linear());
  CHECK(GeneratingFunction::polynomial({5.0}).is_linear());
  CHECK(GeneratingFunction::polynomial({1.0, 2.0, 0.0}).is_linear());  // trailing zero
  CHECK_FALSE(GeneratingFunction::polynomial({0.0, 0.0, 1.0}).is_linear());
  CHECK_FALSE(test::quad().is_linear());
  CHECK_FALSE(GeneratingFunction::exp_pair(1, 0, 1, 0).is_linear());
  CHECK_FALSE(GeneratingFunction::log_cos(1).is_linear());
}

TEST_CASE("log_cos guards its singularities") {
  const auto f = GeneratingFunction::log_cos(2.0);
  CHECK_THROWS_AS(f(kPi / 4.0), Error);
  CHECK(close(f.singular_distance(0.0), kPi / 4.0, 1e-12));
  CHECK(f.singular_distance(kPi / 4.0) <= 1e-15);
  CHECK(std::isinf(test::quad().singular_distance(0.0)));
}

TEST_CASE("analytic derivatives agree with central differences for every kind") {
  const std::vector<GeneratingFunction> family = {
      GeneratingFunction::linear(1.7, -0.3),
      GeneratingFunction::quadratic(0.8, -1.1, 0.2),
      GeneratingFunction::polynomial({0.1, -0.4, 0.9, 0.05, -0.3}),
      GeneratingFunction::exp_pair(0.7, -0.4, 0.9, 0.6),
      GeneratingFunction::trig_pair(1.1, 0.5, 1.4, -0.2),
      GeneratingFunction::log_cos(0.9),
  };
  Rng rng(1234);
  for (const auto& f : family) {
    for (int trial = 0; trial < 50; ++trial) {
      double t = rng.uniform(-1.2, 1.2);
      while (f.singular_distance(t) < 0.15) t = rng.uniform(-1.2, 1.2);
      for (int order = 1; order <= 3; ++order) {
        const double h = 1e-6 * (1.0 + std::abs(t));
        const double fd =
            (f.derivative(order - 1, t + h) - f.derivative(order - 1, t - h)) / (2.0 * h);
        CHECK(close(f.derivative(order, t), fd, 1e-6));
      }
    }
  }
}

TEST_CASE("profile count must match the dimension") {
  CHECK_THROWS_AS(HypersurfaceSpec(Ambient::Euclidean, AffineMap::identity(3),
                                   {test::quad(), test::quad()}),
                  Error);
}
