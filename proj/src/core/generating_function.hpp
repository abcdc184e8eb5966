#pragma once

#include <optional>
#include <vector>

namespace ahk {

/// One single-variable profile function from a closed family, with exact
/// derivatives up to order 3. The family covers every closed form produced by
/// the solution constructors: lines and hyperplanes, quadratics, general
/// polynomials up to degree 8, exp/trig pairs and the log-cos profile of
/// Scherk-type graphs.
///
/// Param layout per kind:
///   Linear      {c, d}          f(t) = c*t + d
///   Quadratic   {c, d, e}       f(t) = c*t^2 + d*t + e, c != 0
///   Polynomial  {p0..pm}        f(t) = sum p_k t^k, m <= 8
///   ExpPair     {c, d, a, s}    f(t) = c*e^{a t} + d*e^{-a t} + s, a > 0
///   TrigPair    {c, d, a, s}    f(t) = c*cos(a t) + d*sin(a t) + s, a > 0
///   LogCos      {c}             f(t) = log|cos(c t)| / c, c != 0
class GeneratingFunction {
 public:
  enum class Kind { Linear, Quadratic, Polynomial, ExpPair, TrigPair, LogCos };

  /// Evaluation of LogCos fails with Error(DomainSingularity) once
  /// |cos(c*t)| drops below this guard.
  static constexpr double kLogCosGuard = 1e-9;

  static GeneratingFunction linear(double c, double d);
  static GeneratingFunction quadratic(double c, double d, double e);
  static GeneratingFunction polynomial(std::vector<double> coeffs);
  static GeneratingFunction exp_pair(double c, double d, double a, double s);
  static GeneratingFunction trig_pair(double c, double d, double a, double s);
  static GeneratingFunction log_cos(double c);

  Kind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }

  /// Closed-form derivative of order 0..3 at t.
  double derivative(int order, double t) const;
  double operator()(double t) const { return derivative(0, t); }

  /// Structural predicate: true exactly for kind Linear and for Polynomial of
  /// degree <= 1.
  bool is_linear() const;

  /// Returns f'' when it is constant in t (Linear, Quadratic, Polynomial of
  /// degree <= 2), otherwise nullopt.
  std::optional<double> constant_second_derivative() const;

  /// Distance from t to the nearest evaluation singularity (zeros of
  /// cos(c*t) for LogCos); +infinity for every other kind.
  double singular_distance(double t) const;

 private:
  GeneratingFunction(Kind kind, std::vector<double> params)
      : kind_(kind), params_(std::move(params)) {}

  int poly_degree() const;  // highest index with nonzero coefficient

  Kind kind_;
  std::vector<double> params_;
};

}  // namespace ahk
