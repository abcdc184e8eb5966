#include "core/generating_function.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace ahk {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_finite(const std::vector<double>& params) {
  for (double v : params)
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "profile parameters must be finite");
}

}  // namespace

GeneratingFunction GeneratingFunction::linear(double c, double d) {
  GeneratingFunction f(Kind::Linear, {c, d});
  require_finite(f.params_);
  return f;
}

GeneratingFunction GeneratingFunction::quadratic(double c, double d, double e) {
  if (c == 0.0)
    fail(ErrorCode::ZeroCoefficient, "quadratic leading coefficient must be nonzero; use a linear profile");
  GeneratingFunction f(Kind::Quadratic, {c, d, e});
  require_finite(f.params_);
  return f;
}

GeneratingFunction GeneratingFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) fail(ErrorCode::InvalidArgument, "polynomial needs at least one coefficient");
  if (coeffs.size() > 9) fail(ErrorCode::InvalidArgument, "polynomial degree is capped at 8");
  GeneratingFunction f(Kind::Polynomial, std::move(coeffs));
  require_finite(f.params_);
  return f;
}

GeneratingFunction GeneratingFunction::exp_pair(double c, double d, double a, double s) {
  if (!(a > 0.0)) fail(ErrorCode::InvalidArgument, "exp_pair rate must be positive");
  if (c == 0.0 && d == 0.0)
    fail(ErrorCode::ZeroCoefficient, "exp_pair needs a nonzero coefficient; use a linear profile for constants");
  GeneratingFunction f(Kind::ExpPair, {c, d, a, s});
  require_finite(f.params_);
  return f;
}

GeneratingFunction GeneratingFunction::trig_pair(double c, double d, double a, double s) {
  if (!(a > 0.0)) fail(ErrorCode::InvalidArgument, "trig_pair frequency must be positive");
  if (c == 0.0 && d == 0.0)
    fail(ErrorCode::ZeroCoefficient, "trig_pair needs a nonzero coefficient; use a linear profile for constants");
  GeneratingFunction f(Kind::TrigPair, {c, d, a, s});
  require_finite(f.params_);
  return f;
}

GeneratingFunction GeneratingFunction::log_cos(double c) {
  if (c == 0.0) fail(ErrorCode::ZeroCoefficient, "log_cos coefficient must be nonzero");
  GeneratingFunction f(Kind::LogCos, {c});
  require_finite(f.params_);
  return f;
}

int GeneratingFunction::poly_degree() const {
  for (int k = static_cast<int>(params_.size()) - 1; k >= 0; --k)
    if (params_[k] != 0.0) return k;
  return 0;
}

double GeneratingFunction::derivative(int order, double t) const {
  if (order < 0 || order > 3)
    fail(ErrorCode::InvalidArgument, "derivative order must be in 0..3");
  switch (kind_) {
    case Kind::Linear: {
      const double c = params_[0], d = params_[1];
      if (order == 0) return c * t + d;
      if (order == 1) return c;
      return 0.0;
    }
    case Kind::Quadratic: {
      const double c = params_[0], d = params_[1], e = params_[2];
      if (order == 0) return (c * t + d) * t + e;
      if (order == 1) return 2.0 * c * t + d;
      if (order == 2) return 2.0 * c;
      return 0.0;
    }
    case Kind::Polynomial: {
      // Horner evaluation of the order-th derivative: weight each p_j by the
      // falling factorial j*(j-1)*...*(j-order+1).
      double acc = 0.0;
      const int m = static_cast<int>(params_.size()) - 1;
      for (int j = m; j >= order; --j) {
        double w = 1.0;
        for (int r = 0; r < order; ++r) w *= static_cast<double>(j - r);
        acc = acc * t + w * params_[j];
      }
      return acc;
    }
    case Kind::ExpPair: {
      const double c = params_[0], d = params_[1], a = params_[2], s = params_[3];
      const double up = std::exp(a * t);
      const double dn = std::exp(-a * t);
      const double ak = std::pow(a, order);
      const double sign = (order % 2 == 0) ? 1.0 : -1.0;
      const double v = ak * (c * up + sign * d * dn);
      return order == 0 ? v + s : v;
    }
    case Kind::TrigPair: {
      const double c = params_[0], d = params_[1], a = params_[2], s = params_[3];
      const double co = std::cos(a * t);
      const double si = std::sin(a * t);
      switch (order) {
        case 0: return c * co + d * si + s;
        case 1: return a * (-c * si + d * co);
        case 2: return a * a * (-c * co - d * si);
        default: return a * a * a * (c * si - d * co);
      }
    }
    case Kind::LogCos: {
      const double c = params_[0];
      const double u = c * t;
      const double co = std::cos(u);
      if (std::abs(co) < kLogCosGuard)
        fail(ErrorCode::DomainSingularity, "log_cos profile evaluated too close to a cosine zero");
      const double si = std::sin(u);
      switch (order) {
        case 0: return std::log(std::abs(co)) / c;
        case 1: return -si / co;
        case 2: return -c / (co * co);
        default: return -2.0 * c * c * si / (co * co * co);
      }
    }
  }
  fail(ErrorCode::InternalCheck, "unreachable profile kind");
}

bool GeneratingFunction::is_linear() const {
  if (kind_ == Kind::Linear) return true;
  if (kind_ == Kind::Polynomial) return poly_degree() <= 1;
  return false;
}

std::optional<double> GeneratingFunction::constant_second_derivative() const {
  switch (kind_) {
    case Kind::Linear: return 0.0;
    case Kind::Quadratic: return 2.0 * params_[0];
    case Kind::Polynomial: {
      const int deg = poly_degree();
      if (deg <= 1) return 0.0;
      if (deg == 2) return 2.0 * params_[2];
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

double GeneratingFunction::singular_distance(double t) const {
  if (kind_ != Kind::LogCos) return std::numeric_limits<double>::infinity();
  const double c = params_[0];
  // Zeros of cos(c*t) sit at c*t = pi/2 + k*pi.
  const double r = std::remainder(c * t - kPi / 2.0, kPi);
  return std::abs(r) / std::abs(c);
}

}  // namespace ahk
