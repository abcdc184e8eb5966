#include "ahk.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/constructors.hpp"
#include "core/errors.hpp"
#include "core/euclidean.hpp"
#include "core/export_io.hpp"
#include "core/hypersurface.hpp"
#include "core/isotropic.hpp"
#include "core/serialization.hpp"
#include "core/verification.hpp"

struct ahk_spec {
  ahk::HypersurfaceSpec value;
};

namespace {

thread_local std::string t_last_error;

ahk_status status_of(const ahk::Error& e) {
  using ahk::ErrorCode;
  switch (e.code()) {
    case ErrorCode::ParseError:
      return AHK_STATUS_PARSE_ERROR;
    case ErrorCode::DomainSingularity:
    case ErrorCode::AmbientMismatch:
    case ErrorCode::EmptyGrid:
      return AHK_STATUS_DOMAIN_ERROR;
    case ErrorCode::UnsupportedExport:
      return AHK_STATUS_UNSUPPORTED;
    case ErrorCode::InternalCheck:
      return AHK_STATUS_INTERNAL;
    default:
      return AHK_STATUS_CONSTRAINT_ERROR;
  }
}

template <typename Fn>
ahk_status guarded(Fn&& fn) {
  try {
    fn();
    return AHK_STATUS_OK;
  } catch (const ahk::Error& e) {
    t_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return AHK_STATUS_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return AHK_STATUS_INTERNAL;
  }
}

ahk_status invalid(const char* message) {
  t_last_error = message;
  return AHK_STATUS_CONSTRAINT_ERROR;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ahk::GridSpec make_grid(const ahk_spec* spec, const double* lo, const double* hi,
                        int points_per_axis, double exclusion_radius) {
  const int n = spec->value.dim();
  ahk::GridSpec grid;
  grid.lo.assign(lo, lo + n);
  grid.hi.assign(hi, hi + n);
  grid.points_per_axis = points_per_axis;
  grid.exclusion_radius = exclusion_radius;
  return grid;
}

ahk::QuantityRequest make_request(ahk_quantity quantity, int ki_index) {
  ahk::QuantityRequest req;
  switch (quantity) {
    case AHK_QUANTITY_GK: req.quantity = ahk::Quantity::GaussKronecker; break;
    case AHK_QUANTITY_RELATIVE: req.quantity = ahk::Quantity::RelativeCurvature; break;
    case AHK_QUANTITY_MEAN: req.quantity = ahk::Quantity::IsotropicMean; break;
    case AHK_QUANTITY_PRINCIPAL: req.quantity = ahk::Quantity::PrincipalMax; break;
    case AHK_QUANTITY_KI: req.quantity = ahk::Quantity::CurvatureFunction; break;
    default: ahk::fail(ahk::ErrorCode::InvalidArgument, "unknown quantity");
  }
  req.ki_index = ki_index;
  return req;
}

ahk::AffineMap make_map(const double* matrix, int n) {
  if (matrix == nullptr) ahk::fail(ahk::ErrorCode::InvalidArgument, "matrix must not be NULL");
  return ahk::AffineMap::from_flat(n, {matrix, static_cast<size_t>(n) * n});
}

std::vector<double> copy_coeffs(const double* v, int n, const char* name) {
  if (v == nullptr)
    ahk::fail(ahk::ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
  return {v, v + n};
}

}  // namespace

extern "C" {

const char* ahk_version(void) { return "1.0.0"; }

const char* ahk_last_error(void) { return t_last_error.c_str(); }

void ahk_string_free(char* s) { delete[] s; }

ahk_status ahk_spec_parse(const char* json_text, ahk_spec** out) {
  if (json_text == nullptr || out == nullptr) return invalid("NULL argument");
  return guarded([&] { *out = new ahk_spec{ahk::parse_spec_json(json_text)}; });
}

ahk_status ahk_spec_load(const char* path, ahk_spec** out) {
  if (path == nullptr || out == nullptr) return invalid("NULL argument");
  return guarded([&] { *out = new ahk_spec{ahk::load_spec_file(path)}; });
}

ahk_status ahk_spec_save(const ahk_spec* spec, const char* path) {
  if (spec == nullptr || path == nullptr) return invalid("NULL argument");
  return guarded([&] { ahk::save_spec_file(spec->value, path); });
}

ahk_status ahk_spec_to_json(const ahk_spec* spec, char** json_out) {
  if (spec == nullptr || json_out == nullptr) return invalid("NULL argument");
  return guarded([&] { *json_out = copy_string(ahk::spec_to_json(spec->value)); });
}

void ahk_spec_free(ahk_spec* spec) { delete spec; }

int ahk_spec_dim(const ahk_spec* spec) { return spec == nullptr ? 0 : spec->value.dim(); }

ahk_ambient ahk_spec_ambient(const ahk_spec* spec) {
  return (spec != nullptr && spec->value.ambient() == ahk::Ambient::Isotropic)
             ? AHK_AMBIENT_ISOTROPIC
             : AHK_AMBIENT_EUCLIDEAN;
}

ahk_status ahk_eval_height(const ahk_spec* spec, const double* x, double* z_out) {
  if (spec == nullptr || x == nullptr || z_out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    *z_out = ahk::eval_height(spec->value, {x, static_cast<size_t>(spec->value.dim())});
  });
}

ahk_status ahk_eval_quantity(const ahk_spec* spec, ahk_quantity quantity, int ki_index,
                             const double* x, double* value_out) {
  if (spec == nullptr || x == nullptr || value_out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    const ahk::QuantityRequest req = make_request(quantity, ki_index);
    ahk::detail::require_ambient(spec->value, req);
    *value_out = ahk::detail::evaluate_quantity(
        spec->value, req, {x, static_cast<size_t>(spec->value.dim())});
  });
}

ahk_status ahk_scan(const ahk_spec* spec, ahk_quantity quantity, int ki_index, const double* lo,
                    const double* hi, int points_per_axis, double exclusion_radius,
                    char** report_json_out) {
  if (spec == nullptr || lo == nullptr || hi == nullptr || report_json_out == nullptr)
    return invalid("NULL argument");
  return guarded([&] {
    const ahk::CurvatureReport report =
        ahk::scan(spec->value, make_request(quantity, ki_index),
                  make_grid(spec, lo, hi, points_per_axis, exclusion_radius));
    *report_json_out = copy_string(ahk::report_to_json(report));
  });
}

ahk_status ahk_verify(const ahk_spec* spec, ahk_theorem theorem, double lambda, const double* lo,
                      const double* hi, int points_per_axis, double exclusion_radius,
                      char** report_json_out, ahk_verdict* verdict_out) {
  if (spec == nullptr || lo == nullptr || hi == nullptr) return invalid("NULL argument");
  return guarded([&] {
    ahk::TheoremId id;
    switch (theorem) {
      case AHK_THEOREM_CYLINDER: id = ahk::TheoremId::CylinderFlatness; break;
      case AHK_THEOREM_CRC: id = ahk::TheoremId::ConstantRelativeCurvature; break;
      case AHK_THEOREM_CIMC: id = ahk::TheoremId::ConstantIsotropicMean; break;
      case AHK_THEOREM_EIGEN: id = ahk::TheoremId::LaplacianEigenfunction; break;
      default: ahk::fail(ahk::ErrorCode::InvalidArgument, "unknown theorem");
    }
    const ahk::CurvatureReport report = ahk::theorem_verdict(
        spec->value, id, lambda, make_grid(spec, lo, hi, points_per_axis, exclusion_radius));
    if (report_json_out != nullptr) *report_json_out = copy_string(ahk::report_to_json(report));
    if (verdict_out != nullptr) {
      switch (report.verdict) {
        case ahk::Verdict::ConfirmsTheorem: *verdict_out = AHK_VERDICT_CONFIRMS; break;
        case ahk::Verdict::ViolatesTheorem: *verdict_out = AHK_VERDICT_VIOLATES; break;
        case ahk::Verdict::NotApplicable: *verdict_out = AHK_VERDICT_NOT_APPLICABLE; break;
      }
    }
  });
}

ahk_status ahk_fuzz(uint64_t seed, int trials, char** summary_json_out) {
  if (summary_json_out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    *summary_json_out = copy_string(ahk::fuzz_summary_to_json(ahk::fuzz_suite(seed, trials)));
  });
}

ahk_status ahk_construct_crc(const double* matrix, int n, double k0, const double* c_partial,
                             const double* d, const double* e, ahk_spec** out) {
  if (out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    const ahk::AffineMap map = make_map(matrix, n);
    *out = new ahk_spec{ahk::construct_crc(map, k0, copy_coeffs(c_partial, n - 1, "c_partial"),
                                           copy_coeffs(d, n, "d"), copy_coeffs(e, n, "e"))};
  });
}

ahk_status ahk_construct_cimc(const double* matrix, int n, double h0, const double* c,
                              const double* d, const double* e, ahk_spec** out) {
  if (out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    const ahk::AffineMap map = make_map(matrix, n);
    *out = new ahk_spec{ahk::construct_cimc(map, h0, copy_coeffs(c, n, "c"),
                                            copy_coeffs(d, n, "d"), copy_coeffs(e, n, "e"))};
  });
}

ahk_status ahk_construct_eigen(const double* matrix, int n, double lambda, const double* c,
                               const double* d, const double* mu, ahk_spec** out) {
  if (out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    const ahk::AffineMap map = make_map(matrix, n);
    ahk::EigenSolutionParams params;
    params.lambda = lambda;
    params.c = copy_coeffs(c, n, "c");
    params.d = copy_coeffs(d, n, "d");
    params.mu = copy_coeffs(mu, n, "mu");
    *out = new ahk_spec{ahk::construct_eigen(map, params)};
  });
}

ahk_status ahk_construct_cylinder(const double* matrix, int n, int linear_index, double slope,
                                  double intercept, const char* other_profiles_json,
                                  ahk_ambient ambient, ahk_spec** out) {
  if (out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    const ahk::AffineMap map = make_map(matrix, n);
    std::vector<ahk::GeneratingFunction> others;
    if (other_profiles_json == nullptr) {
      others.assign(static_cast<size_t>(n - 1), ahk::GeneratingFunction::quadratic(1, 0, 0));
    } else {
      // Reuse the spec-file profile schema: wrap the array in a dummy spec
      // document sized to match and let the parser validate each object.
      nlohmann::json arr;
      try {
        arr = nlohmann::json::parse(other_profiles_json);
      } catch (const nlohmann::json::parse_error& e) {
        ahk::fail(ahk::ErrorCode::ParseError, std::string("profiles json: ") + e.what());
      }
      if (!arr.is_array() || static_cast<int>(arr.size()) != n - 1)
        ahk::fail(ahk::ErrorCode::ParseError, "expected an array of n-1 profile objects");
      nlohmann::json doc;
      doc["n"] = n;
      doc["ambient"] = "euclidean";
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < n; ++j) row.push_back(i == j ? 1.0 : 0.0);
        rows.push_back(row);
      }
      doc["matrix"] = rows;
      nlohmann::json profs = arr;
      profs.push_back({{"kind", "linear"}, {"c", 0.0}, {"d", 0.0}});
      doc["profiles"] = profs;
      const ahk::HypersurfaceSpec parsed = ahk::parse_spec_json(doc.dump());
      others.assign(parsed.profiles().begin(), parsed.profiles().end() - 1);
    }
    const ahk::Ambient amb = ambient == AHK_AMBIENT_ISOTROPIC ? ahk::Ambient::Isotropic
                                                              : ahk::Ambient::Euclidean;
    *out = new ahk_spec{
        ahk::construct_cylinder(map, linear_index, slope, intercept, std::move(others), amb)};
  });
}

ahk_status ahk_export_obj(const ahk_spec* spec, const double* lo, const double* hi,
                          int points_per_axis, double exclusion_radius, const char* path) {
  if (spec == nullptr || lo == nullptr || hi == nullptr || path == nullptr)
    return invalid("NULL argument");
  return guarded([&] {
    ahk::export_obj_file(spec->value, make_grid(spec, lo, hi, points_per_axis, exclusion_radius),
                         path);
  });
}

ahk_status ahk_export_csv(const ahk_spec* spec, int with_quantity, int ki_index, const double* lo,
                          const double* hi, int points_per_axis, double exclusion_radius,
                          const char* path) {
  if (spec == nullptr || lo == nullptr || hi == nullptr || path == nullptr)
    return invalid("NULL argument");
  return guarded([&] {
    std::optional<ahk::QuantityRequest> req;
    if (with_quantity >= 0)
      req = make_request(static_cast<ahk_quantity>(with_quantity), ki_index);
    ahk::export_csv_file(spec->value, req,
                         make_grid(spec, lo, hi, points_per_axis, exclusion_radius), path);
  });
}

}  // extern "C"
