// ahk command-line interface. Everything goes through the public C API in
// ahk.h; exit codes follow the documented contract:
//   0 success (including not_applicable verdicts)
//   2 unreadable/malformed input (flags, spec files)
//   3 domain errors (singular points, ambient mismatch, empty grid)
//   4 violated constructor/argument preconditions
//   5 a verify run that produced a violates_theorem verdict
//   6 unsupported export (OBJ with n != 2)

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ahk.h"

namespace {

struct GridArgs {
  std::vector<double> lo;
  std::vector<double> hi;
  int points = 21;
};

[[noreturn]] void die(int code, const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(code);
}

[[noreturn]] void die_status(ahk_status status) {
  die(static_cast<int>(status), ahk_last_error());
}

double parse_number(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') die(2, "cannot parse number in " + what + ": " + text);
  return v;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_number(text.substr(start, comma - start), what));
    start = comma + 1;
  }
  return out;
}

// One axis range "LO..HI:N"; a single --grid flag broadcasts to all axes.
void parse_grid_axis(const std::string& text, GridArgs& grid, bool first) {
  const size_t dots = text.find("..");
  const size_t colon = text.rfind(':');
  if (dots == std::string::npos || colon == std::string::npos || colon < dots)
    die(2, "grid axis must look like LO..HI:N, got: " + text);
  const double lo = parse_number(text.substr(0, dots), "--grid");
  const double hi = parse_number(text.substr(dots + 2, colon - dots - 2), "--grid");
  const int pts = static_cast<int>(parse_number(text.substr(colon + 1), "--grid"));
  if (!first && pts != grid.points) die(2, "all --grid axes must share the same point count");
  grid.lo.push_back(lo);
  grid.hi.push_back(hi);
  grid.points = pts;
}

GridArgs resolve_grid(const std::vector<std::string>& axes, int n) {
  GridArgs grid;
  if (axes.empty()) {
    grid.lo.assign(n, -1.0);
    grid.hi.assign(n, 1.0);
    return grid;
  }
  bool first = true;
  for (const auto& axis : axes) {
    parse_grid_axis(axis, grid, first);
    first = false;
  }
  if (static_cast<int>(grid.lo.size()) == 1 && n > 1) {
    grid.lo.assign(n, grid.lo[0]);
    grid.hi.assign(n, grid.hi[0]);
  }
  if (static_cast<int>(grid.lo.size()) != n)
    die(2, "expected 1 or n --grid axes for an n-dimensional spec");
  return grid;
}

ahk_spec* load_spec_or_die(const std::string& path) {
  ahk_spec* spec = nullptr;
  const ahk_status status = ahk_spec_load(path.c_str(), &spec);
  if (status != AHK_STATUS_OK) die_status(status);
  return spec;
}

ahk_quantity parse_quantity(const std::string& name) {
  if (name == "gk") return AHK_QUANTITY_GK;
  if (name == "relative") return AHK_QUANTITY_RELATIVE;
  if (name == "mean") return AHK_QUANTITY_MEAN;
  if (name == "principal") return AHK_QUANTITY_PRINCIPAL;
  if (name == "ki") return AHK_QUANTITY_KI;
  die(2, "unknown quantity (expected gk|relative|mean|principal|ki): " + name);
}

ahk_theorem parse_theorem(const std::string& name) {
  if (name == "cylinder" || name == "1.1") return AHK_THEOREM_CYLINDER;
  if (name == "crc" || name == "4.1") return AHK_THEOREM_CRC;
  if (name == "cimc" || name == "4.2") return AHK_THEOREM_CIMC;
  if (name == "eigen" || name == "4.3") return AHK_THEOREM_EIGEN;
  die(2, "unknown theorem (expected cylinder|crc|cimc|eigen or 1.1|4.1|4.2|4.3): " + name);
}

void print_and_free(char* text) {
  std::printf("%s\n", text);
  ahk_string_free(text);
}

std::vector<double> resolve_matrix(const std::string& matrix_flag, int n) {
  if (matrix_flag.empty()) {
    std::vector<double> id(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i) * n + i] = 1.0;
    return id;
  }
  std::vector<double> entries = parse_number_list(matrix_flag, "--matrix");
  if (static_cast<int>(entries.size()) != n * n)
    die(2, "--matrix needs n*n row-major entries");
  return entries;
}

std::vector<double> resolve_coeffs(const std::string& flag, size_t count, double fill,
                                   const std::string& name) {
  if (flag.empty()) return std::vector<double>(count, fill);
  std::vector<double> v = parse_number_list(flag, name);
  if (v.size() != count)
    die(2, name + " needs " + std::to_string(count) + " comma-separated values");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine translation hypersurface toolkit"};
  app.require_subcommand(1);

  // --- curvature -----------------------------------------------------------
  auto* curvature = app.add_subcommand("curvature", "scan a curvature quantity over a grid");
  std::string cu_spec, cu_quantity = "gk", cu_out;
  std::vector<std::string> cu_grid;
  int cu_index = 1;
  double cu_exclude = 0.0;
  curvature->add_option("--spec", cu_spec, "spec JSON file")->required();
  curvature->add_option("--quantity", cu_quantity, "gk|relative|mean|principal|ki");
  curvature->add_option("--index", cu_index, "index i for --quantity ki (1-based)");
  curvature->add_option("--grid", cu_grid, "axis range LO..HI:N (repeatable; default -1..1:21)");
  curvature->add_option("--exclude", cu_exclude, "singularity exclusion radius");
  curvature->add_option("--out", cu_out, "also write per-point samples as CSV");

  // --- construct -----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build a closed-form solution spec");
  std::string co_theorem, co_matrix, co_c, co_d, co_e, co_mu, co_others, co_ambient = "euclidean";
  std::string co_out;
  int co_n = 2, co_linear_index = 0;
  double co_k0 = 0.0, co_h0 = 0.0, co_lambda = 0.0, co_slope = 0.0, co_intercept = 0.0;
  construct->add_option("--theorem", co_theorem, "crc|cimc|eigen|cylinder")->required();
  construct->add_option("--n", co_n, "base dimension (default 2)");
  construct->add_option("--matrix", co_matrix, "n*n row-major entries (default identity)");
  construct->add_option("--k0", co_k0, "target relative curvature (crc)");
  construct->add_option("--h0", co_h0, "target isotropic mean (cimc)");
  construct->add_option("--lambda", co_lambda, "Laplacian eigenvalue (eigen)");
  construct->add_option("--c", co_c, "coefficients: n-1 values (crc), n values (cimc/eigen)");
  construct->add_option("--d", co_d, "n linear coefficients (default 0)");
  construct->add_option("--e", co_e, "n constant terms (default 0)");
  construct->add_option("--mu", co_mu, "n inhomogeneity constants, sum 0 (eigen; default 0)");
  construct->add_option("--index", co_linear_index, "linear profile slot (cylinder)");
  construct->add_option("--slope", co_slope, "linear profile slope (cylinder)");
  construct->add_option("--intercept", co_intercept, "linear profile intercept (cylinder)");
  construct->add_option("--others", co_others,
                        "JSON array of n-1 companion profiles (cylinder; default quadratics)");
  construct->add_option("--ambient", co_ambient, "euclidean|isotropic (cylinder only)");
  construct->add_option("--out", co_out, "write the spec JSON to this file");

  // --- verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a theorem verdict over a grid");
  std::string ve_spec, ve_theorem;
  std::vector<std::string> ve_grid;
  double ve_lambda = 0.0, ve_exclude = 0.0;
  verify->add_option("--spec", ve_spec, "spec JSON file")->required();
  verify->add_option("--theorem", ve_theorem, "cylinder|crc|cimc|eigen (or 1.1|4.1|4.2|4.3)")
      ->required();
  verify->add_option("--lambda", ve_lambda, "eigenvalue for the eigen theorem");
  verify->add_option("--grid", ve_grid, "axis range LO..HI:N (repeatable; default -1..1:21)");
  verify->add_option("--exclude", ve_exclude, "singularity exclusion radius");

  // --- export ----------------------------------------------------------------
  auto* exporter = app.add_subcommand("export", "sample the graph to OBJ or CSV");
  std::string ex_spec, ex_format = "csv", ex_quantity, ex_out;
  std::vector<std::string> ex_grid;
  int ex_index = 1;
  double ex_exclude = 0.0;
  exporter->add_option("--spec", ex_spec, "spec JSON file")->required();
  exporter->add_option("--format", ex_format, "obj|csv");
  exporter->add_option("--quantity", ex_quantity, "optional CSV quantity column");
  exporter->add_option("--index", ex_index, "index i for --quantity ki (1-based)");
  exporter->add_option("--grid", ex_grid, "axis range LO..HI:N (repeatable; default -1..1:21)");
  exporter->add_option("--exclude", ex_exclude, "singularity exclusion radius");
  exporter->add_option("--out", ex_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  if (curvature->parsed()) {
    ahk_spec* spec = load_spec_or_die(cu_spec);
    const GridArgs grid = resolve_grid(cu_grid, ahk_spec_dim(spec));
    const ahk_quantity quantity = parse_quantity(cu_quantity);
    char* report = nullptr;
    ahk_status status = ahk_scan(spec, quantity, cu_index, grid.lo.data(), grid.hi.data(),
                                 grid.points, cu_exclude, &report);
    if (status != AHK_STATUS_OK) die_status(status);
    print_and_free(report);
    if (!cu_out.empty()) {
      status = ahk_export_csv(spec, quantity, cu_index, grid.lo.data(), grid.hi.data(),
                              grid.points, cu_exclude, cu_out.c_str());
      if (status != AHK_STATUS_OK) die_status(status);
    }
    ahk_spec_free(spec);
    return 0;
  }

  if (construct->parsed()) {
    const std::vector<double> matrix = resolve_matrix(co_matrix, co_n);
    const std::vector<double> d = resolve_coeffs(co_d, co_n, 0.0, "--d");
    const std::vector<double> e = resolve_coeffs(co_e, co_n, 0.0, "--e");
    ahk_spec* spec = nullptr;
    ahk_status status = AHK_STATUS_OK;
    if (co_theorem == "crc") {
      const std::vector<double> c = resolve_coeffs(co_c, co_n - 1, 1.0, "--c");
      status = ahk_construct_crc(matrix.data(), co_n, co_k0, c.data(), d.data(), e.data(), &spec);
    } else if (co_theorem == "cimc") {
      const std::vector<double> c = resolve_coeffs(co_c, co_n, co_h0, "--c");
      status = ahk_construct_cimc(matrix.data(), co_n, co_h0, c.data(), d.data(), e.data(), &spec);
    } else if (co_theorem == "eigen") {
      const std::vector<double> c = resolve_coeffs(co_c, co_n, 1.0, "--c");
      const std::vector<double> mu = resolve_coeffs(co_mu, co_n, 0.0, "--mu");
      status = ahk_construct_eigen(matrix.data(), co_n, co_lambda, c.data(), d.data(), mu.data(),
                                   &spec);
    } else if (co_theorem == "cylinder") {
      const ahk_ambient ambient =
          co_ambient == "isotropic" ? AHK_AMBIENT_ISOTROPIC : AHK_AMBIENT_EUCLIDEAN;
      status = ahk_construct_cylinder(matrix.data(), co_n, co_linear_index, co_slope, co_intercept,
                                      co_others.empty() ? nullptr : co_others.c_str(), ambient,
                                      &spec);
    } else {
      die(2, "unknown theorem (expected crc|cimc|eigen|cylinder): " + co_theorem);
    }
    if (status != AHK_STATUS_OK) die_status(status);
    if (!co_out.empty()) {
      status = ahk_spec_save(spec, co_out.c_str());
      if (status != AHK_STATUS_OK) die_status(status);
    }
    char* json = nullptr;
    status = ahk_spec_to_json(spec, &json);
    if (status != AHK_STATUS_OK) die_status(status);
    print_and_free(json);
    ahk_spec_free(spec);
    return 0;
  }

  if (verify->parsed()) {
    ahk_spec* spec = load_spec_or_die(ve_spec);
    const GridArgs grid = resolve_grid(ve_grid, ahk_spec_dim(spec));
    char* report = nullptr;
    ahk_verdict verdict = AHK_VERDICT_NOT_APPLICABLE;
    const ahk_status status =
        ahk_verify(spec, parse_theorem(ve_theorem), ve_lambda, grid.lo.data(), grid.hi.data(),
                   grid.points, ve_exclude, &report, &verdict);
    if (status != AHK_STATUS_OK) die_status(status);
    print_and_free(report);
    ahk_spec_free(spec);
    return verdict == AHK_VERDICT_VIOLATES ? 5 : 0;
  }

  if (exporter->parsed()) {
    ahk_spec* spec = load_spec_or_die(ex_spec);
    const GridArgs grid = resolve_grid(ex_grid, ahk_spec_dim(spec));
    ahk_status status = AHK_STATUS_OK;
    if (ex_format == "obj") {
      status = ahk_export_obj(spec, grid.lo.data(), grid.hi.data(), grid.points, ex_exclude,
                              ex_out.c_str());
    } else if (ex_format == "csv") {
      const int quantity = ex_quantity.empty() ? -1 : parse_quantity(ex_quantity);
      status = ahk_export_csv(spec, quantity, ex_index, grid.lo.data(), grid.hi.data(),
                              grid.points, ex_exclude, ex_out.c_str());
    } else {
      die(2, "unknown format (expected obj|csv): " + ex_format);
    }
    if (status != AHK_STATUS_OK) die_status(status);
    ahk_spec_free(spec);
    return 0;
  }

  return 0;
}
