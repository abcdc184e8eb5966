#include "core/export_io.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include "core/errors.hpp"

namespace ahk {

namespace {

void put_double(std::ostream& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

void export_obj(const HypersurfaceSpec& spec, const GridSpec& grid, std::ostream& out) {
  if (spec.dim() != 2)
    fail(ErrorCode::UnsupportedExport, "OBJ export is only defined for two base dimensions");

  const int pts = grid.points_per_axis;
  std::vector<long> vertex_id(static_cast<size_t>(pts) * pts, 0);  // 1-based, 0 = excluded
  long next_id = 1;
  long cursor = 0;

  detail::for_each_grid_point(spec, grid, [&](std::span<const double> x, bool excluded) {
    const long cell = cursor++;
    if (excluded) return;
    const double z = eval_height(spec, x);
    vertex_id[cell] = next_id++;
    out << "v ";
    put_double(out, x[0]);
    out << " ";
    put_double(out, x[1]);
    out << " ";
    put_double(out, z);
    out << "\n";
  });

  auto id = [&](int i, int j) { return vertex_id[static_cast<size_t>(i) * pts + j]; };
  for (int i = 0; i + 1 < pts; ++i)
    for (int j = 0; j + 1 < pts; ++j) {
      const long v00 = id(i, j), v10 = id(i + 1, j);
      const long v11 = id(i + 1, j + 1), v01 = id(i, j + 1);
      if (v00 == 0 || v10 == 0 || v11 == 0 || v01 == 0) continue;
      out << "f " << v00 << " " << v10 << " " << v11 << "\n";
      out << "f " << v00 << " " << v11 << " " << v01 << "\n";
    }
}

void export_csv(const HypersurfaceSpec& spec, const std::optional<QuantityRequest>& quantity,
                const GridSpec& grid, std::ostream& out) {
  const int n = spec.dim();
  if (quantity) detail::require_ambient(spec, *quantity);

  for (int i = 0; i < n; ++i) out << "x_" << (i + 1) << ",";
  out << "z";
  if (quantity) out << "," << detail::quantity_name(*quantity);
  out << "\n";

  detail::for_each_grid_point(spec, grid, [&](std::span<const double> x, bool excluded) {
    if (excluded) return;
    for (int i = 0; i < n; ++i) {
      put_double(out, x[i]);
      out << ",";
    }
    put_double(out, eval_height(spec, x));
    if (quantity) {
      out << ",";
      put_double(out, detail::evaluate_quantity(spec, *quantity, x));
    }
    out << "\n";
  });
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot open output file: " + path);
  return out;
}

}  // namespace

void export_obj_file(const HypersurfaceSpec& spec, const GridSpec& grid,
                     const std::string& path) {
  auto out = open_out(path);
  export_obj(spec, grid, out);
}

void export_csv_file(const HypersurfaceSpec& spec, const std::optional<QuantityRequest>& quantity,
                     const GridSpec& grid, const std::string& path) {
  auto out = open_out(path);
  export_csv(spec, quantity, grid, out);
}

}  // namespace ahk
