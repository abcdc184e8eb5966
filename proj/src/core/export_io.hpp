#pragma once

#include <optional>
#include <ostream>

#include "core/hypersurface.hpp"
#include "core/verification.hpp"

namespace ahk {

/// ASCII OBJ mesh of the graph over the grid ("v" and "f" records only;
/// faces are quad cells split into two triangles, emitted only when all four
/// corners survive the exclusion radius). Requires n == 2; anything else
/// throws Error(UnsupportedExport).
void export_obj(const HypersurfaceSpec& spec, const GridSpec& grid, std::ostream& out);

/// CSV with header x_1,...,x_n,z[,quantity] and one row per non-excluded grid
/// point, in grid order.
void export_csv(const HypersurfaceSpec& spec, const std::optional<QuantityRequest>& quantity,
                const GridSpec& grid, std::ostream& out);

void export_obj_file(const HypersurfaceSpec& spec, const GridSpec& grid, const std::string& path);
void export_csv_file(const HypersurfaceSpec& spec, const std::optional<QuantityRequest>& quantity,
                     const GridSpec& grid, const std::string& path);

}  // namespace ahk
