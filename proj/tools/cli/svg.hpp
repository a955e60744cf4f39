#pragma once

#include <string>

#include "cli/csv.hpp"

namespace sircli {

/// Renders a CSV produced by this tool into a self-contained SVG.
/// kind: timeseries | bifurcation | lyapunov-curve | density.
void render_svg(const CsvTable& table, const std::string& kind,
                const std::string& out_path);

}  // namespace sircli
