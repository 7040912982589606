#pragma once

#include "abring/sweep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abring {

struct FigureOutput {
    std::string csv_path;
    std::optional<std::string> svg_path;
};

// fig2a fig2b fig2c fig3a fig3b fig3c fig3d fig4a fig4b
const std::vector<std::string>& figure_names();
bool is_figure_name(const std::string& name);

// Writes <name>.csv (and <name>.svg when plot is set) under outdir, creating
// the directory if needed. Throws ConfigError for unknown names, IoError for
// filesystem trouble. The x column of fig2c is the operator offset delta
// rather than theta; the metadata header says so.
FigureOutput write_figure(const std::string& name, const std::string& outdir, bool plot);

}  // namespace abring
