#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace sqrw::cli {

/// Exit codes of the sqrw tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResource = 3,
  kTruncation = 4,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args);

enum class PlotKind { Surface, Series, Ratio };

/// Writes a standalone matplotlib script that renders `csv`. Surfaces
/// (step,w,probability) become heatmaps; series and ratio tables become line
/// plots, the latter on a log scale when `log_scale` is set.
void emit_plot_script(const std::filesystem::path& csv, PlotKind kind,
                      const std::filesystem::path& script, bool log_scale = false);

}  // namespace sqrw::cli
