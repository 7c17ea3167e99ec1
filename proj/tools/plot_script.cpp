#include <fstream>
#include <stdexcept>
#include <string>

#include "cli.hpp"

namespace sqrw::cli {

namespace {

// Single-quoted Python string literal.
std::string py_quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) {
    if (ch == '\\' || ch == '\'') q += '\\';
    q += ch;
  }
  return q + "'";
}

constexpr const char* kHeader = R"py(#!/usr/bin/env python3
# Generated by sqrw. Renders the CSV next to it; pass --save out.png to write a file.
import sys
import numpy as np
import matplotlib
if "--save" in sys.argv:
    matplotlib.use("Agg")
import matplotlib.pyplot as plt

)py";

constexpr const char* kSurface = R"py(data = np.genfromtxt(CSV, delimiter=",", names=True)
steps = data["step"].astype(int)
layers = data["w"].astype(int)
grid = np.zeros((steps.max() + 1, layers.max() + 1))
grid[steps, layers] = data["probability"]
fig, ax = plt.subplots(figsize=(7, 5))
im = ax.imshow(grid, origin="lower", aspect="auto", cmap="viridis")
ax.set_xlabel("layer w")
ax.set_ylabel("step n")
fig.colorbar(im, ax=ax, label="p_n(w)")
)py";

constexpr const char* kSeries = R"py(data = np.genfromtxt(CSV, delimiter=",", names=True)
names = data.dtype.names
fig, ax = plt.subplots(figsize=(7, 4))
for name in names[1:]:
    ax.plot(data[names[0]], data[name], label=name)
ax.set_xlabel(names[0])
ax.legend()
)py";

constexpr const char* kRatio = R"py(data = np.genfromtxt(CSV, delimiter=",", names=True)
fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(data["d"], data["ratio"], marker="o", label="p_q / p_c")
ax.set_xlabel("d")
ax.set_ylabel("p_q / p_c")
ax.legend()
)py";

constexpr const char* kFooter = R"py(if "--save" in sys.argv:
    fig.savefig(sys.argv[sys.argv.index("--save") + 1], dpi=150, bbox_inches="tight")
else:
    plt.show()
)py";

}  // namespace

void emit_plot_script(const std::filesystem::path& csv, PlotKind kind,
                      const std::filesystem::path& script, bool log_scale) {
  if (!std::filesystem::exists(csv)) {
    throw std::runtime_error("CSV '" + csv.string() + "' does not exist");
  }
  std::ofstream out(script);
  if (!out) throw std::runtime_error("cannot open '" + script.string() + "' for writing");
  out << kHeader << "CSV = " << py_quote(std::filesystem::absolute(csv).string()) << "\n\n";
  switch (kind) {
    case PlotKind::Surface:
      out << kSurface;
      break;
    case PlotKind::Series:
      out << kSeries;
      break;
    case PlotKind::Ratio:
      out << kRatio;
      break;
  }
  if (log_scale) out << "ax.set_yscale(\"log\")\n";
  out << kFooter;
}

}  // namespace sqrw::cli
