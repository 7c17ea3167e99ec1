#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "sqrw/circuit.hpp"
#include "sqrw/full_evolution.hpp"
#include "sqrw/hypercube.hpp"
#include "sqrw/multiport.hpp"
#include "sqrw/reduced_layer.hpp"
#include "sqrw/scattering.hpp"
#include "sqrw/search.hpp"
#include "sqrw/spectral.hpp"

namespace sqrw::cli {

namespace {

namespace fs = std::filesystem;

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Either a file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_surface(std::ostream& out, const std::vector<std::vector<double>>& rows) {
  out << "step,w,probability\n";
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t w = 0; w < rows[n].size(); ++w) {
      out << n << ',' << w << ',' << real(rows[n][w]) << '\n';
    }
  }
}

void write_hitting(std::ostream& out, int d_max) {
  out << "d,p_c,p_q,ratio\n";
  for (const HittingRow& row : hitting_ratio_table(d_max)) {
    out << row.d << ',' << real(row.p_classical) << ',' << real(row.p_quantum) << ','
        << real(row.ratio) << '\n';
  }
}

void write_detection(std::ostream& out, const DetectionSeries& s, bool cumulative) {
  out << (cumulative ? "step,detection_probability,cumulative_probability\n"
                     : "step,detection_probability\n");
  for (std::size_t n = 0; n < s.instantaneous.size(); ++n) {
    out << n << ',' << real(s.instantaneous[n]);
    if (cumulative) out << ',' << real(s.cumulative[n]);
    out << '\n';
  }
}

LayerInit parse_layer_init(const std::string& name) {
  if (name == "origin") return LayerInit::Origin;
  if (name == "corners") return LayerInit::Corners;
  if (name == "middle") return LayerInit::Middle;
  throw InvalidArgument("unknown initial state '" + name + "' (origin, corners, middle)");
}

std::vector<Complex> read_gamma(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gamma file '" + path + "'");
  std::vector<Complex> gamma;
  std::string line;
  while (std::getline(in, line)) {
    for (char& ch : line) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream fields(line);
    double re = 0.0;
    if (!(fields >> re)) continue;  // blank or comment line
    double im = 0.0;
    fields >> im;
    gamma.emplace_back(re, im);
  }
  return gamma;
}

void maybe_plot(const std::string& csv, const std::string& script, PlotKind kind, bool log_scale = false) {
  if (script.empty()) return;
  if (csv.empty()) throw InvalidArgument("--plot-script needs --out so the script has a CSV to read");
  emit_plot_script(csv, kind, script, log_scale);
}

struct Preset {
  std::string description;
  std::function<void(const fs::path&)> produce;
};

std::map<std::string, Preset> presets() {
  auto layers = [](int d, int steps, LayerInit init, std::string spec, std::string name) {
    return [=](const fs::path& dir) {
      const fs::path csv = dir / (name + ".csv");
      Sink sink(csv.string());
      const MultiportCoeffs c = parse_multiport_spec(spec, d);
      write_surface(sink.out(), layer_distribution_series(c, make_layer_state(init, d), steps));
      emit_plot_script(csv, PlotKind::Surface, dir / (name + "_plot.py"));
    };
  };
  std::map<std::string, Preset> p;
  p["fig2"] = {"hitting-probability ratio, d = 2..20", [](const fs::path& dir) {
                 const fs::path csv = dir / "fig2_ratio.csv";
                 Sink sink(csv.string());
                 write_hitting(sink.out(), 20);
                 emit_plot_script(csv, PlotKind::Ratio, dir / "fig2_ratio_plot.py", true);
               }};
  p["fig3"] = {"d=50, Grover, origin start, 100 steps",
               layers(50, 100, LayerInit::Origin, "grover", "fig3_layers")};
  p["fig4"] = {"d=50, symmetric p=1, corner pair, 250 steps",
               layers(50, 250, LayerInit::Corners, "symmetric:p=1", "fig4_layers")};
  p["fig5"] = {"d=50, symmetric p=1, middle layer, 250 steps",
               layers(50, 250, LayerInit::Middle, "symmetric:p=1", "fig5_layers")};
  p["fig6"] = {"d=50, Grover, corner pair, 250 steps",
               layers(50, 250, LayerInit::Corners, "grover", "fig6_layers")};
  p["fig7"] = {"d=50, Grover, middle layer, 250 steps",
               layers(50, 250, LayerInit::Middle, "grover", "fig7_layers")};
  p["fig9"] = {"d=10 scattering with tails, symmetric p=1, 400 steps", [](const fs::path& dir) {
                 const fs::path csv = dir / "fig9_detect.csv";
                 Sink sink(csv.string());
                 const int d = 10;
                 const auto series = detection_probability_series(d, symmetric_coeffs(d, 1.0),
                                                                  grover_boundary(d), 400);
                 write_detection(sink.out(), series, true);
                 emit_plot_script(csv, PlotKind::Series, dir / "fig9_detect_plot.py");
               }};
  return p;
}

int dispatch(CLI::App& app, int argc, const char* const* argv) {
  int dim = 0;
  int steps = 0;
  std::string multiport = "grover";
  std::string out;
  std::string plot_script;

  auto add_common = [&](CLI::App* sub, bool with_steps) {
    sub->add_option("--dim", dim, "hypercube dimension d")->required()->check(CLI::Range(1, kMaxDimension));
    if (with_steps) sub->add_option("--steps", steps, "number of steps")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--multiport", multiport, "grover | symmetric:p=<real> | custom:<re r>,<im r>,<re t>,<im t>")
        ->capture_default_str();
  };

  auto* full = app.add_subcommand("full", "full edge-state evolution, layer probabilities per step");
  add_common(full, true);
  std::string full_init = "origin-symmetric";
  std::string state_out;
  full->add_option("--init", full_init, "origin-symmetric | uniform")->capture_default_str();
  full->add_option("--out", out, "CSV step,w,probability (stdout if omitted)");
  full->add_option("--state-out", state_out, "final state CSV vertex_bits,direction,re,im");
  full->add_option("--plot-script", plot_script, "write a heatmap script for --out");

  auto* layers = app.add_subcommand("layers", "symmetry-reduced layer walk, p_n(w) surface");
  add_common(layers, true);
  std::string layer_init = "origin";
  std::string audit_out;
  layers->add_option("--init", layer_init, "origin | corners | middle")->capture_default_str();
  layers->add_option("--out", out, "CSV step,w,probability (stdout if omitted)");
  layers->add_option("--audit-out", audit_out, "CSV step,edge_norm,binomial_squared_norm");
  layers->add_option("--plot-script", plot_script, "write a heatmap script for --out");

  auto* hitting = app.add_subcommand("hitting", "classical vs quantum hitting probabilities");
  int d_max = 20;
  hitting->add_option("--dmax", d_max, "largest dimension")->check(CLI::Range(2, 1000))->capture_default_str();
  hitting->add_option("--out", out, "CSV d,p_c,p_q,ratio (stdout if omitted)");
  hitting->add_option("--plot-script", plot_script, "write a log-scale line plot script for --out");

  auto* scatter = app.add_subcommand("scatter", "hypercube with tails, detection probability series");
  add_common(scatter, true);
  int tail_length = 0;
  bool cumulative = false;
  scatter->add_option("--tail-length", tail_length, "tail sites per side (default steps + 2)");
  scatter->add_flag("--cumulative", cumulative, "also emit the cumulative absorbed probability");
  scatter->add_option("--out", out, "CSV step,detection_probability (stdout if omitted)");
  scatter->add_option("--plot-script", plot_script, "write a line plot script for --out");

  auto* mz = app.add_subcommand("mz", "interferometer amplitude for a non-symmetric start");
  add_common(mz, false);
  std::string gamma_path;
  mz->add_option("--gamma", gamma_path, "file with d lines 're im' (or 're,im')")->required();

  auto* search = app.add_subcommand("search", "oracle-marked walk, success probability per step");
  add_common(search, true);
  std::string marked;
  std::string metric = "outgoing";
  double phase = std::acos(-1.0);
  search->add_option("--marked", marked, "marked vertex as a d-bit string")->required();
  search->add_option("--metric", metric, "outgoing | incoming")->capture_default_str();
  search->add_option("--phase", phase, "marked multiport reflection phase (r = e^{i phase})");
  search->add_option("--out", out, "CSV step,success_probability (stdout if omitted)");
  search->add_option("--plot-script", plot_script, "write a line plot script for --out");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of U assembled from Fourier blocks");
  add_common(spectrum, false);
  int dense_cap = kSpectralDenseCap;
  spectrum->add_option("--dense-cap", dense_cap, "largest d for dense work")->capture_default_str();
  spectrum->add_option("--out", out, "CSV k_bits,eigenvalue_re,eigenvalue_im (stdout if omitted)");

  auto* verify = app.add_subcommand("verify-circuit", "compare the gate decomposition with the walk operator");
  add_common(verify, false);

  auto* repro = app.add_subcommand("repro", "write a named preset's data set and plot script");
  std::string preset_name;
  std::string out_dir = ".";
  repro->add_option("preset", preset_name, "preset name (fig2 ... fig9) or all")->required();
  repro->add_option("--out-dir", out_dir, "output directory")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "write a plotting script for an existing CSV");
  std::string plot_csv;
  std::string plot_kind = "series";
  bool log_scale = false;
  plot->add_option("--csv", plot_csv, "input CSV")->required();
  plot->add_option("--kind", plot_kind, "surface | series | ratio")->capture_default_str();
  plot->add_option("--script", plot_script, "output script path")->required();
  plot->add_flag("--log", log_scale, "logarithmic y axis");

  app.require_subcommand(1);
  app.parse(argc, argv);

  if (full->parsed()) {
    const HypercubeDim hd(dim);
    const EvolutionConfig cfg(hd, parse_multiport_spec(multiport, dim));
    FullState s = full_init == "uniform"            ? uniform_edge_state(hd)
                  : full_init == "origin-symmetric" ? initial_symmetric_state(hd)
                                                    : throw InvalidArgument("unknown --init '" + full_init + "'");
    std::vector<std::vector<double>> rows;
    rows.push_back(layer_probabilities(s));
    for (int n = 1; n <= steps; ++n) {
      s = step(s, cfg);
      rows.push_back(layer_probabilities(s));
    }
    {
      Sink sink(out);
      write_surface(sink.out(), rows);
    }
    if (!state_out.empty()) {
      Sink sink(state_out);
      write_full_state_csv(sink.out(), s);
    }
    maybe_plot(out, plot_script, PlotKind::Surface);
  } else if (layers->parsed()) {
    const MultiportCoeffs c = parse_multiport_spec(multiport, dim);
    const LayerState init = make_layer_state(parse_layer_init(layer_init), dim);
    {
      Sink sink(out);
      write_surface(sink.out(), layer_distribution_series(c, init, steps));
    }
    if (!audit_out.empty()) {
      Sink sink(audit_out);
      sink.out() << "step,edge_norm,binomial_squared_norm\n";
      for (const auto& row : conservation_audit(c, init, steps)) {
        sink.out() << row.step << ',' << real(row.edge_norm) << ',' << real(row.binomial_squared_norm) << '\n';
      }
    }
    maybe_plot(out, plot_script, PlotKind::Surface);
  } else if (hitting->parsed()) {
    {
      Sink sink(out);
      write_hitting(sink.out(), d_max);
    }
    maybe_plot(out, plot_script, PlotKind::Ratio, true);
  } else if (scatter->parsed()) {
    const MultiportCoeffs c = parse_multiport_spec(multiport, dim);
    const auto series = detection_probability_series(dim, c, grover_boundary(dim), steps, tail_length);
    {
      Sink sink(out);
      write_detection(sink.out(), series, cumulative);
    }
    maybe_plot(out, plot_script, PlotKind::Series);
  } else if (mz->parsed()) {
    const MultiportCoeffs c = parse_multiport_spec(multiport, dim);
    const std::vector<Complex> gamma = read_gamma(gamma_path);
    if (static_cast<int>(gamma.size()) != dim) {
      throw InvalidArgument("gamma file has " + std::to_string(gamma.size()) + " entries, expected " +
                            std::to_string(dim));
    }
    const BoundaryCoeffs b = grover_boundary(dim);
    const Complex closed = interferometer_amplitude(gamma, c, b);
    const Complex simulated = interferometer_amplitude_simulated(gamma, c, b);
    std::cout << "amplitude_re,amplitude_im,probability,simulated_re,simulated_im\n"
              << real(closed.real()) << ',' << real(closed.imag()) << ',' << real(std::norm(closed)) << ','
              << real(simulated.real()) << ',' << real(simulated.imag()) << '\n';
  } else if (search->parsed()) {
    const HypercubeDim hd(dim);
    SearchConfig cfg(hd, parse_vertex(marked, hd), steps);
    cfg.marked_coeffs = phase_coeffs(dim, phase);
    if (metric == "incoming") {
      cfg.metric = SuccessMetric::Incoming;
    } else if (metric != "outgoing") {
      throw InvalidArgument("unknown --metric '" + metric + "'");
    }
    const SearchResult res = run_search(cfg);
    {
      Sink sink(out);
      sink.out() << "step,success_probability\n";
      for (std::size_t n = 0; n < res.success.size(); ++n) sink.out() << n << ',' << real(res.success[n]) << '\n';
    }
    std::cout << "peak_step,peak_probability\n" << res.peak_step << ',' << real(res.peak_probability) << '\n';
    maybe_plot(out, plot_script, PlotKind::Series);
  } else if (spectrum->parsed()) {
    const HypercubeDim hd(dim);
    const auto eig = full_spectrum_via_blocks(hd, parse_multiport_spec(multiport, dim), dense_cap);
    Sink sink(out);
    sink.out() << "k_bits,eigenvalue_re,eigenvalue_im\n";
    for (const auto& e : eig) {
      sink.out() << format_vertex(e.k, hd) << ',' << real(e.value.real()) << ',' << real(e.value.imag()) << '\n';
    }
  } else if (verify->parsed()) {
    const CircuitEquivalence eq = verify_circuit(dim, parse_multiport_spec(multiport, dim));
    std::cout << "max_operator_deviation," << real(eq.max_deviation) << '\n'
              << (eq.pass ? "PASS" : "FAIL") << '\n';
    return eq.pass ? kOk : kCheckFailed;
  } else if (repro->parsed()) {
    const auto table = presets();
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    if (preset_name == "all") {
      for (const auto& [name, preset] : table) {
        preset.produce(dir);
        std::cout << name << ": " << preset.description << '\n';
      }
    } else {
      const auto it = table.find(preset_name);
      if (it == table.end()) throw InvalidArgument("unknown preset '" + preset_name + "'");
      it->second.produce(dir);
      std::cout << preset_name << ": " << it->second.description << '\n';
    }
  } else if (plot->parsed()) {
    PlotKind kind = PlotKind::Series;
    if (plot_kind == "surface") {
      kind = PlotKind::Surface;
    } else if (plot_kind == "ratio") {
      kind = PlotKind::Ratio;
    } else if (plot_kind != "series") {
      throw InvalidArgument("unknown --kind '" + plot_kind + "'");
    }
    emit_plot_script(plot_csv, kind, plot_script, log_scale);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("sqrw");

  CLI::App app{"Scattering quantum random walk on the hypercube"};
  app.name("sqrw");
  try {
    return dispatch(app, static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "sqrw: resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const TruncationError& e) {
    std::cerr << "sqrw: truncation: " << e.what() << '\n';
    return kTruncation;
  } catch (const InvalidArgument& e) {
    std::cerr << "sqrw: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "sqrw: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace sqrw::cli
