// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set passed via
// --expected-fail (empty by default), so an unexpected pass is reported too.

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sqrw/circuit.hpp"
#include "sqrw/full_evolution.hpp"
#include "sqrw/multiport.hpp"
#include "sqrw/reduced_layer.hpp"
#include "sqrw/scattering.hpp"
#include "sqrw/search.hpp"
#include "sqrw/spectral.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace sqrw;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<MultiportCoeffs> families(int d) {
  std::vector<MultiportCoeffs> out{grover_coeffs(d)};
  if (d >= 2) out.push_back(symmetric_coeffs(d, 1.0));
  return out;
}

double mean_of(const std::vector<double>& p) { return layer_mean(p); }

// ---------------------------------------------------------------------------

Outcome unitarity(std::uint64_t seed) {
  double drift = 0.0;
  double matrix_dev = 0.0;
  std::mt19937_64 rng(seed);
  for (int d = 2; d <= 10; ++d) {
    const HypercubeDim dim(d);
    for (const auto& c : families(d)) {
      const Eigen::MatrixXcd m = multiport_matrix(c);
      matrix_dev = std::max(matrix_dev, (m * m.adjoint() - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff());
      const EvolutionConfig cfg(dim, c);
      FullState s = testing::random_unit_state(dim, rng);
      for (int n = 0; n < 100; ++n) s = step(s, cfg);
      drift = std::max(drift, std::abs(s.squared_norm() - 1.0));
    }
  }
  return {drift <= 1e-10 && matrix_dev <= 1e-12,
          fmt("norm drift %.2e after 100 steps (d=2..10, tol 1e-10); max |MM^+ - 1| %.2e (tol 1e-12)", drift,
              matrix_dev)};
}

Outcome reduced_equals_full() {
  double worst = 0.0;
  for (int d = 2; d <= 10; ++d) {
    const HypercubeDim dim(d);
    for (const auto& c : families(d)) {
      const EvolutionConfig cfg(dim, c);
      for (LayerInit init : {LayerInit::Origin, LayerInit::Corners, LayerInit::Middle}) {
        LayerState s = make_layer_state(init, d);
        FullState f = embed_layer_state(s, dim);
        for (int n = 0; n <= 60; ++n) {
          if (n > 0) {
            s = reduced_step(s, c);
            f = step(f, cfg);
          }
          const auto pr = s.layer_probabilities();
          const auto pf = layer_probabilities(f);
          for (std::size_t w = 0; w < pr.size(); ++w) worst = std::max(worst, std::abs(pr[w] - pf[w]));
        }
      }
    }
  }
  return {worst <= 1e-10,
          fmt("max |p_reduced - p_full| = %.2e over d=2..10, 3 initial states, 2 families, n<=60 (tol 1e-10)",
              worst)};
}

Outcome hitting_amplitude() {
  double reduced_dev = 0.0;
  for (int d = 2; d <= 20; ++d) {
    const auto c = grover_coeffs(d);
    LayerState s = origin_layer_state(d);
    for (int n = 0; n < d; ++n) s = reduced_step(s, c);
    reduced_dev = std::max(reduced_dev, std::abs(s.down(d) - hitting_amplitude_closed_form(d, c)));
  }
  double full_dev = 0.0;
  for (int d = 2; d <= 10; ++d) {
    const EvolutionConfig cfg(HypercubeDim(d), grover_coeffs(d));
    full_dev = std::max(full_dev,
                        std::abs(quantum_hitting_amplitude_full(cfg) - hitting_amplitude_closed_form(d, cfg.coeffs())));
  }
  const double ref[3] = {0.5, 64.0 / 243.0, 9.0 / 64.0};
  double ref_dev = 0.0;
  for (int d = 2; d <= 4; ++d) {
    ref_dev = std::max(ref_dev, std::abs(std::norm(hitting_amplitude_closed_form(d, grover_coeffs(d))) - ref[d - 2]));
  }
  return {reduced_dev <= 1e-10 && full_dev <= 1e-10 && ref_dev <= 1e-10,
          fmt("reduced d=2..20 dev %.2e, full d=2..10 dev %.2e, reference p_q(2,3,4) dev %.2e (tol 1e-10)",
              reduced_dev, full_dev, ref_dev)};
}

Outcome classical_comparison() {
  double dev = 0.0;
  for (int d = 1; d <= 12; ++d) {
    ClassicalLayerDist p = classical_origin_dist(d);
    for (int n = 0; n < d; ++n) p = classical_walk_step(p);
    double exact = 1.0;
    for (int k = 1; k <= d; ++k) exact *= static_cast<double>(k) / d;
    dev = std::max(dev, std::abs(p.p[static_cast<std::size_t>(d)] - exact));
    dev = std::max(dev, std::abs(p.per_vertex(d) - testing::classical_corner_probability_bruteforce(d, d)));
  }
  const auto rows = hitting_ratio_table(20);
  bool trend = true;
  double prev = 0.0;
  for (const auto& row : rows) {
    if (row.d < 3) continue;
    if (row.ratio < 1.0 || (row.d > 3 && !(row.ratio > prev))) trend = false;
    prev = row.ratio;
  }
  return {dev <= 1e-12 && trend,
          fmt("classical d!/d^d dev %.2e (d<=12, tol 1e-12); ratio >= 1 and strictly increasing d=3..20: %s "
              "(ratio(20) = %.4g)",
              dev, trend ? "yes" : "no", rows.back().ratio)};
}

Outcome origin_packet() {
  const int d = 50;
  const auto series = layer_distribution_series(grover_coeffs(d), origin_layer_state(d), 100);
  double row_dev = 0.0;
  std::vector<double> mean;
  for (const auto& row : series) {
    row_dev = std::max(row_dev, std::abs(std::accumulate(row.begin(), row.end(), 0.0) - 1.0));
    mean.push_back(mean_of(row));
  }
  const auto peak = static_cast<int>(std::max_element(mean.begin(), mean.end()) - mean.begin());
  int first_above = -1;
  for (int n = 0; n <= 100 && first_above < 0; ++n) {
    if (mean[static_cast<std::size_t>(n)] > d / 2.0) first_above = n;
  }
  const bool reflects = first_above >= 0 && first_above < 100 && peak < 100 && mean[peak + 1] < mean[peak] &&
                        mean[100] < mean[peak];
  return {row_dev <= 1e-10 && reflects,
          fmt("row sums dev %.2e (tol 1e-10); <w> > 25 from n=%d, peak %.3f at n=%d, <w>_100 = %.3f", row_dev,
              first_above, mean[peak], peak, mean[100])};
}

int crossings(const std::vector<double>& mean, double level, double tol) {
  int count = 0;
  int last = 0;
  for (double m : mean) {
    const int sign = m > level + tol ? 1 : (m < level - tol ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++count;
    last = sign;
  }
  return count;
}

Outcome revivals() {
  const int d = 50;
  bool all = true;
  std::string detail;
  for (const auto& [name, c] : {std::pair{"grover", grover_coeffs(d)}, std::pair{"symmetric", symmetric_coeffs(d, 1.0)}}) {
    for (const auto& [iname, init] : {std::pair{"corners", LayerInit::Corners}, std::pair{"middle", LayerInit::Middle}}) {
      const auto series = layer_distribution_series(c, make_layer_state(init, d), 250);
      std::vector<double> mean;
      double spread = 0.0;
      for (const auto& row : series) {
        mean.push_back(mean_of(row));
        spread = std::max(spread, std::abs(mean.back() - d / 2.0));
      }
      const int k = crossings(mean, d / 2.0, 1e-9);
      all = all && k >= 2;
      detail += fmt("%s/%s %d crossings (max |<w>-25| %.1e); ", name, iname, k, spread);
    }
  }
  detail += "need >= 2 each";
  return {all, detail};
}

Outcome circuit_equivalence() {
  double op_dev = 0.0;
  for (int d = 1; d <= kCircuitDenseCap; ++d) {
    for (const auto& c : families(d)) op_dev = std::max(op_dev, verify_circuit(d, c).max_deviation);
  }
  bool ca_ok = true;
  double ca_dev = 0.0;
  for (int d = 1; d <= kCaDenseCap; ++d) {
    const auto rep = verify_ca_eigenstructure(d);
    ca_ok = ca_ok && rep.ok();
    ca_dev = std::max({ca_dev, rep.max_commutator, rep.max_eigen_residual});
  }
  double coin_dev = 0.0;
  for (int d = 2; d <= 10; ++d) {
    for (const auto& c : families(d)) {
      const CoinMatrix m(c);
      std::vector<Complex> expected;
      for (const auto& e : coin_eigensystem(m)) expected.insert(expected.end(), static_cast<std::size_t>(e.multiplicity), e.value);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.matrix(), false);
      const Eigen::VectorXcd ev = solver.eigenvalues();
      coin_dev = std::max(coin_dev, multiset_distance(expected, {ev.data(), ev.data() + ev.size()}));
    }
  }
  return {op_dev <= 1e-12 && ca_ok && coin_dev <= 1e-10,
          fmt("operator dev %.2e (d<=8, tol 1e-12); C_a commutation/eigenvectors d<=6 %s (%.1e); coin spectrum dev "
              "%.2e (tol 1e-10)",
              op_dev, ca_ok ? "ok" : "FAILED", ca_dev, coin_dev)};
}

double commutator_with(HypercubeDim dim, const EvolutionConfig& cfg, const std::function<FullState(const FullState&)>& p) {
  double worst = 0.0;
  FullState basis(dim);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    basis[col] = 1.0;
    worst = std::max(worst, testing::max_abs_diff(step(p(basis), cfg), p(step(basis, cfg))));
    basis[col] = 0.0;
  }
  return worst;
}

Outcome block_diagonalization() {
  double spec_dev = 0.0;
  double off_block = 0.0;
  for (int d = 1; d <= kSpectralDenseCap; ++d) {
    const HypercubeDim dim(d);
    for (const auto& c : families(d)) {
      std::vector<Complex> blocks;
      for (const auto& e : full_spectrum_via_blocks(dim, c)) blocks.push_back(e.value);
      spec_dev = std::max(spec_dev, multiset_distance(blocks, dense_spectrum(dim, c)));
      off_block = std::max(off_block, max_off_block_element(dim, c));
    }
  }
  // Every T_b for d <= 6, the generators T_{e_a} above that.
  double comm = 0.0;
  for (int d = 2; d <= 8; ++d) {
    const HypercubeDim dim(d);
    const EvolutionConfig cfg(dim, symmetric_coeffs(d, 1.0));
    std::vector<std::uint64_t> shifts;
    if (d <= 6) {
      for (std::uint64_t b = 0; b < dim.vertex_count(); ++b) shifts.push_back(b);
    } else {
      for (int a = 1; a <= d; ++a) shifts.push_back(dim.generator(a));
    }
    for (std::uint64_t b : shifts) {
      comm = std::max(comm, commutator_with(dim, cfg, [b](const FullState& s) { return translation_apply(s, Vertex{b}); }));
    }
    comm = std::max(comm, commutator_with(dim, cfg, [](const FullState& s) { return rotation_apply(s); }));
    for (std::uint64_t x : {std::uint64_t{1}, dim.all_ones() / 3, dim.all_ones()}) {
      comm = std::max(comm, commutator_with(dim, cfg, [x](const FullState& s) { return rotation_apply_about(s, Vertex{x}); }));
    }
  }
  return {spec_dev <= 1e-10 && off_block <= 1e-12 && comm <= 1e-12,
          fmt("block vs dense spectrum %.2e (d<=6, tol 1e-10); off-block %.2e (tol 1e-12); [U,T_b], [U,R], [U,R_x] "
              "%.2e (d<=8, tol 1e-12)",
              spec_dev, off_block, comm)};
}

Outcome scattering() {
  double conservation = 0.0;
  bool light_cone = true;
  for (int d = 2; d <= 10; ++d) {
    for (const auto& c : families(d)) {
      const auto series = detection_probability_series(d, c, grover_boundary(d), 200);
      for (double t : series.total) conservation = std::max(conservation, std::abs(t - 1.0));
      for (int n = 0; n <= d; ++n) light_cone = light_cone && series.instantaneous[static_cast<std::size_t>(n)] == 0.0;
    }
  }
  double first_dev = 0.0;
  for (int d = 2; d <= 6; ++d) {
    for (const auto& c : families(d)) {
      const auto b = grover_boundary(d);
      const auto series = detection_probability_series(d, c, b, d + 1);
      const Complex paths = testing::path_sum_source_to_detector(d, c.r, c.t, b.r, b.t, d + 1);
      first_dev = std::max(first_dev, std::abs(series.instantaneous[static_cast<std::size_t>(d + 1)] - std::norm(paths)));
    }
  }
  // The cube is bipartite, so detections only occur every other step; maxima
  // are counted on that subsequence.
  const int d = 10;
  const auto beats = detection_probability_series(d, symmetric_coeffs(d, 1.0), grover_boundary(d), 400).instantaneous;
  std::vector<double> live;
  for (std::size_t n = d + 1; n < beats.size(); n += 2) live.push_back(beats[n]);
  int maxima = 0;
  for (std::size_t i = 1; i + 1 < live.size(); ++i) maxima += (live[i] > live[i - 1] && live[i] > live[i + 1]) ? 1 : 0;
  return {conservation <= 1e-10 && light_cone && first_dev <= 1e-10 && maxima >= 2,
          fmt("conservation %.2e (tol 1e-10); zero for n<=d: %s; first detection vs path sum %.2e (d<=6); d=10 "
              "local maxima %d (need >= 2)",
              conservation, light_cone ? "yes" : "no", first_dev, maxima)};
}

Outcome interferometer(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  double closed_dev = 0.0;
  double zero_sum = 0.0;
  double equal_sum = 0.0;
  for (int d = 2; d <= 8; ++d) {
    const auto b = grover_boundary(d);
    for (const auto& c : families(d)) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> gamma(static_cast<std::size_t>(d));
        for (auto& z : gamma) z = Complex(g(rng), g(rng));
        closed_dev = std::max(closed_dev, std::abs(interferometer_amplitude_simulated(gamma, c, b) -
                                                   interferometer_amplitude(gamma, c, b)));
        // Same sum, different distribution.
        std::vector<Complex> moved = gamma;
        const Complex shift(g(rng), g(rng));
        moved[0] += shift;
        moved[static_cast<std::size_t>(d - 1)] -= shift;
        equal_sum = std::max(equal_sum, std::abs(interferometer_amplitude_simulated(gamma, c, b) -
                                                 interferometer_amplitude_simulated(moved, c, b)));
        // Remove the mean to get a zero-sum vector.
        const Complex mean = std::accumulate(gamma.begin(), gamma.end(), Complex{}) / static_cast<double>(d);
        for (auto& z : gamma) z -= mean;
        zero_sum = std::max(zero_sum, std::abs(interferometer_amplitude_simulated(gamma, c, b)));
      }
    }
  }
  return {closed_dev <= 1e-10 && zero_sum <= 1e-12 && equal_sum <= 1e-12,
          fmt("simulated vs closed form %.2e (d<=8, 20 random gamma, tol 1e-10); zero-sum %.2e; equal-sum pairs %.2e "
              "(tol 1e-12)",
              closed_dev, zero_sum, equal_sum)};
}

Outcome search() {
  const HypercubeDim dim(8);
  const double n_vertices = 256.0;
  const int steps = 4 * 16;
  const SearchResult res = run_search(SearchConfig(dim, parse_vertex("00001111", dim), steps));

  double covariance = 0.0;
  const SearchResult base = run_search(SearchConfig(dim, Vertex{0}, steps));
  for (std::uint64_t m = 1; m < dim.vertex_count(); ++m) {
    const SearchResult other = run_search(SearchConfig(dim, Vertex{m}, steps));
    for (std::size_t n = 0; n < base.success.size(); ++n) covariance = std::max(covariance, std::abs(base.success[n] - other.success[n]));
  }

  SearchConfig flat(dim, Vertex{0b10110001}, steps);
  flat.marked_coeffs = grover_coeffs(8);
  double stationarity = 0.0;
  for (double p : run_search(flat).success) stationarity = std::max(stationarity, std::abs(p - 1.0 / n_vertices));

  return {res.peak_probability >= 25.0 / n_vertices && covariance <= 1e-12 && stationarity <= 1e-12,
          fmt("peak %.17g at n=%d (need >= 25/256 = %.4f, n <= 64); covariance %.2e; unperturbed drift %.2e (tol "
              "1e-12)",
              res.peak_probability, res.peak_step, 25.0 / n_vertices, covariance, stationarity)};
}

Outcome conservation_audit_check(const fs::path& log_dir) {
  double edge_dev = 0.0;
  double binomial_dev = 0.0;
  if (!log_dir.empty()) fs::create_directories(log_dir);
  for (int d : {4, 10, 50}) {
    for (const auto& [name, c] : {std::pair{"grover", grover_coeffs(d)}, std::pair{"symmetric", symmetric_coeffs(d, 1.0)}}) {
      for (const auto& [iname, init] : {std::pair{"origin", LayerInit::Origin}, std::pair{"corners", LayerInit::Corners},
                                        std::pair{"middle", LayerInit::Middle}}) {
        const auto rows = conservation_audit(c, make_layer_state(init, d), 100);
        std::ofstream log;
        if (!log_dir.empty()) {
          log.open(log_dir / fmt("audit_d%d_%s_%s.csv", d, name, iname));
          log << "step,edge_norm,binomial_squared_norm\n";
        }
        for (const auto& row : rows) {
          edge_dev = std::max(edge_dev, std::abs(row.edge_norm - rows.front().edge_norm));
          binomial_dev = std::max(binomial_dev, std::abs(row.binomial_squared_norm - rows.front().binomial_squared_norm) /
                                              rows.front().binomial_squared_norm);
          if (log) log << row.step << ',' << fmt("%.17g", row.edge_norm) << ',' << fmt("%.17g", row.binomial_squared_norm) << '\n';
        }
      }
    }
  }
  return {edge_dev <= 1e-10,
          fmt("edge-counting form drift %.2e (tol 1e-10); binomial-squared form %s (max relative change %.3g)",
              edge_dev, binomial_dev <= 1e-10 ? "conserved" : "NOT conserved", binomial_dev)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sqrw acceptance suite"};
  std::uint64_t seed = testing::kSeed;
  std::vector<std::string> expected_fail;
  std::string log_dir;
  app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--expected-fail", expected_fail, "criteria (e.g. AC6) known to fail");
  app.add_option("--log-dir", log_dir, "directory for the per-step conservation logs");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 unitarity", [&] { return unitarity(seed); }},
      {"AC2 reduced walk equals full walk", reduced_equals_full},
      {"AC3 hitting amplitude closed form", hitting_amplitude},
      {"AC4 classical comparison and ratio trend", classical_comparison},
      {"AC5 origin packet reflection (d=50)", origin_packet},
      {"AC6 layer-mean revivals (d=50)", revivals},
      {"AC7 circuit equivalence", circuit_equivalence},
      {"AC8 block diagonalization and symmetries", block_diagonalization},
      {"AC9 scattering with tails", scattering},
      {"AC10 interferometer amplitude", [&] { return interferometer(seed); }},
      {"AC11 search", search},
      {"AC12 conserved-quantity audit", [&] { return conservation_audit_check(log_dir); }},
  };
  const std::set<std::string> expected(expected_fail.begin(), expected_fail.end());
  std::set<std::string> failed;
  int passed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::string id = name.substr(0, name.find(' '));
    if (o.pass) {
      ++passed;
    } else {
      failed.insert(id);
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail
              << (!o.pass && expected.count(id) ? " [expected failure]" : "") << std::endl;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed" << std::endl;
  if (failed != expected) {
    for (const auto& id : expected) {
      if (!failed.count(id)) std::cout << id << " was expected to fail but passed" << std::endl;
    }
    return 1;
  }
  return 0;
}
