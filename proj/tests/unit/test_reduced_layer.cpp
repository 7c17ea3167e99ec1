#include <doctest.h>

#include <cmath>
#include <numeric>

#include "sqrw/full_evolution.hpp"
#include "sqrw/reduced_layer.hpp"
#include "support/oracles.hpp"

using namespace sqrw;

namespace {

double total(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("reduced step on d=2 by hand") {
  const auto c = grover_coeffs(2);
  LayerState s = origin_layer_state(2);
  s = reduced_step(s, c);
  CHECK(std::abs(s.up(1) - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(s.up(0)) == 0.0);
  CHECK(std::abs(s.down(1)) == 0.0);
  CHECK(std::abs(s.down(2)) == 0.0);
  s = reduced_step(s, c);
  CHECK(std::abs(s.down(2) - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(s.up(1)) == 0.0);
}

TEST_CASE("identity multiport reflects between neighbouring classes") {
  const MultiportCoeffs id{1.0, 0.0, 3};
  LayerState s(3);
  s.up(0) = 1.0;
  s = reduced_step(s, id);
  CHECK(s.down(1) == Complex(1.0));
  s = reduced_step(s, id);
  CHECK(s.up(0) == Complex(1.0));
  CHECK(s.down(1) == Complex(0.0));
}

TEST_CASE("reduced step rejects mismatched degree") {
  CHECK_THROWS_AS(reduced_step(LayerState(3), grover_coeffs(4)), ShapeError);
}

TEST_CASE("hitting amplitude closed form") {
  CHECK(std::abs(hitting_amplitude_closed_form(2, grover_coeffs(2)) - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(hitting_amplitude_closed_form(3, grover_coeffs(3)) - 8.0 / (9.0 * std::sqrt(3.0))) <= 1e-15);
  CHECK(std::abs(hitting_amplitude_closed_form(4, grover_coeffs(4)) - 0.375) <= 1e-15);
}

TEST_CASE("closed form matches the iterated recursion") {
  for (int d = 2; d <= 40; ++d) {
    for (const auto& c : {grover_coeffs(d), symmetric_coeffs(d, 1.0)}) {
      LayerState s = origin_layer_state(d);
      for (int n = 0; n < d; ++n) s = reduced_step(s, c);
      const Complex closed = hitting_amplitude_closed_form(d, c);
      CHECK(std::abs(s.down(d) - closed) <= 1e-10);
    }
  }
}

TEST_CASE("closed form matches the path enumeration") {
  for (int d = 2; d <= 6; ++d) {
    const auto c = grover_coeffs(d);
    const std::vector<Complex> gamma(static_cast<std::size_t>(d), 1.0 / std::sqrt(d));
    const Complex paths = testing::path_sum_hitting(d, c.r, c.t, gamma);
    CHECK(std::abs(paths - hitting_amplitude_closed_form(d, c)) <= 1e-12);
  }
}

TEST_CASE("classical walk") {
  CHECK(std::abs(classical_hitting_probability(2) - 0.5) <= 1e-15);
  CHECK(std::abs(classical_hitting_probability(3) - 2.0 / 9.0) <= 1e-15);
  CHECK(std::abs(classical_hitting_probability(4) - 0.09375) <= 1e-15);

  ClassicalLayerDist p = classical_origin_dist(2);
  p = classical_walk_step(p);
  CHECK(p.p == std::vector<double>{0.0, 1.0, 0.0});
  p = classical_walk_step(p);
  CHECK(p.p == std::vector<double>{0.5, 0.0, 0.5});

  for (int d = 1; d <= 12; ++d) {
    ClassicalLayerDist q = classical_origin_dist(d);
    for (int n = 0; n < d; ++n) {
      q = classical_walk_step(q);
      CHECK(std::abs(q.total() - 1.0) <= 1e-12);
    }
    CHECK(std::abs(q.p[static_cast<std::size_t>(d)] - classical_hitting_probability(d)) <= 1e-12);
    CHECK(std::abs(q.per_vertex(d) - testing::classical_corner_probability_bruteforce(d, d)) <= 1e-12);
  }
}

TEST_CASE("hitting ratio table") {
  const auto rows = hitting_ratio_table(20);
  REQUIRE(rows.size() == 19);
  CHECK(rows[0].d == 2);
  CHECK(std::abs(rows[0].ratio - 1.0) <= 1e-12);
  CHECK(std::abs(rows[1].ratio - 32.0 / 27.0) <= 1e-12);
  CHECK(std::abs(rows[2].ratio - 1.5) <= 1e-12);
  CHECK(std::abs(rows[1].p_quantum - 64.0 / 243.0) <= 1e-12);
  CHECK(std::abs(rows[2].p_quantum - 9.0 / 64.0) <= 1e-12);
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);
  CHECK_THROWS_AS(hitting_ratio_table(1), InvalidArgument);
}

TEST_CASE("initial layer states at d=50") {
  const auto c = grover_coeffs(50);
  SUBCASE("origin") {
    const auto series = layer_distribution_series(c, origin_layer_state(50), 0);
    REQUIRE(series.size() == 1);
    CHECK(std::abs(series[0][0] - 1.0) <= 1e-12);
  }
  SUBCASE("corners") {
    const auto series = layer_distribution_series(c, corners_layer_state(50), 0);
    CHECK(std::abs(series[0][0] - 0.5) <= 1e-12);
    CHECK(std::abs(series[0][50] - 0.5) <= 1e-12);
  }
  SUBCASE("middle") {
    const auto series = layer_distribution_series(c, middle_layer_state(50), 0);
    CHECK(std::abs(series[0][26] - 1.0) <= 1e-12);
  }
}

TEST_CASE("middle state exists for small d") {
  for (int d = 1; d <= 12; ++d) {
    CHECK(std::abs(middle_layer_state(d).edge_norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("edge-counting norm is conserved") {
  for (int d : {2, 3, 7, 20, 50, 120, 200}) {
    for (const auto& c : {grover_coeffs(d), symmetric_coeffs(d, 1.0), symmetric_coeffs(d, 1.3)}) {
      for (LayerInit init : {LayerInit::Origin, LayerInit::Corners, LayerInit::Middle}) {
        LayerState s = make_layer_state(init, d);
        double prev = s.edge_norm();
        for (int n = 0; n < 60; ++n) {
          s = reduced_step(s, c);
          const double now = s.edge_norm();
          CHECK(std::abs(now - prev) <= 1e-10);
          prev = now;
        }
      }
    }
  }
}

TEST_CASE("layer distribution rows sum to one") {
  const auto c = symmetric_coeffs(30, 1.0);
  const auto series = layer_distribution_series(c, corners_layer_state(30), 200);
  CHECK(series.size() == 201);
  for (const auto& row : series) CHECK(std::abs(total(row) - 1.0) <= 1e-10);
  LayerState bad(4);
  bad.up(0) = 1.0;
  CHECK_THROWS_AS(layer_distribution_series(grover_coeffs(4), bad, 3), InvalidArgument);
}

TEST_CASE("reduced coefficients track the full walk") {
  for (int d = 2; d <= 8; ++d) {
    const auto c = symmetric_coeffs(d, 1.0);
    const EvolutionConfig cfg(HypercubeDim(d), c);
    for (LayerInit init : {LayerInit::Origin, LayerInit::Corners, LayerInit::Middle}) {
      LayerState s = make_layer_state(init, d);
      FullState f = embed_layer_state(s, HypercubeDim(d));
      for (int n = 0; n < 30; ++n) {
        s = reduced_step(s, c);
        f = step(f, cfg);
        const LayerState back = read_layer_state(f);
        for (int w = 0; w < d; ++w) CHECK(std::abs(back.up(w) - s.up(w)) <= 1e-12);
        for (int w = 1; w <= d; ++w) CHECK(std::abs(back.down(w) - s.down(w)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("conservation audit reports both forms") {
  const auto rows = conservation_audit(grover_coeffs(4), origin_layer_state(4), 10);
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) CHECK(std::abs(row.edge_norm - 1.0) <= 1e-12);
  CHECK(std::abs(rows[0].binomial_squared_norm - 0.25) <= 1e-15);
  CHECK(layer_mean({0.5, 0.0, 0.5}) == 1.0);
}
