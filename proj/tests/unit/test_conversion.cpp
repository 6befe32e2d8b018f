#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "constants.hpp"
#include "conversion.hpp"
#include "error.hpp"

using namespace qfc;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a qfc::Error");
  return errc::domain;
}

}  // namespace

TEST_CASE("beam overlap fractions of the two interface configurations") {
  // pump waist 43.2 um against the 63.3 um (up-) and 112 um (down-)
  // conversion input waists
  CHECK(beam_overlap_fraction({43.2, 63.3}) ==
        doctest::Approx(0.466).epsilon(0.001 / 0.466));
  CHECK(beam_overlap_fraction({43.2, 112.0}) ==
        doctest::Approx(0.149).epsilon(0.001 / 0.149));
  CHECK(beam_overlap_fraction({43.2, 43.2}) == 1.0);
  CHECK(beam_overlap_fraction({100.0, 43.2}) == 1.0);  // clamped
  CHECK(code_of([] { beam_overlap_fraction({0.0, 43.2}); }) == errc::domain);
}

TEST_CASE("efficiency_vs_power endpoints") {
  ConversionModel m;
  m.length_m = 0.01997;
  m.eta_nor_per_w_m2 = 3000.0;
  CHECK(efficiency_vs_power(m, 0.0) == 0.0);

  // first conversion maximum: L*sqrt(eta_nor*P) = pi/2
  const double p_peak = constants::pi * constants::pi /
                        (4.0 * m.length_m * m.length_m * m.eta_nor_per_w_m2);
  CHECK(efficiency_vs_power(m, p_peak) == doctest::Approx(1.0).epsilon(1e-12));

  m.overlap = 0.466;
  m.eta_max = 0.9;
  CHECK(efficiency_vs_power(m, p_peak) ==
        doctest::Approx(0.466 * 0.9).epsilon(1e-12));
  CHECK(code_of([&] { efficiency_vs_power(m, -1.0); }) == errc::domain);
}

TEST_CASE("efficiency is monotone up to the first peak and bounded") {
  ConversionModel m;
  m.length_m = 0.01997;
  m.eta_nor_per_w_m2 = 3000.0;
  m.overlap = 0.8;
  const double p_peak = constants::pi * constants::pi /
                        (4.0 * m.length_m * m.length_m * m.eta_nor_per_w_m2);
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double eta = efficiency_vs_power(m, p_peak * i / 100.0);
    CHECK(eta > prev);
    CHECK(eta <= m.eta_max * m.overlap);
    prev = eta;
  }
}

TEST_CASE("small-signal regime is linear to 0.5%") {
  ConversionModel m;
  m.length_m = 0.01997;
  m.eta_nor_per_w_m2 = 3000.0;
  // L*sqrt(eta_nor*P) < 0.1  =>  P < 0.01/(L^2 eta_nor)
  const double p_max = 0.01 / (m.length_m * m.length_m * m.eta_nor_per_w_m2);
  const double slope_lo = efficiency_vs_power(m, p_max * 1e-3) / (p_max * 1e-3);
  const double slope_hi = efficiency_vs_power(m, p_max) / p_max;
  CHECK(std::abs(slope_hi - slope_lo) / slope_lo < 0.005);
}

TEST_CASE("single-point fit is exact") {
  const std::vector<EfficiencyPoint> pts = {{0.180, 0.094}};
  const auto fit = fit_normalized_efficiency(pts, 0.01997, 0.466, 1.0);
  CHECK(fit.points_used == 1);
  CHECK(fit.residual_norm < 1e-12);
  CHECK(efficiency_vs_power(fit.model, 0.180) ==
        doctest::Approx(0.094).epsilon(1e-9));

  // linear-regime extrapolation to 120 mW lands near the 6% the down-
  // conversion run saw at that pump power
  const double eta_120 = efficiency_vs_power(fit.model, 0.120);
  CHECK(eta_120 == doctest::Approx(0.0642147).epsilon(1e-5));
}

TEST_CASE("noise-free synthetic points recover eta_nor") {
  ConversionModel truth;
  truth.length_m = 0.01997;
  truth.eta_nor_per_w_m2 = 2500.0;
  truth.overlap = 0.466;
  std::vector<EfficiencyPoint> pts;
  for (double p = 0.02; p <= 0.20001; p += 0.02)
    pts.push_back({p, efficiency_vs_power(truth, p)});
  const auto fit = fit_normalized_efficiency(pts, truth.length_m, truth.overlap,
                                             truth.eta_max);
  CHECK(fit.model.eta_nor_per_w_m2 ==
        doctest::Approx(truth.eta_nor_per_w_m2).epsilon(1e-6));
}

TEST_CASE("fit recovers eta_nor from 1% multiplicative noise") {
  ConversionModel truth;
  truth.length_m = 0.01997;
  truth.eta_nor_per_w_m2 = 2500.0;
  truth.overlap = 0.466;
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  std::vector<EfficiencyPoint> pts;
  for (double p = 0.02; p <= 0.20001; p += 0.02)
    pts.push_back({p, efficiency_vs_power(truth, p) * (1.0 + noise(rng))});
  const auto fit = fit_normalized_efficiency(pts, truth.length_m, truth.overlap,
                                             truth.eta_max);
  CHECK(std::abs(fit.model.eta_nor_per_w_m2 - truth.eta_nor_per_w_m2) /
            truth.eta_nor_per_w_m2 <
        0.05);
  CHECK(fit.residual_norm > 0.0);
}

TEST_CASE("fit idempotence") {
  const std::vector<EfficiencyPoint> measured = {
      {0.06, 0.031}, {0.12, 0.060}, {0.18, 0.094}};
  const auto first = fit_normalized_efficiency(measured, 0.01997, 0.466, 1.0);
  std::vector<EfficiencyPoint> regenerated;
  for (const auto& p : measured)
    regenerated.push_back(
        {p.pump_power_w, efficiency_vs_power(first.model, p.pump_power_w)});
  const auto second =
      fit_normalized_efficiency(regenerated, 0.01997, 0.466, 1.0);
  CHECK(second.model.eta_nor_per_w_m2 ==
        doctest::Approx(first.model.eta_nor_per_w_m2).epsilon(1e-9));
}

TEST_CASE("fit is deterministic") {
  const std::vector<EfficiencyPoint> pts = {{0.06, 0.031}, {0.18, 0.094}};
  const auto a = fit_normalized_efficiency(pts, 0.01997, 0.466, 1.0);
  const auto b = fit_normalized_efficiency(pts, 0.01997, 0.466, 1.0);
  CHECK(a.model.eta_nor_per_w_m2 == b.model.eta_nor_per_w_m2);
  CHECK(a.residual_norm == b.residual_norm);
}

TEST_CASE("unfittable inputs are rejected") {
  CHECK(code_of([] {
          fit_normalized_efficiency(std::vector<EfficiencyPoint>{{0.0, 0.0}},
                                    0.01997, 0.466, 1.0);
        }) == errc::unfittable);
  CHECK(code_of([] {
          fit_normalized_efficiency(std::vector<EfficiencyPoint>{},
                                    0.01997, 0.466, 1.0);
        }) == errc::unfittable);
  // efficiency at the overlap ceiling cannot constrain eta_nor
  CHECK(code_of([] {
          fit_normalized_efficiency(
              std::vector<EfficiencyPoint>{{0.18, 0.466}}, 0.01997, 0.466,
              1.0);
        }) == errc::unfittable);
  CHECK(code_of([] {
          fit_normalized_efficiency(
              std::vector<EfficiencyPoint>{{0.18, -0.01}}, 0.01997, 0.466,
              1.0);
        }) == errc::domain);
}
