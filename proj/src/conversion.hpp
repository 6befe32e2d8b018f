#pragma once

#include <cstddef>
#include <span>

namespace qfc {

// Phenomenological conversion-efficiency model. The pump amplitude and
// coupling constant of the interaction Hamiltonian are not separable from
// the data this toolkit ingests, so a single normalized efficiency
// eta_nor (per watt, per length squared) carries both:
//   eta(P) = eta_max * overlap * sin^2(L * sqrt(eta_nor * P)).
struct ConversionModel {
  double eta_nor_per_w_m2 = 0.0;
  double length_m = 0.0;
  double eta_max = 1.0;
  double overlap = 1.0;

  void validate() const;
};

struct BeamGeometry {
  double waist_pump_um = 0.0;   // 1/e^2 radius
  double waist_input_um = 0.0;  // 1/e^2 radius
};

// Area-ratio estimate of the input fraction covered by the pump:
// min(1, (w_pump/w_input)^2).
double beam_overlap_fraction(const BeamGeometry& geometry);

double efficiency_vs_power(const ConversionModel& model, double pump_power_w);

struct EfficiencyPoint {
  double pump_power_w;
  double eta_ext;
};

struct FitResult {
  ConversionModel model;
  double residual_norm = 0.0;  // sqrt of the summed squared residuals
  std::size_t points_used = 0;
};

// Single-parameter least-squares fit of eta_nor with length, overlap and
// eta_max held fixed. Golden-section search over the documented bracket
// [0, pi^2 / (4 L^2 P_min)]; deterministic for identical inputs.
FitResult fit_normalized_efficiency(std::span<const EfficiencyPoint> points,
                                    double length_m, double overlap,
                                    double eta_max);

}  // namespace qfc
