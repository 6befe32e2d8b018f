#include "conversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "constants.hpp"
#include "error.hpp"

namespace qfc {

namespace {

double sum_squared_residuals(const ConversionModel& model,
                             std::span<const EfficiencyPoint> points) {
  double ssr = 0.0;
  for (const auto& p : points) {
    const double r = efficiency_vs_power(model, p.pump_power_w) - p.eta_ext;
    ssr += r * r;
  }
  return ssr;
}

}  // namespace

void ConversionModel::validate() const {
  if (!(eta_nor_per_w_m2 >= 0.0))
    fail(errc::domain, "eta_nor must be non-negative");
  if (!(length_m > 0.0)) fail(errc::domain, "length_m must be positive");
  if (!(overlap >= 0.0 && overlap <= 1.0))
    fail(errc::domain, "overlap must lie in [0,1]");
  if (!(eta_max > 0.0 && eta_max <= 1.0))
    fail(errc::domain, "eta_max must lie in (0,1]");
}

double beam_overlap_fraction(const BeamGeometry& geometry) {
  if (!(geometry.waist_pump_um > 0.0) || !(geometry.waist_input_um > 0.0))
    fail(errc::domain, "beam waists must be positive");
  const double ratio = geometry.waist_pump_um / geometry.waist_input_um;
  return std::min(1.0, ratio * ratio);
}

double efficiency_vs_power(const ConversionModel& model, double pump_power_w) {
  model.validate();
  if (!(pump_power_w >= 0.0))
    fail(errc::domain, "pump power must be non-negative");
  const double arg =
      model.length_m * std::sqrt(model.eta_nor_per_w_m2 * pump_power_w);
  const double s = std::sin(arg);
  return model.eta_max * model.overlap * s * s;
}

FitResult fit_normalized_efficiency(std::span<const EfficiencyPoint> points,
                                    double length_m, double overlap,
                                    double eta_max) {
  ConversionModel base;
  base.length_m = length_m;
  base.overlap = overlap;
  base.eta_max = eta_max;
  base.validate();

  const double ceiling = eta_max * overlap;
  double p_min = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    if (!(p.pump_power_w >= 0.0))
      fail(errc::domain, "pump power must be non-negative");
    if (!(p.eta_ext >= 0.0))
      fail(errc::domain, "measured efficiency must be non-negative");
    if (p.eta_ext >= ceiling) {
      std::ostringstream os;
      os << "measured efficiency " << p.eta_ext
         << " reaches the eta_max*overlap ceiling " << ceiling
         << "; eta_nor is unconstrained";
      fail(errc::unfittable, os.str());
    }
    if (p.pump_power_w > 0.0) p_min = std::min(p_min, p.pump_power_w);
  }
  if (!std::isfinite(p_min))
    fail(errc::unfittable, "need at least one point with positive pump power");

  // Upper bracket: eta_nor where the smallest positive power reaches the
  // first conversion maximum.
  const double pi_half = 0.5 * constants::pi;
  const double bracket_hi = pi_half * pi_half / (length_m * length_m * p_min);

  const auto ssr_at = [&](double eta_nor) {
    ConversionModel m = base;
    m.eta_nor_per_w_m2 = eta_nor;
    return sum_squared_residuals(m, points);
  };

  // The residual is only unimodal in the small-signal regime; points with
  // larger powers fold over inside the documented bracket. A coarse scan
  // locates the global basin, golden section then polishes inside it.
  constexpr int kScan = 512;
  int best = 0;
  double best_ssr = ssr_at(0.0);
  for (int i = 1; i <= kScan; ++i) {
    const double ssr = ssr_at(bracket_hi * i / kScan);
    if (ssr < best_ssr) {
      best_ssr = ssr;
      best = i;
    }
  }
  double lo = bracket_hi * std::max(0, best - 1) / kScan;
  double hi = bracket_hi * std::min(kScan, best + 1) / kScan;

  // Golden-section search, run to double resolution.
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = ssr_at(c), fd = ssr_at(d);
  for (int i = 0; i < 400 && c < d; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = ssr_at(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = ssr_at(d);
    }
  }

  FitResult result;
  result.model = base;
  result.model.eta_nor_per_w_m2 = 0.5 * (lo + hi);
  result.residual_norm = std::sqrt(ssr_at(result.model.eta_nor_per_w_m2));
  result.points_used = points.size();
  return result;
}

}  // namespace qfc
