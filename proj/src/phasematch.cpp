#include "phasematch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "constants.hpp"
#include "error.hpp"

namespace qfc {

namespace {

constexpr double two_pi = 2.0 * constants::pi;

double require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << v;
    fail(errc::domain, os.str());
  }
  return v;
}

// Wave vector in rad/um.
double wave_vector(const DispersionModel& model, double lambda_nm,
                   double temp_c, bool allow_extrapolation) {
  const double lambda_um = lambda_nm * 1e-3;
  const double n = model.index(lambda_um, temp_c, allow_extrapolation);
  return two_pi * n / lambda_um;
}

// k_hi - k_lo - k_pump in rad/um, plus the cancellation floor of the sum.
struct MismatchParts {
  double delta_k;
  double noise_floor;
};

MismatchParts bulk_mismatch(const ProcessSpec& p, const DispersionModel& model,
                            double temp_c, bool allow_extrapolation) {
  const double k_in = wave_vector(model, p.lambda_in_nm, temp_c, allow_extrapolation);
  const double k_pump = wave_vector(model, p.lambda_pump_nm, temp_c, allow_extrapolation);
  const double k_out = wave_vector(model, p.lambda_out_nm, temp_c, allow_extrapolation);
  // The highest-frequency photon carries the grating momentum: the output
  // for SFG, the input for DFG.
  const double dk = p.kind == ProcessKind::Sfg ? k_out - k_in - k_pump
                                               : k_in - k_out - k_pump;
  const double mag = k_in + k_pump + k_out;
  return {dk, 64.0 * std::numeric_limits<double>::epsilon() * mag};
}

// Bracketed bisection; assumes fa*fb <= 0. tol_nm <= 0 bisects until the
// midpoint stops moving (double resolution).
template <class F>
double bisect(F&& f, double a, double b, double fa, double fb, double tol_nm) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) return m;
    if (tol_nm > 0.0 && (b - a) < tol_nm) return m;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) != (fm < 0.0)) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

ProcessSpec ProcessSpec::from_input_pump(ProcessKind kind, double lambda_in_nm,
                                         double lambda_pump_nm) {
  ProcessSpec p;
  p.kind = kind;
  p.lambda_in_nm = lambda_in_nm;
  p.lambda_pump_nm = lambda_pump_nm;
  p.lambda_out_nm = energy_match(kind, lambda_in_nm, lambda_pump_nm);
  return p;
}

void ProcessSpec::validate() const {
  require_positive(lambda_in_nm, "lambda_in_nm");
  require_positive(lambda_pump_nm, "lambda_pump_nm");
  require_positive(lambda_out_nm, "lambda_out_nm");
  const double sum = kind == ProcessKind::Sfg
                         ? 1.0 / lambda_in_nm + 1.0 / lambda_pump_nm
                         : 1.0 / lambda_in_nm - 1.0 / lambda_pump_nm;
  const double resid = std::abs(1.0 / lambda_out_nm - sum);
  if (resid > 1e-9 * std::abs(sum))
    fail(errc::domain, "process triple violates energy conservation");
}

void CrystalSpec::validate() const {
  require_positive(length_mm, "length_mm");
  require_positive(poling_period_um, "poling_period_um");
}

double energy_match(ProcessKind kind, double lambda_in_nm,
                    double lambda_pump_nm) {
  require_positive(lambda_in_nm, "lambda_in_nm");
  require_positive(lambda_pump_nm, "lambda_pump_nm");
  if (kind == ProcessKind::Sfg)
    return 1.0 / (1.0 / lambda_in_nm + 1.0 / lambda_pump_nm);
  const double inv_out = 1.0 / lambda_in_nm - 1.0 / lambda_pump_nm;
  if (!(inv_out > 0.0))
    fail(errc::domain,
         "DFG requires the input photon to carry more energy than the pump");
  return 1.0 / inv_out;
}

double phase_mismatch(const ProcessSpec& process, const CrystalSpec& crystal,
                      bool allow_extrapolation) {
  process.validate();
  crystal.validate();
  const MismatchParts parts = bulk_mismatch(process, crystal.model,
                                            crystal.temperature_c,
                                            allow_extrapolation);
  // rad/um -> rad/m
  return (parts.delta_k - two_pi / crystal.poling_period_um) * 1e6;
}

double qpm_period(const ProcessSpec& process, const DispersionModel& model,
                  double temperature_c, bool allow_extrapolation) {
  process.validate();
  const MismatchParts parts =
      bulk_mismatch(process, model, temperature_c, allow_extrapolation);
  if (parts.delta_k <= parts.noise_floor) {
    std::ostringstream os;
    os << "no forward first-order QPM: delta_k = " << parts.delta_k * 1e6
       << " rad/m is not positive";
    fail(errc::no_qpm, os.str());
  }
  return two_pi / parts.delta_k;
}

double phasematched_input_wavelength(const CrystalSpec& crystal,
                                     double lambda_pump_nm, ProcessKind kind,
                                     Interval bracket_nm,
                                     bool allow_extrapolation,
                                     const RootOptions& opts) {
  crystal.validate();
  require_positive(lambda_pump_nm, "lambda_pump_nm");
  if (!(bracket_nm.lo > 0.0) || !(bracket_nm.lo < bracket_nm.hi))
    fail(errc::domain, "bracket must be a positive non-empty interval");
  const int n = std::max(2, opts.prescan_samples);

  const auto dk_eff = [&](double lambda_in) {
    return phase_mismatch(
        ProcessSpec::from_input_pump(kind, lambda_in, lambda_pump_nm), crystal,
        allow_extrapolation);
  };

  // Coarse pre-scan: bracket the root and detect multiplicity.
  std::vector<double> x(n + 1), f(n + 1);
  const double step = (bracket_nm.hi - bracket_nm.lo) / n;
  for (int i = 0; i <= n; ++i) {
    x[i] = i == n ? bracket_nm.hi : bracket_nm.lo + i * step;
    f[i] = dk_eff(x[i]);
  }
  int first = -1, crossings = 0;
  for (int i = 0; i < n; ++i) {
    if (f[i] == 0.0 || (f[i] < 0.0) != (f[i + 1] < 0.0)) {
      ++crossings;
      if (first < 0) first = i;
    }
  }
  if (f[n] == 0.0 && f[n - 1] > 0.0) {
    // exact root at the upper endpoint, invisible to the sign-change test
    ++crossings;
    if (first < 0) first = n - 1;
  }
  if (crossings == 0) {
    std::ostringstream os;
    os << "delta_k_eff does not change sign over [" << bracket_nm.lo << ", "
       << bracket_nm.hi << "] nm";
    fail(errc::no_sign_change, os.str());
  }
  if (crossings > 1) {
    std::ostringstream os;
    os << "pre-scan found " << crossings << " phase-matched wavelengths in ["
       << bracket_nm.lo << ", " << bracket_nm.hi
       << "] nm; narrow the bracket to isolate one";
    fail(errc::multiple_roots, os.str());
  }
  return bisect(dk_eff, x[first], x[first + 1], f[first], f[first + 1],
                opts.tol_nm);
}

TuningSlopes tuning_slopes(const CrystalSpec& crystal, double lambda_pump_nm,
                           ProcessKind kind, Interval bracket_nm, double dt_k,
                           bool allow_extrapolation, const RootOptions& opts) {
  require_positive(dt_k, "dT_K");
  const auto root_at = [&](double temp_c) {
    CrystalSpec shifted = crystal;
    shifted.temperature_c = temp_c;
    return phasematched_input_wavelength(shifted, lambda_pump_nm, kind,
                                         bracket_nm, allow_extrapolation, opts);
  };

  TuningSlopes s;
  s.lambda_in_nm = root_at(crystal.temperature_c);
  s.lambda_out_nm = energy_match(kind, s.lambda_in_nm, lambda_pump_nm);
  const double lo_in = root_at(crystal.temperature_c - dt_k);
  const double hi_in = root_at(crystal.temperature_c + dt_k);
  const double lo_out = energy_match(kind, lo_in, lambda_pump_nm);
  const double hi_out = energy_match(kind, hi_in, lambda_pump_nm);
  s.dlambda_in_dt_nm_per_k = (hi_in - lo_in) / (2.0 * dt_k);
  s.dlambda_out_dt_nm_per_k = (hi_out - lo_out) / (2.0 * dt_k);

  const double mid_in = 0.5 * (lo_in + hi_in);
  const double mid_out = energy_match(kind, mid_in, lambda_pump_nm);
  const double r = mid_out / mid_in;
  s.ratio_analytic = r * r;
  return s;
}

std::vector<CurvePoint> phasematch_curve(const CrystalSpec& crystal,
                                         double lambda_pump_nm,
                                         ProcessKind kind, Interval range_nm,
                                         double step_nm,
                                         bool allow_extrapolation) {
  crystal.validate();
  require_positive(step_nm, "step_nm");
  if (!(range_nm.lo > 0.0) || !(range_nm.lo <= range_nm.hi))
    fail(errc::domain, "curve range must be a positive interval");

  const double half_length_m = 0.5 * crystal.length_mm * 1e-3;
  const auto dk_eff = [&](double lambda_in) {
    return phase_mismatch(
        ProcessSpec::from_input_pump(kind, lambda_in, lambda_pump_nm), crystal,
        allow_extrapolation);
  };

  const std::size_t count =
      static_cast<std::size_t>(
          std::floor((range_nm.hi - range_nm.lo) / step_nm + 1e-9)) + 1;
  std::vector<double> lambda(count), dk(count);
  for (std::size_t i = 0; i < count; ++i) {
    lambda[i] = range_nm.lo + static_cast<double>(i) * step_nm;
    dk[i] = dk_eff(lambda[i]);
  }

  // Solve any bracketed phase-matched wavelength to double resolution and
  // move the nearest sample onto it, so the curve carries the exact unit
  // peak while the row count stays floor((hi-lo)/step)+1.
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (dk[i] != 0.0 && (dk[i] < 0.0) == (dk[i + 1] < 0.0)) continue;
    const double root =
        dk[i] == 0.0 ? lambda[i]
                     : bisect(dk_eff, lambda[i], lambda[i + 1], dk[i],
                              dk[i + 1], 0.0);
    const std::size_t nearest =
        root - lambda[i] <= lambda[i + 1] - root ? i : i + 1;
    lambda[nearest] = root;
    dk[nearest] = dk_eff(root);
  }

  std::vector<CurvePoint> curve;
  curve.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double s = sinc(dk[i] * half_length_m);
    curve.push_back({lambda[i], s * s});
  }
  return curve;
}

}  // namespace qfc
