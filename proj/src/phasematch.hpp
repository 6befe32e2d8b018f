#pragma once

#include <vector>

#include "dispersion.hpp"

namespace qfc {

enum class ProcessKind { Sfg, Dfg };

// A three-wave mixing wavelength triple with energy conservation
// enforced: 1/lambda_out = 1/lambda_in +/- 1/lambda_pump (SFG/DFG).
struct ProcessSpec {
  ProcessKind kind = ProcessKind::Sfg;
  double lambda_in_nm = 0.0;
  double lambda_pump_nm = 0.0;
  double lambda_out_nm = 0.0;

  static ProcessSpec from_input_pump(ProcessKind kind, double lambda_in_nm,
                                     double lambda_pump_nm);
  // Checks positivity and energy conservation to 1e-9 relative.
  void validate() const;
};

struct CrystalSpec {
  double length_mm = 0.0;
  double poling_period_um = 0.0;
  double temperature_c = 0.0;
  DispersionModel model;

  void validate() const;
};

struct RootOptions {
  int prescan_samples = 200;  // coarse pre-scan for bracketing / multiplicity
  double tol_nm = 1e-4;       // bisection stops below this width; <= 0 means
                              // bisect to double resolution
};

// lambda_out from energy conservation. DFG requires omega_in > omega_pump.
double energy_match(ProcessKind kind, double lambda_in_nm,
                    double lambda_pump_nm);

// k_hi - k_lo - k_pump - 2*pi/Lambda in rad/m with k = 2*pi*n(lambda,T)/lambda.
// The highest-frequency photon of the triple (SFG output, DFG input) carries
// the grating momentum.
double phase_mismatch(const ProcessSpec& process, const CrystalSpec& crystal,
                      bool allow_extrapolation = false);

// First-order forward QPM period Lambda = 2*pi/delta_k, um. Fails with
// errc::no_qpm when delta_k <= 0 or is below the floating-point
// cancellation floor of the three k values.
double qpm_period(const ProcessSpec& process, const DispersionModel& model,
                  double temperature_c, bool allow_extrapolation = false);

// Root of delta_k_eff(lambda_in) = 0 inside the bracket, by bisection after
// a coarse pre-scan. Fails with errc::no_sign_change / errc::multiple_roots.
double phasematched_input_wavelength(const CrystalSpec& crystal,
                                     double lambda_pump_nm, ProcessKind kind,
                                     Interval bracket_nm,
                                     bool allow_extrapolation = false,
                                     const RootOptions& opts = {});

struct TuningSlopes {
  double dlambda_in_dt_nm_per_k = 0.0;
  double dlambda_out_dt_nm_per_k = 0.0;
  // (lambda_out/lambda_in)^2 evaluated at the midpoint of the two tuning
  // roots; equals the finite-difference dlambda_out/dlambda_in up to
  // O(dT^2) purely by energy conservation.
  double ratio_analytic = 0.0;
  double lambda_in_nm = 0.0;   // phase-matched input at the crystal temperature
  double lambda_out_nm = 0.0;
};

TuningSlopes tuning_slopes(const CrystalSpec& crystal, double lambda_pump_nm,
                           ProcessKind kind, Interval bracket_nm,
                           double dt_k = 1.0, bool allow_extrapolation = false,
                           const RootOptions& opts = {});

struct CurvePoint {
  double lambda_in_nm;
  double relative_efficiency;  // sinc^2(delta_k_eff * L / 2), in [0,1]
};

// Samples the plane-wave phase-matching curve on floor((hi-lo)/step)+1
// grid points. Any phase-matched wavelength bracketed by the grid is
// solved to machine precision and the nearest sample is moved onto it, so
// the curve contains its exact unit peak without changing the row count.
std::vector<CurvePoint> phasematch_curve(const CrystalSpec& crystal,
                                         double lambda_pump_nm,
                                         ProcessKind kind, Interval range_nm,
                                         double step_nm,
                                         bool allow_extrapolation = false);

// sin(x)/x with sinc(0) = 1.
double sinc(double x);

}  // namespace qfc
