#pragma once

#include <vector>

namespace qfc {

enum class InputRegime { Cw, Pulsed };

struct PulseTrain {
  InputRegime regime = InputRegime::Cw;
  double tau_pump_s = 0.0;
  double rep_rate_hz = 0.0;
  double tau_input_s = 0.0;  // required (>= tau_pump_s) for pulsed input

  void validate() const;
};

struct DetectionChain {
  std::vector<double> component_transmissions;  // each in (0,1]
  double detector_efficiency = 1.0;             // in (0,1]
  double dead_time_s = 0.0;

  void validate() const;
};

struct CountRecord {
  double s_raw_hz = 0.0;
  double n_raw_hz = 0.0;

  void validate() const;
};

// Fraction of input light temporally overlapped with the pump.
// CW input: tau_pump * rep_rate; pulsed input: tau_pump / tau_input.
double duty_cycle(const PulseTrain& train);

// <n>_in = P * D * lambda / (h c), photons per second.
double mean_input_photon_rate(double power_w, double duty, double lambda_in_nm);

double photons_per_pulse(double rate_hz, double rep_rate_hz);

// Non-paralyzable correction raw / (1 - raw * T_D); errc::saturation when
// raw * T_D >= 1.
double dead_time_correct(double raw_hz, double dead_time_s);

double chain_loss(const DetectionChain& chain);

// eta_ext = (S - N) / (input_rate * eta_loss) with both rates dead-time
// corrected first.
double external_efficiency(const CountRecord& counts, double dead_time_s,
                           double input_rate_hz, double eta_loss);

// Dead-time corrected S/N; +infinity when the corrected noise is zero.
double snr(const CountRecord& counts, double dead_time_s);

double mu1(double n_per_pulse, double snr);

// delta_nu = c * delta_lambda / lambda^2
double bandwidth_nm_to_hz(double delta_lambda_nm, double center_lambda_nm);

// Broadband noise scales linearly with pulse duration and filter bandwidth.
double noise_rescale(double noise_per_pulse, double tau_old_s, double tau_new_s,
                     double bw_old_hz, double bw_new_hz);

}  // namespace qfc
