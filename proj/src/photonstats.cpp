#include "photonstats.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "constants.hpp"
#include "error.hpp"

namespace qfc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) fail(errc::domain, msg);
}

}  // namespace

void PulseTrain::validate() const {
  require(tau_pump_s > 0.0, "tau_pump_s must be positive");
  require(rep_rate_hz > 0.0, "rep_rate_hz must be positive");
  require(tau_pump_s * rep_rate_hz <= 1.0,
          "pump pulses overlap: tau_pump * rep_rate > 1");
  if (regime == InputRegime::Pulsed)
    require(tau_input_s >= tau_pump_s,
            "pulsed input requires tau_input >= tau_pump");
}

void DetectionChain::validate() const {
  for (double t : component_transmissions)
    require(t > 0.0 && t <= 1.0, "component transmission must lie in (0,1]");
  require(detector_efficiency > 0.0 && detector_efficiency <= 1.0,
          "detector efficiency must lie in (0,1]");
  require(dead_time_s >= 0.0, "dead time must be non-negative");
}

void CountRecord::validate() const {
  require(s_raw_hz >= 0.0 && n_raw_hz >= 0.0, "count rates must be non-negative");
}

double duty_cycle(const PulseTrain& train) {
  train.validate();
  if (train.regime == InputRegime::Cw)
    return train.tau_pump_s * train.rep_rate_hz;
  return train.tau_pump_s / train.tau_input_s;
}

double mean_input_photon_rate(double power_w, double duty,
                              double lambda_in_nm) {
  require(power_w >= 0.0, "input power must be non-negative");
  require(duty > 0.0 && duty <= 1.0, "duty cycle must lie in (0,1]");
  require(lambda_in_nm > 0.0, "wavelength must be positive");
  return power_w * duty * (lambda_in_nm * 1e-9) / constants::hc_J_m;
}

double photons_per_pulse(double rate_hz, double rep_rate_hz) {
  require(rate_hz >= 0.0, "rate must be non-negative");
  require(rep_rate_hz > 0.0, "rep_rate_hz must be positive");
  return rate_hz / rep_rate_hz;
}

double dead_time_correct(double raw_hz, double dead_time_s) {
  require(raw_hz >= 0.0, "raw rate must be non-negative");
  require(dead_time_s >= 0.0, "dead time must be non-negative");
  const double occupancy = raw_hz * dead_time_s;
  if (occupancy >= 1.0) {
    std::ostringstream os;
    os << "raw rate " << raw_hz << " Hz saturates a detector with dead time "
       << dead_time_s << " s (S_raw*T_D = " << occupancy << ")";
    fail(errc::saturation, os.str());
  }
  return raw_hz / (1.0 - occupancy);
}

double chain_loss(const DetectionChain& chain) {
  chain.validate();
  double eta = chain.detector_efficiency;
  for (double t : chain.component_transmissions) eta *= t;
  return eta;
}

double external_efficiency(const CountRecord& counts, double dead_time_s,
                           double input_rate_hz, double eta_loss) {
  counts.validate();
  require(input_rate_hz > 0.0, "input photon rate must be positive");
  require(eta_loss > 0.0 && eta_loss <= 1.0, "eta_loss must lie in (0,1]");
  const double s = dead_time_correct(counts.s_raw_hz, dead_time_s);
  const double n = dead_time_correct(counts.n_raw_hz, dead_time_s);
  if (s < n)
    fail(errc::nonphysical,
         "corrected signal rate is below the corrected noise rate");
  return (s - n) / (input_rate_hz * eta_loss);
}

double snr(const CountRecord& counts, double dead_time_s) {
  counts.validate();
  const double s = dead_time_correct(counts.s_raw_hz, dead_time_s);
  const double n = dead_time_correct(counts.n_raw_hz, dead_time_s);
  if (n == 0.0) return std::numeric_limits<double>::infinity();
  return s / n;
}

double mu1(double n_per_pulse, double snr) {
  require(n_per_pulse >= 0.0, "photon number must be non-negative");
  require(snr > 0.0, "SNR must be positive");
  return n_per_pulse / snr;
}

double bandwidth_nm_to_hz(double delta_lambda_nm, double center_lambda_nm) {
  require(delta_lambda_nm >= 0.0, "bandwidth must be non-negative");
  require(center_lambda_nm > 0.0, "center wavelength must be positive");
  const double lambda_m = center_lambda_nm * 1e-9;
  return constants::speed_of_light_m_s * (delta_lambda_nm * 1e-9) /
         (lambda_m * lambda_m);
}

double noise_rescale(double noise_per_pulse, double tau_old_s, double tau_new_s,
                     double bw_old_hz, double bw_new_hz) {
  require(noise_per_pulse >= 0.0, "noise must be non-negative");
  require(tau_old_s > 0.0 && tau_new_s > 0.0, "pulse durations must be positive");
  require(bw_old_hz > 0.0 && bw_new_hz > 0.0, "bandwidths must be positive");
  return noise_per_pulse * (tau_new_s / tau_old_s) * (bw_new_hz / bw_old_hz);
}

}  // namespace qfc
