#include "qfc/qfc.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "conversion.hpp"
#include "dispersion.hpp"
#include "error.hpp"
#include "netlink.hpp"
#include "phasematch.hpp"
#include "photonstats.hpp"

// Glue between the public C interface and the C++ core: opaque handles own
// the C++ objects, exceptions become status codes, and the detail message
// of the last failure is kept per thread.

struct qfc_model {
  qfc::DispersionModel impl;
};

struct qfc_crystal {
  qfc::CrystalSpec impl;  // holds its own copy of the dispersion model
};

namespace {

thread_local std::string g_last_error;

qfc_status to_status(qfc::errc code) {
  switch (code) {
    case qfc::errc::io: return QFC_E_IO;
    case qfc::errc::parse: return QFC_E_PARSE;
    case qfc::errc::arity_mismatch: return QFC_E_ARITY;
    case qfc::errc::invalid_interval: return QFC_E_INTERVAL;
    case qfc::errc::out_of_validity: return QFC_E_VALIDITY;
    case qfc::errc::domain: return QFC_E_DOMAIN;
    case qfc::errc::no_qpm: return QFC_E_NO_QPM;
    case qfc::errc::no_sign_change: return QFC_E_NO_SIGN_CHANGE;
    case qfc::errc::multiple_roots: return QFC_E_MULTIPLE_ROOTS;
    case qfc::errc::saturation: return QFC_E_SATURATION;
    case qfc::errc::nonphysical: return QFC_E_NONPHYSICAL;
    case qfc::errc::unfittable: return QFC_E_UNFITTABLE;
    case qfc::errc::no_crossover: return QFC_E_NO_CROSSOVER;
  }
  return QFC_E_INTERNAL;
}

// Runs fn, mapping qfc::Error to its status code.
template <class Fn>
qfc_status guarded(Fn&& fn) {
  try {
    fn();
    return QFC_OK;
  } catch (const qfc::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QFC_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QFC_E_INTERNAL;
  }
}

qfc_status null_arg(const char* name) {
  g_last_error = std::string(name) + " must not be NULL";
  return QFC_E_NULLPTR;
}

qfc::ProcessKind to_kind(qfc_process_kind k) {
  return k == QFC_SFG ? qfc::ProcessKind::Sfg : qfc::ProcessKind::Dfg;
}

qfc::Topology to_topology(qfc_link_case c) {
  switch (c) {
    case QFC_CASE_A: return qfc::Topology::CaseA;
    case QFC_CASE_B: return qfc::Topology::CaseB;
    default: return qfc::Topology::CaseC;
  }
}

qfc::LinkScenario to_scenario(const qfc_link_scenario& s) {
  qfc::LinkScenario out;
  out.topology = to_topology(s.topology);
  out.distance_km = s.distance_km;
  out.alpha_blue_db_per_km = s.alpha_blue_db_per_km;
  out.alpha_ir_db_per_km = s.alpha_ir_db_per_km;
  out.eta_down = s.eta_down;
  out.eta_up = s.eta_up;
  return out;
}

qfc::ConversionModel to_conversion(const qfc_conversion_model& m) {
  qfc::ConversionModel out;
  out.eta_nor_per_w_m2 = m.eta_nor_per_w_m2;
  out.length_m = m.length_m;
  out.eta_max = m.eta_max;
  out.overlap = m.overlap;
  return out;
}

}  // namespace

extern "C" {

const char* qfc_status_name(qfc_status s) {
  switch (s) {
    case QFC_OK: return "QFC_OK";
    case QFC_E_NULLPTR: return "QFC_E_NULLPTR";
    case QFC_E_IO: return "QFC_E_IO";
    case QFC_E_PARSE: return "QFC_E_PARSE";
    case QFC_E_ARITY: return "QFC_E_ARITY";
    case QFC_E_INTERVAL: return "QFC_E_INTERVAL";
    case QFC_E_VALIDITY: return "QFC_E_VALIDITY";
    case QFC_E_DOMAIN: return "QFC_E_DOMAIN";
    case QFC_E_NO_QPM: return "QFC_E_NO_QPM";
    case QFC_E_NO_SIGN_CHANGE: return "QFC_E_NO_SIGN_CHANGE";
    case QFC_E_MULTIPLE_ROOTS: return "QFC_E_MULTIPLE_ROOTS";
    case QFC_E_SATURATION: return "QFC_E_SATURATION";
    case QFC_E_NONPHYSICAL: return "QFC_E_NONPHYSICAL";
    case QFC_E_UNFITTABLE: return "QFC_E_UNFITTABLE";
    case QFC_E_NO_CROSSOVER: return "QFC_E_NO_CROSSOVER";
    case QFC_E_INTERNAL: return "QFC_E_INTERNAL";
  }
  return "QFC_E_UNKNOWN";
}

const char* qfc_last_error(void) { return g_last_error.c_str(); }

const char* qfc_version(void) { return "0.1.0"; }

/* ---- dispersion ---- */

qfc_status qfc_model_load(const char* path, qfc_model** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto handle = new qfc_model{qfc::DispersionModel::load(path)};
    *out = handle;
  });
}

void qfc_model_free(qfc_model* m) { delete m; }

const char* qfc_model_name(const qfc_model* m) {
  return m ? m->impl.name().c_str() : "";
}

qfc_status qfc_model_validity(const qfc_model* m, double* wl_lo_um,
                              double* wl_hi_um, double* temp_lo_c,
                              double* temp_hi_c) {
  if (!m) return null_arg("model");
  if (wl_lo_um) *wl_lo_um = m->impl.wavelength_validity_um().lo;
  if (wl_hi_um) *wl_hi_um = m->impl.wavelength_validity_um().hi;
  if (temp_lo_c) *temp_lo_c = m->impl.temperature_validity_c().lo;
  if (temp_hi_c) *temp_hi_c = m->impl.temperature_validity_c().hi;
  return QFC_OK;
}

qfc_status qfc_model_in_validity(const qfc_model* m, double lambda_um,
                                 double temp_c, int* inside) {
  if (!m) return null_arg("model");
  if (!inside) return null_arg("inside");
  *inside = m->impl.in_validity(lambda_um, temp_c) ? 1 : 0;
  return QFC_OK;
}

qfc_status qfc_refractive_index(const qfc_model* m, double lambda_um,
                                double temp_c, int allow_extrapolation,
                                double* n) {
  if (!m) return null_arg("model");
  if (!n) return null_arg("n");
  return guarded([&] {
    *n = m->impl.index(lambda_um, temp_c, allow_extrapolation != 0);
  });
}

/* ---- phase matching ---- */

qfc_status qfc_energy_match(qfc_process_kind kind, double lambda_in_nm,
                            double lambda_pump_nm, double* lambda_out_nm) {
  if (!lambda_out_nm) return null_arg("lambda_out_nm");
  return guarded([&] {
    *lambda_out_nm = qfc::energy_match(to_kind(kind), lambda_in_nm,
                                       lambda_pump_nm);
  });
}

qfc_status qfc_crystal_create(const qfc_model* m, double length_mm,
                              double poling_period_um, double temperature_c,
                              qfc_crystal** out) {
  if (!m) return null_arg("model");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    qfc::CrystalSpec spec;
    spec.length_mm = length_mm;
    spec.poling_period_um = poling_period_um;
    spec.temperature_c = temperature_c;
    spec.model = m->impl;
    spec.validate();
    *out = new qfc_crystal{std::move(spec)};
  });
}

void qfc_crystal_free(qfc_crystal* c) { delete c; }

qfc_status qfc_phase_mismatch(const qfc_crystal* c, qfc_process_kind kind,
                              double lambda_in_nm, double lambda_pump_nm,
                              int allow_extrapolation,
                              double* delta_k_eff_rad_m) {
  if (!c) return null_arg("crystal");
  if (!delta_k_eff_rad_m) return null_arg("delta_k_eff_rad_m");
  return guarded([&] {
    const auto process = qfc::ProcessSpec::from_input_pump(
        to_kind(kind), lambda_in_nm, lambda_pump_nm);
    *delta_k_eff_rad_m =
        qfc::phase_mismatch(process, c->impl, allow_extrapolation != 0);
  });
}

qfc_status qfc_qpm_period(const qfc_model* m, qfc_process_kind kind,
                          double lambda_in_nm, double lambda_pump_nm,
                          double temperature_c, int allow_extrapolation,
                          double* period_um) {
  if (!m) return null_arg("model");
  if (!period_um) return null_arg("period_um");
  return guarded([&] {
    const auto process = qfc::ProcessSpec::from_input_pump(
        to_kind(kind), lambda_in_nm, lambda_pump_nm);
    *period_um = qfc::qpm_period(process, m->impl, temperature_c,
                                 allow_extrapolation != 0);
  });
}

qfc_status qfc_phasematched_input(const qfc_crystal* c, double lambda_pump_nm,
                                  qfc_process_kind kind, double bracket_lo_nm,
                                  double bracket_hi_nm,
                                  int allow_extrapolation,
                                  double* lambda_in_nm) {
  if (!c) return null_arg("crystal");
  if (!lambda_in_nm) return null_arg("lambda_in_nm");
  return guarded([&] {
    *lambda_in_nm = qfc::phasematched_input_wavelength(
        c->impl, lambda_pump_nm, to_kind(kind),
        {bracket_lo_nm, bracket_hi_nm}, allow_extrapolation != 0);
  });
}

qfc_status qfc_tuning_slopes_get(const qfc_crystal* c, double lambda_pump_nm,
                                 qfc_process_kind kind, double bracket_lo_nm,
                                 double bracket_hi_nm, double dt_k,
                                 int allow_extrapolation,
                                 qfc_tuning_slopes* out) {
  if (!c) return null_arg("crystal");
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto s = qfc::tuning_slopes(c->impl, lambda_pump_nm, to_kind(kind),
                                      {bracket_lo_nm, bracket_hi_nm}, dt_k,
                                      allow_extrapolation != 0);
    out->dlambda_in_dt_nm_per_k = s.dlambda_in_dt_nm_per_k;
    out->dlambda_out_dt_nm_per_k = s.dlambda_out_dt_nm_per_k;
    out->ratio_analytic = s.ratio_analytic;
    out->lambda_in_nm = s.lambda_in_nm;
    out->lambda_out_nm = s.lambda_out_nm;
  });
}

qfc_status qfc_phasematch_curve(const qfc_crystal* c, double lambda_pump_nm,
                                qfc_process_kind kind, double lambda_lo_nm,
                                double lambda_hi_nm, double step_nm,
                                int allow_extrapolation, double** lambda_nm,
                                double** relative_efficiency, size_t* count) {
  if (!c) return null_arg("crystal");
  if (!lambda_nm) return null_arg("lambda_nm");
  if (!relative_efficiency) return null_arg("relative_efficiency");
  if (!count) return null_arg("count");
  *lambda_nm = nullptr;
  *relative_efficiency = nullptr;
  *count = 0;
  return guarded([&] {
    const auto curve = qfc::phasematch_curve(
        c->impl, lambda_pump_nm, to_kind(kind), {lambda_lo_nm, lambda_hi_nm},
        step_nm, allow_extrapolation != 0);
    auto xs = std::make_unique<double[]>(curve.size());
    auto ys = std::make_unique<double[]>(curve.size());
    for (size_t i = 0; i < curve.size(); ++i) {
      xs[i] = curve[i].lambda_in_nm;
      ys[i] = curve[i].relative_efficiency;
    }
    *lambda_nm = xs.release();
    *relative_efficiency = ys.release();
    *count = curve.size();
  });
}

void qfc_buffer_free(double* buf) { delete[] buf; }

/* ---- conversion ---- */

qfc_status qfc_beam_overlap_fraction(double waist_pump_um,
                                     double waist_input_um, double* fraction) {
  if (!fraction) return null_arg("fraction");
  return guarded([&] {
    *fraction = qfc::beam_overlap_fraction({waist_pump_um, waist_input_um});
  });
}

qfc_status qfc_efficiency_vs_power(const qfc_conversion_model* m,
                                   double pump_power_w, double* eta_ext) {
  if (!m) return null_arg("model");
  if (!eta_ext) return null_arg("eta_ext");
  return guarded([&] {
    *eta_ext = qfc::efficiency_vs_power(to_conversion(*m), pump_power_w);
  });
}

qfc_status qfc_fit_normalized_efficiency(const double* pump_power_w,
                                         const double* eta_ext, size_t count,
                                         double length_m, double overlap,
                                         double eta_max,
                                         qfc_conversion_model* out,
                                         double* residual_norm) {
  if (!pump_power_w) return null_arg("pump_power_w");
  if (!eta_ext) return null_arg("eta_ext");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::vector<qfc::EfficiencyPoint> points(count);
    for (size_t i = 0; i < count; ++i)
      points[i] = {pump_power_w[i], eta_ext[i]};
    const auto fit =
        qfc::fit_normalized_efficiency(points, length_m, overlap, eta_max);
    out->eta_nor_per_w_m2 = fit.model.eta_nor_per_w_m2;
    out->length_m = fit.model.length_m;
    out->eta_max = fit.model.eta_max;
    out->overlap = fit.model.overlap;
    if (residual_norm) *residual_norm = fit.residual_norm;
  });
}

/* ---- single-photon metrology ---- */

qfc_status qfc_duty_cycle(qfc_input_regime regime, double tau_pump_s,
                          double rep_rate_hz, double tau_input_s,
                          double* duty) {
  if (!duty) return null_arg("duty");
  return guarded([&] {
    qfc::PulseTrain train;
    train.regime = regime == QFC_INPUT_CW ? qfc::InputRegime::Cw
                                          : qfc::InputRegime::Pulsed;
    train.tau_pump_s = tau_pump_s;
    train.rep_rate_hz = rep_rate_hz;
    train.tau_input_s = tau_input_s;
    *duty = qfc::duty_cycle(train);
  });
}

qfc_status qfc_mean_input_photon_rate(double power_w, double duty,
                                      double lambda_in_nm, double* rate_hz) {
  if (!rate_hz) return null_arg("rate_hz");
  return guarded([&] {
    *rate_hz = qfc::mean_input_photon_rate(power_w, duty, lambda_in_nm);
  });
}

qfc_status qfc_photons_per_pulse(double rate_hz, double rep_rate_hz,
                                 double* n_per_pulse) {
  if (!n_per_pulse) return null_arg("n_per_pulse");
  return guarded(
      [&] { *n_per_pulse = qfc::photons_per_pulse(rate_hz, rep_rate_hz); });
}

qfc_status qfc_dead_time_correct(double raw_hz, double dead_time_s,
                                 double* corrected_hz) {
  if (!corrected_hz) return null_arg("corrected_hz");
  return guarded(
      [&] { *corrected_hz = qfc::dead_time_correct(raw_hz, dead_time_s); });
}

qfc_status qfc_chain_loss(const double* transmissions, size_t count,
                          double detector_efficiency, double* eta_loss) {
  if (count > 0 && !transmissions) return null_arg("transmissions");
  if (!eta_loss) return null_arg("eta_loss");
  return guarded([&] {
    qfc::DetectionChain chain;
    chain.component_transmissions.assign(transmissions, transmissions + count);
    chain.detector_efficiency = detector_efficiency;
    *eta_loss = qfc::chain_loss(chain);
  });
}

qfc_status qfc_external_efficiency(double s_raw_hz, double n_raw_hz,
                                   double dead_time_s, double input_rate_hz,
                                   double eta_loss, double* eta_ext) {
  if (!eta_ext) return null_arg("eta_ext");
  return guarded([&] {
    *eta_ext = qfc::external_efficiency({s_raw_hz, n_raw_hz}, dead_time_s,
                                        input_rate_hz, eta_loss);
  });
}

qfc_status qfc_snr(double s_raw_hz, double n_raw_hz, double dead_time_s,
                   double* snr) {
  if (!snr) return null_arg("snr");
  return guarded(
      [&] { *snr = qfc::snr({s_raw_hz, n_raw_hz}, dead_time_s); });
}

qfc_status qfc_mu1(double n_per_pulse, double snr, double* mu1) {
  if (!mu1) return null_arg("mu1");
  return guarded([&] { *mu1 = qfc::mu1(n_per_pulse, snr); });
}

qfc_status qfc_bandwidth_nm_to_hz(double delta_lambda_nm,
                                  double center_lambda_nm,
                                  double* delta_nu_hz) {
  if (!delta_nu_hz) return null_arg("delta_nu_hz");
  return guarded([&] {
    *delta_nu_hz = qfc::bandwidth_nm_to_hz(delta_lambda_nm, center_lambda_nm);
  });
}

qfc_status qfc_noise_rescale(double noise_per_pulse, double tau_old_s,
                             double tau_new_s, double bw_old_hz,
                             double bw_new_hz, double* projected) {
  if (!projected) return null_arg("projected");
  return guarded([&] {
    *projected = qfc::noise_rescale(noise_per_pulse, tau_old_s, tau_new_s,
                                    bw_old_hz, bw_new_hz);
  });
}

/* ---- network link budget ---- */

qfc_status qfc_fiber_transmission(double alpha_db_per_km, double length_km,
                                  double* fraction) {
  if (!fraction) return null_arg("fraction");
  return guarded(
      [&] { *fraction = qfc::fiber_transmission(alpha_db_per_km, length_km); });
}

qfc_status qfc_scenario_success(const qfc_link_scenario* s,
                                double* probability) {
  if (!s) return null_arg("scenario");
  if (!probability) return null_arg("probability");
  return guarded(
      [&] { *probability = qfc::scenario_success(to_scenario(*s)); });
}

qfc_status qfc_scenario_success_log10(const qfc_link_scenario* s,
                                      double* log10_probability) {
  if (!s) return null_arg("scenario");
  if (!log10_probability) return null_arg("log10_probability");
  return guarded([&] {
    *log10_probability = qfc::scenario_success_log10(to_scenario(*s));
  });
}

qfc_status qfc_improvement_orders(const qfc_link_scenario* a,
                                  const qfc_link_scenario* c, double* orders) {
  if (!a || !c) return null_arg("scenario");
  if (!orders) return null_arg("orders");
  return guarded([&] {
    *orders = qfc::improvement_orders(to_scenario(*a), to_scenario(*c));
  });
}

qfc_status qfc_crossover_distance(const qfc_link_scenario* scenario,
                                  double* distance_km) {
  if (!scenario) return null_arg("scenario");
  if (!distance_km) return null_arg("distance_km");
  return guarded([&] {
    *distance_km = qfc::crossover_distance_km(to_scenario(*scenario));
  });
}

qfc_status qfc_scenario_sweep(const qfc_link_scenario* scenario,
                              const double* distances_km, size_t count,
                              double* p_a, double* p_b, double* p_c,
                              double* log10_p_a, double* log10_p_b,
                              double* log10_p_c) {
  if (!scenario) return null_arg("scenario");
  if (count > 0 && !distances_km) return null_arg("distances_km");
  return guarded([&] {
    const auto rows = qfc::scenario_sweep(
        to_scenario(*scenario), std::span<const double>(distances_km, count));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (p_a) p_a[i] = rows[i].p_a;
      if (p_b) p_b[i] = rows[i].p_b;
      if (p_c) p_c[i] = rows[i].p_c;
      if (log10_p_a) log10_p_a[i] = rows[i].log10_p_a;
      if (log10_p_b) log10_p_b[i] = rows[i].log10_p_b;
      if (log10_p_c) log10_p_c[i] = rows[i].log10_p_c;
    }
  });
}

}  // extern "C"
