#ifndef QFC_H_INCLUDED
#define QFC_H_INCLUDED

/* qfc -- design and analysis toolkit for quantum frequency conversion
 * interfaces between short-wavelength ion transitions and the telecom
 * C-band.
 *
 * This is the stable C API of the shared library. All state lives behind
 * opaque handles; every call reports success through a qfc_status code and
 * writes results through out-pointers. A human-readable detail string for
 * the most recent failure on the calling thread is available via
 * qfc_last_error().
 *
 * Unit conventions match the suffix of each parameter name (_nm, _um, _mm,
 * _s, _hz, _w, _c for degrees Celsius, _db_per_km, _km). Wavelengths are
 * vacuum wavelengths.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(QFC_BUILD)
#    define QFC_API __declspec(dllexport)
#  else
#    define QFC_API __declspec(dllimport)
#  endif
#else
#  define QFC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QFC_OK = 0,
  QFC_E_NULLPTR = 1,        /* required pointer argument was NULL */
  QFC_E_IO = 2,             /* file not found / unreadable */
  QFC_E_PARSE = 3,          /* malformed model file or unknown field */
  QFC_E_ARITY = 4,          /* coefficient count does not match the form */
  QFC_E_INTERVAL = 5,       /* empty or inverted validity interval */
  QFC_E_VALIDITY = 6,       /* evaluation outside the model validity box */
  QFC_E_DOMAIN = 7,         /* argument outside the documented domain */
  QFC_E_NO_QPM = 8,         /* no forward first-order QPM period exists */
  QFC_E_NO_SIGN_CHANGE = 9, /* root bracket does not straddle a root */
  QFC_E_MULTIPLE_ROOTS = 10,/* pre-scan detected more than one root */
  QFC_E_SATURATION = 11,    /* raw rate at or beyond dead-time saturation */
  QFC_E_NONPHYSICAL = 12,   /* e.g. corrected signal below corrected noise */
  QFC_E_UNFITTABLE = 13,    /* fit input cannot constrain the parameter */
  QFC_E_NO_CROSSOVER = 14,  /* scenarios never cross (alpha_blue <= alpha_ir) */
  QFC_E_INTERNAL = 15
} qfc_status;

/* Static name of a status code, e.g. "QFC_E_NO_QPM". Never NULL. */
QFC_API const char* qfc_status_name(qfc_status s);

/* Detail message of the last failing call on this thread ("" if none). The
 * pointer stays valid until the next failing qfc_* call on the thread. */
QFC_API const char* qfc_last_error(void);

QFC_API const char* qfc_version(void);

/* -------------------------------------------------------------------- */
/* Dispersion models                                                     */
/* -------------------------------------------------------------------- */

/* A named temperature-dependent refractive-index model loaded from a JSON
 * coefficient file (schema documented in the repository; see data/models).
 * Handles are immutable and safe to share between threads. */
typedef struct qfc_model qfc_model;

QFC_API qfc_status qfc_model_load(const char* path, qfc_model** out);
QFC_API void qfc_model_free(qfc_model* m);

/* Name string owned by the handle; valid until qfc_model_free. */
QFC_API const char* qfc_model_name(const qfc_model* m);

QFC_API qfc_status qfc_model_validity(const qfc_model* m,
                                      double* wl_lo_um, double* wl_hi_um,
                                      double* temp_lo_c, double* temp_hi_c);

QFC_API qfc_status qfc_model_in_validity(const qfc_model* m, double lambda_um,
                                         double temp_c, int* inside);

/* n(lambda, T). Outside the validity box the call fails with
 * QFC_E_VALIDITY unless allow_extrapolation is nonzero. */
QFC_API qfc_status qfc_refractive_index(const qfc_model* m, double lambda_um,
                                        double temp_c, int allow_extrapolation,
                                        double* n);

/* -------------------------------------------------------------------- */
/* Energy conservation and quasi-phase-matching                          */
/* -------------------------------------------------------------------- */

typedef enum { QFC_SFG = 0, QFC_DFG = 1 } qfc_process_kind;

/* Output wavelength from 1/lambda_out = 1/lambda_in +/- 1/lambda_pump.
 * DFG requires the input to carry more energy than the pump
 * (QFC_E_DOMAIN otherwise). */
QFC_API qfc_status qfc_energy_match(qfc_process_kind kind, double lambda_in_nm,
                                    double lambda_pump_nm,
                                    double* lambda_out_nm);

/* A poled crystal: length, poling period, operating temperature and a
 * dispersion model. The handle keeps its own copy of the model, so the
 * model handle may be freed independently. */
typedef struct qfc_crystal qfc_crystal;

QFC_API qfc_status qfc_crystal_create(const qfc_model* m, double length_mm,
                                      double poling_period_um,
                                      double temperature_c, qfc_crystal** out);
QFC_API void qfc_crystal_free(qfc_crystal* c);

/* Effective phase mismatch k_hi - k_lo - k_pump - 2*pi/Lambda in rad/m,
 * where k_hi is the wave vector of the highest-frequency photon of the
 * triple (the output for SFG, the input for DFG). */
QFC_API qfc_status qfc_phase_mismatch(const qfc_crystal* c,
                                      qfc_process_kind kind,
                                      double lambda_in_nm,
                                      double lambda_pump_nm,
                                      int allow_extrapolation,
                                      double* delta_k_eff_rad_m);

/* First-order forward poling period Lambda = 2*pi/delta_k in um.
 * QFC_E_NO_QPM when delta_k <= 0 (or indistinguishable from 0). */
QFC_API qfc_status qfc_qpm_period(const qfc_model* m, qfc_process_kind kind,
                                  double lambda_in_nm, double lambda_pump_nm,
                                  double temperature_c,
                                  int allow_extrapolation, double* period_um);

/* Input wavelength of perfect phase matching, solved by bracketed bisection
 * (coarse 200-sample pre-scan, then bisection to 1e-4 nm). */
QFC_API qfc_status qfc_phasematched_input(const qfc_crystal* c,
                                          double lambda_pump_nm,
                                          qfc_process_kind kind,
                                          double bracket_lo_nm,
                                          double bracket_hi_nm,
                                          int allow_extrapolation,
                                          double* lambda_in_nm);

typedef struct {
  double dlambda_in_dt_nm_per_k;  /* central difference over +/- dt */
  double dlambda_out_dt_nm_per_k;
  double ratio_analytic;          /* (lambda_out/lambda_in)^2 at the tuning midpoint */
  double lambda_in_nm;            /* phase-matched input at the crystal temperature */
  double lambda_out_nm;
} qfc_tuning_slopes;

QFC_API qfc_status qfc_tuning_slopes_get(const qfc_crystal* c,
                                         double lambda_pump_nm,
                                         qfc_process_kind kind,
                                         double bracket_lo_nm,
                                         double bracket_hi_nm, double dt_k,
                                         int allow_extrapolation,
                                         qfc_tuning_slopes* out);

/* sinc^2 phase-matching curve sampled on floor((hi-lo)/step)+1 points of
 * [lambda_lo, lambda_hi]. If a phase-matched wavelength lies inside the
 * range, the nearest sample is moved onto it so the returned curve
 * contains its exact unit peak. Both buffers are allocated by the
 * library; release each with qfc_buffer_free. */
QFC_API qfc_status qfc_phasematch_curve(const qfc_crystal* c,
                                        double lambda_pump_nm,
                                        qfc_process_kind kind,
                                        double lambda_lo_nm,
                                        double lambda_hi_nm, double step_nm,
                                        int allow_extrapolation,
                                        double** lambda_nm,
                                        double** relative_efficiency,
                                        size_t* count);

QFC_API void qfc_buffer_free(double* buf);

/* -------------------------------------------------------------------- */
/* Conversion efficiency vs pump power                                   */
/* -------------------------------------------------------------------- */

typedef struct {
  double eta_nor_per_w_m2; /* normalized efficiency, 1/(W m^2) */
  double length_m;         /* interaction length */
  double eta_max;          /* saturation ceiling in (0,1] */
  double overlap;          /* beam-overlap fraction in [0,1] */
} qfc_conversion_model;

/* min(1, (w_pump/w_input)^2) */
QFC_API qfc_status qfc_beam_overlap_fraction(double waist_pump_um,
                                             double waist_input_um,
                                             double* fraction);

/* eta = eta_max * overlap * sin^2(L * sqrt(eta_nor * P)) */
QFC_API qfc_status qfc_efficiency_vs_power(const qfc_conversion_model* m,
                                           double pump_power_w,
                                           double* eta_ext);

/* Least-squares fit of eta_nor to measured (P, eta) points with the other
 * model parameters held fixed. residual_norm may be NULL. */
QFC_API qfc_status qfc_fit_normalized_efficiency(const double* pump_power_w,
                                                 const double* eta_ext,
                                                 size_t count, double length_m,
                                                 double overlap, double eta_max,
                                                 qfc_conversion_model* out,
                                                 double* residual_norm);

/* -------------------------------------------------------------------- */
/* Single-photon-level metrology                                         */
/* -------------------------------------------------------------------- */

typedef enum { QFC_INPUT_CW = 0, QFC_INPUT_PULSED = 1 } qfc_input_regime;

/* CW input: duty = tau_pump * rep_rate. Pulsed input: duty =
 * tau_pump / tau_input (tau_input_s is ignored for CW). */
QFC_API qfc_status qfc_duty_cycle(qfc_input_regime regime, double tau_pump_s,
                                  double rep_rate_hz, double tau_input_s,
                                  double* duty);

/* <n>_in = P * D / (h c / lambda), photons per second. */
QFC_API qfc_status qfc_mean_input_photon_rate(double power_w, double duty,
                                              double lambda_in_nm,
                                              double* rate_hz);

QFC_API qfc_status qfc_photons_per_pulse(double rate_hz, double rep_rate_hz,
                                         double* n_per_pulse);

/* Non-paralyzable dead-time correction S = S_raw / (1 - S_raw * T_D).
 * QFC_E_SATURATION when S_raw * T_D >= 1. */
QFC_API qfc_status qfc_dead_time_correct(double raw_hz, double dead_time_s,
                                         double* corrected_hz);

/* Product of detector efficiency and all component transmissions. */
QFC_API qfc_status qfc_chain_loss(const double* transmissions, size_t count,
                                  double detector_efficiency,
                                  double* eta_loss);

/* eta_ext = (S - N) / (<n>_in * eta_loss) with S, N the dead-time
 * corrected signal and noise rates. Fails with QFC_E_NONPHYSICAL when the
 * corrected signal lies below the corrected noise. */
QFC_API qfc_status qfc_external_efficiency(double s_raw_hz, double n_raw_hz,
                                           double dead_time_s,
                                           double input_rate_hz,
                                           double eta_loss, double* eta_ext);

/* Dead-time corrected S/N. A zero-noise record yields +infinity. */
QFC_API qfc_status qfc_snr(double s_raw_hz, double n_raw_hz,
                           double dead_time_s, double* snr);

/* Mean photons per pulse for SNR = 1, mu1 = n_per_pulse / snr. */
QFC_API qfc_status qfc_mu1(double n_per_pulse, double snr, double* mu1);

/* delta_nu = c * delta_lambda / lambda^2 */
QFC_API qfc_status qfc_bandwidth_nm_to_hz(double delta_lambda_nm,
                                          double center_lambda_nm,
                                          double* delta_nu_hz);

/* Broadband noise projected to a new pulse duration and filter bandwidth:
 * noise * (tau_new/tau_old) * (bw_new/bw_old). */
QFC_API qfc_status qfc_noise_rescale(double noise_per_pulse, double tau_old_s,
                                     double tau_new_s, double bw_old_hz,
                                     double bw_new_hz, double* projected);

/* -------------------------------------------------------------------- */
/* Network link budget                                                   */
/* -------------------------------------------------------------------- */

/* Case A: one photon down-converted, sent over the full distance in the
 * IR and up-converted at the far node. Case B: both photons
 * down-converted and sent to the midpoint. Case C: the short-wavelength
 * photon is sent directly, no interface. */
typedef enum { QFC_CASE_A = 0, QFC_CASE_B = 1, QFC_CASE_C = 2 } qfc_link_case;

typedef struct {
  qfc_link_case topology;
  double distance_km;
  double alpha_blue_db_per_km;
  double alpha_ir_db_per_km;
  double eta_down; /* DFG efficiency fraction */
  double eta_up;   /* SFG efficiency fraction */
} qfc_link_scenario;

/* 10^(-alpha*L/10) */
QFC_API qfc_status qfc_fiber_transmission(double alpha_db_per_km,
                                          double length_km, double* fraction);

/* Two-photon success probability (computed in the log10 domain, the
 * linear result is clamped to [0,1]). */
QFC_API qfc_status qfc_scenario_success(const qfc_link_scenario* s,
                                        double* probability);
QFC_API qfc_status qfc_scenario_success_log10(const qfc_link_scenario* s,
                                              double* log10_probability);

/* log10(P_a) - log10(P_c), evaluated entirely in the log domain. */
QFC_API qfc_status qfc_improvement_orders(const qfc_link_scenario* a,
                                          const qfc_link_scenario* c,
                                          double* orders);

/* Distance where case A overtakes case C:
 * L = 10 * log10(1/(eta_down*eta_up)) / (alpha_blue - alpha_ir). */
QFC_API qfc_status qfc_crossover_distance(const qfc_link_scenario* scenario,
                                          double* distance_km);

/* Evaluate all three cases at each distance. Output arrays must hold
 * `count` doubles each; any of them may be NULL to skip that column. */
QFC_API qfc_status qfc_scenario_sweep(const qfc_link_scenario* scenario,
                                      const double* distances_km, size_t count,
                                      double* p_a, double* p_b, double* p_c,
                                      double* log10_p_a, double* log10_p_b,
                                      double* log10_p_c);

#ifdef __cplusplus
}
#endif

#endif /* QFC_H_INCLUDED */
