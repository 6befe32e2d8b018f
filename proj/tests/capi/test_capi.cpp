#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qfc/qfc.h>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

namespace {

const std::string kShippedModel =
    std::string(QFC_DATA_DIR) + "/models/mgo_cln_5mol_e.json";
const std::string kTestData = QFC_TEST_DATA_DIR;

qfc_model* load_shipped() {
  qfc_model* m = nullptr;
  REQUIRE(qfc_model_load(kShippedModel.c_str(), &m) == QFC_OK);
  REQUIRE(m != nullptr);
  return m;
}

}  // namespace

TEST_CASE("status names and version are available") {
  CHECK(std::strcmp(qfc_status_name(QFC_OK), "QFC_OK") == 0);
  CHECK(std::strcmp(qfc_status_name(QFC_E_NO_QPM), "QFC_E_NO_QPM") == 0);
  CHECK(qfc_version() != nullptr);
}

TEST_CASE("model handle lifecycle and metadata") {
  qfc_model* m = load_shipped();
  CHECK(std::string(qfc_model_name(m)).find("MgO:LiNbO3") != std::string::npos);

  double wl_lo = 0, wl_hi = 0, t_lo = 0, t_hi = 0;
  CHECK(qfc_model_validity(m, &wl_lo, &wl_hi, &t_lo, &t_hi) == QFC_OK);
  CHECK(wl_lo == 0.5);
  CHECK(wl_hi == 4.0);
  CHECK(t_lo == 20.0);
  CHECK(t_hi == 250.0);

  int inside = -1;
  CHECK(qfc_model_in_validity(m, 1.5476, 160.0, &inside) == QFC_OK);
  CHECK(inside == 1);
  CHECK(qfc_model_in_validity(m, 0.4217, 160.0, &inside) == QFC_OK);
  CHECK(inside == 0);

  qfc_model_free(m);
}

TEST_CASE("error codes surface through the C boundary") {
  qfc_model* m = nullptr;
  CHECK(qfc_model_load("/no/such/file.json", &m) == QFC_E_IO);
  CHECK(m == nullptr);
  CHECK(qfc_last_error()[0] != '\0');

  CHECK(qfc_model_load((kTestData + "/bad_arity.json").c_str(), &m) ==
        QFC_E_ARITY);
  CHECK(qfc_model_load((kTestData + "/bad_interval.json").c_str(), &m) ==
        QFC_E_INTERVAL);
  CHECK(qfc_model_load((kTestData + "/malformed.json").c_str(), &m) ==
        QFC_E_PARSE);
  CHECK(qfc_model_load(nullptr, &m) == QFC_E_NULLPTR);

  qfc_model* shipped = load_shipped();
  double n = 0.0;
  CHECK(qfc_refractive_index(shipped, 10.0, 160.0, 0, &n) == QFC_E_VALIDITY);
  CHECK(qfc_refractive_index(shipped, 10.0, 160.0, 1, &n) == QFC_OK);
  CHECK(qfc_refractive_index(shipped, 1.5476, 160.0, 0, nullptr) ==
        QFC_E_NULLPTR);
  qfc_model_free(shipped);
}

TEST_CASE("energy match through the C API") {
  double out = 0.0;
  CHECK(qfc_energy_match(QFC_SFG, 1547.6, 579.6, &out) == QFC_OK);
  CHECK(out == doctest::Approx(421.68).epsilon(1e-4));
  CHECK(qfc_energy_match(QFC_DFG, 425.5, 585.0, &out) == QFC_OK);
  CHECK(out == doctest::Approx(1560.6).epsilon(1e-4));
  CHECK(qfc_energy_match(QFC_DFG, 585.0, 425.5, &out) == QFC_E_DOMAIN);
}

TEST_CASE("crystal handles copy the model") {
  qfc_model* m = load_shipped();
  qfc_crystal* c = nullptr;
  REQUIRE(qfc_crystal_create(m, 19.97, 3.752813133217515, 160.0, &c) == QFC_OK);
  qfc_model_free(m);  // the crystal keeps its own copy

  double dk = 0.0;
  CHECK(qfc_phase_mismatch(c, QFC_SFG, 1547.6, 579.6, 1, &dk) == QFC_OK);
  CHECK(std::abs(dk) < 1e-6);  // designed grating zeroes the mismatch
  qfc_crystal_free(c);
}

TEST_CASE("crystal creation validates its geometry") {
  qfc_model* m = load_shipped();
  qfc_crystal* c = nullptr;
  CHECK(qfc_crystal_create(m, -1.0, 3.75, 160.0, &c) == QFC_E_DOMAIN);
  CHECK(c == nullptr);
  CHECK(qfc_crystal_create(m, 19.97, 0.0, 160.0, &c) == QFC_E_DOMAIN);
  CHECK(qfc_crystal_create(nullptr, 19.97, 3.75, 160.0, &c) == QFC_E_NULLPTR);
  qfc_model_free(m);
}

TEST_CASE("QPM design and root solving through the C API") {
  qfc_model* m = load_shipped();

  double period = 0.0;
  CHECK(qfc_qpm_period(m, QFC_SFG, 1547.6, 579.6, 160.0, 1, &period) == QFC_OK);
  CHECK(period == doctest::Approx(3.75).epsilon(0.14));

  // without the extrapolation flag the 421.7 nm output is out of validity
  CHECK(qfc_qpm_period(m, QFC_SFG, 1547.6, 579.6, 160.0, 0, &period) ==
        QFC_E_VALIDITY);

  qfc_crystal* c = nullptr;
  REQUIRE(qfc_crystal_create(m, 19.97, period, 160.0, &c) == QFC_OK);

  double root = 0.0;
  CHECK(qfc_phasematched_input(c, 579.6, QFC_SFG, 1500.0, 1600.0, 1, &root) ==
        QFC_OK);
  CHECK(root == doctest::Approx(1547.6).epsilon(1e-7));
  CHECK(qfc_phasematched_input(c, 579.6, QFC_SFG, 400.0, 450.0, 1, &root) ==
        QFC_E_NO_SIGN_CHANGE);

  qfc_tuning_slopes slopes{};
  CHECK(qfc_tuning_slopes_get(c, 579.6, QFC_SFG, 1500.0, 1600.0, 1.0, 1,
                              &slopes) == QFC_OK);
  CHECK(slopes.dlambda_in_dt_nm_per_k == doctest::Approx(0.474).epsilon(1e-2));
  CHECK(slopes.ratio_analytic == doctest::Approx(0.07424).epsilon(1e-3));

  qfc_crystal_free(c);
  qfc_model_free(m);
}

TEST_CASE("curve buffers are allocated and released by the library") {
  qfc_model* m = load_shipped();
  qfc_crystal* c = nullptr;
  REQUIRE(qfc_crystal_create(m, 19.97, 3.752813133217515, 160.0, &c) == QFC_OK);

  double* xs = nullptr;
  double* ys = nullptr;
  size_t count = 0;
  CHECK(qfc_phasematch_curve(c, 579.6, QFC_SFG, 1546.0, 1549.2, 0.05, 1, &xs,
                             &ys, &count) == QFC_OK);
  REQUIRE(xs != nullptr);
  REQUIRE(ys != nullptr);
  CHECK(count == 65);  // floor((hi-lo)/step)+1
  double peak = 0.0;
  for (size_t i = 0; i < count; ++i) peak = std::max(peak, ys[i]);
  CHECK(peak == 1.0);
  qfc_buffer_free(xs);
  qfc_buffer_free(ys);

  qfc_crystal_free(c);
  qfc_model_free(m);
}

TEST_CASE("conversion fit through the C API") {
  const double power[] = {0.180};
  const double eta[] = {0.094};
  qfc_conversion_model fitted{};
  double residual = -1.0;
  CHECK(qfc_fit_normalized_efficiency(power, eta, 1, 0.01997, 0.466, 1.0,
                                      &fitted, &residual) == QFC_OK);
  CHECK(residual < 1e-12);
  double eta_120 = 0.0;
  CHECK(qfc_efficiency_vs_power(&fitted, 0.120, &eta_120) == QFC_OK);
  CHECK(eta_120 == doctest::Approx(0.0642).epsilon(1e-3));

  double frac = 0.0;
  CHECK(qfc_beam_overlap_fraction(43.2, 63.3, &frac) == QFC_OK);
  CHECK(frac == doctest::Approx(0.4658).epsilon(1e-3));

  const double eta_bad[] = {0.466};
  CHECK(qfc_fit_normalized_efficiency(power, eta_bad, 1, 0.01997, 0.466, 1.0,
                                      &fitted, nullptr) == QFC_E_UNFITTABLE);
}

TEST_CASE("photon metrology through the C API") {
  double duty = 0.0;
  CHECK(qfc_duty_cycle(QFC_INPUT_CW, 30e-12, 80e6, 0.0, &duty) == QFC_OK);
  CHECK(duty == doctest::Approx(2.4e-3).epsilon(1e-12));
  CHECK(qfc_duty_cycle(QFC_INPUT_PULSED, 30e-12, 80e6, 10e-12, &duty) ==
        QFC_E_DOMAIN);

  double corrected = 0.0;
  CHECK(qfc_dead_time_correct(1e4, 10e-6, &corrected) == QFC_OK);
  CHECK(corrected == doctest::Approx(11111.111).epsilon(1e-6));
  CHECK(qfc_dead_time_correct(1e5, 10e-6, &corrected) == QFC_E_SATURATION);

  const double transmissions[] = {0.96, 0.20};
  double eta_loss = 0.0;
  CHECK(qfc_chain_loss(transmissions, 2, 0.86, &eta_loss) == QFC_OK);
  CHECK(eta_loss == doctest::Approx(0.16512).epsilon(1e-12));

  double snr = 0.0;
  CHECK(qfc_snr(5e4, 0.0, 43e-9, &snr) == QFC_OK);
  CHECK(std::isinf(snr));

  double mu1 = 0.0;
  CHECK(qfc_mu1(2.0, 39.4, &mu1) == QFC_OK);
  CHECK(mu1 == doctest::Approx(0.050761421).epsilon(1e-9));

  double eta_ext = 0.0;
  CHECK(qfc_external_efficiency(5e4, 6e4, 43e-9, 1.6e8, 0.16512, &eta_ext) ==
        QFC_E_NONPHYSICAL);
}

TEST_CASE("handles are shareable across threads; last_error is per thread") {
  qfc_model* m = load_shipped();
  std::vector<std::thread> workers;
  std::vector<int> failures(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      for (int i = 0; i < 200; ++i) {
        double n = 0.0;
        if (qfc_refractive_index(m, 1.5 + 1e-4 * t, 160.0, 0, &n) != QFC_OK ||
            !(n > 2.0 && n < 2.5))
          ++failures[t];
        // provoke a thread-local error and check the message sticks
        if (qfc_refractive_index(m, 10.0, 160.0, 0, &n) != QFC_E_VALIDITY)
          ++failures[t];
        if (qfc_last_error()[0] == '\0') ++failures[t];
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int f : failures) CHECK(f == 0);
  qfc_model_free(m);
}

TEST_CASE("link budget through the C API") {
  qfc_link_scenario a{QFC_CASE_A, 10.0, 50.0, 0.18, 0.011, 0.094};
  qfc_link_scenario c = a;
  c.topology = QFC_CASE_C;

  double orders = 0.0;
  CHECK(qfc_improvement_orders(&a, &c, &orders) == QFC_OK);
  CHECK(orders == doctest::Approx(46.8345).epsilon(1e-5));

  double crossover = 0.0;
  CHECK(qfc_crossover_distance(&a, &crossover) == QFC_OK);
  CHECK(crossover == doctest::Approx(0.59925).epsilon(1e-4));

  qfc_link_scenario flat = a;
  flat.alpha_blue_db_per_km = flat.alpha_ir_db_per_km;
  CHECK(qfc_crossover_distance(&flat, &crossover) == QFC_E_NO_CROSSOVER);

  const double distances[] = {0.0, 10.0};
  double pa[2], pb[2], pc[2], la[2], lb[2], lc[2];
  CHECK(qfc_scenario_sweep(&a, distances, 2, pa, pb, pc, la, lb, lc) == QFC_OK);
  CHECK(pc[0] == 1.0);
  CHECK(pa[0] == doctest::Approx(0.011 * 0.094).epsilon(1e-12));
  CHECK(lc[1] == doctest::Approx(-50.0).epsilon(1e-12));

  qfc_link_scenario bad = a;
  bad.eta_down = 2.0;
  double p = 0.0;
  CHECK(qfc_scenario_success(&bad, &p) == QFC_E_DOMAIN);
}
