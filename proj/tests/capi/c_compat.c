/* Compiled as plain C11: proves the public header and ABI are usable
 * without a C++ compiler. */

#include <qfc/qfc.h>

#include <math.h>
#include <stdio.h>
#include <stdlib.h>

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    fprintf(stderr, "FAIL: %s\n", what);
    ++failures;
  }
}

int main(int argc, char** argv) {
  if (argc < 2) {
    fprintf(stderr, "usage: %s <model.json>\n", argv[0]);
    return 2;
  }

  double lambda_out = 0.0;
  expect(qfc_energy_match(QFC_SFG, 1547.6, 579.6, &lambda_out) == QFC_OK,
         "energy match call");
  expect(fabs(lambda_out - 421.68) < 0.05, "energy match value");

  qfc_model* model = NULL;
  expect(qfc_model_load(argv[1], &model) == QFC_OK, "model load");
  if (!model) return 1;

  double period = 0.0;
  expect(qfc_qpm_period(model, QFC_SFG, 1547.6, 579.6, 160.0, 1, &period) ==
             QFC_OK,
         "qpm period call");
  expect(fabs(period - 3.75) < 0.5, "qpm period value");

  qfc_crystal* crystal = NULL;
  expect(qfc_crystal_create(model, 19.97, period, 160.0, &crystal) == QFC_OK,
         "crystal create");
  double mismatch = 1.0;
  expect(qfc_phase_mismatch(crystal, QFC_SFG, 1547.6, 579.6, 1, &mismatch) ==
             QFC_OK,
         "phase mismatch call");
  expect(fabs(mismatch) < 1e-6, "designed grating zeroes the mismatch");

  double n = 0.0;
  expect(qfc_refractive_index(model, 10.0, 160.0, 0, &n) == QFC_E_VALIDITY,
         "validity error code");
  expect(qfc_last_error()[0] != '\0', "error message available");

  double mu1 = 0.0;
  expect(qfc_mu1(2.0, 39.4, &mu1) == QFC_OK && fabs(mu1 - 0.0508) < 5e-4,
         "mu1");

  qfc_crystal_free(crystal);
  qfc_model_free(model);

  if (failures == 0) printf("c_compat: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
