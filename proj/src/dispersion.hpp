#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qfc {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

// Supported closed forms. Coefficient meaning is documented in
// docs/model_schema.md and checked against the form arity on load.
enum class DispersionForm {
  // n^2 = a1 + b1 f + (a2 + b2 f)/(l^2 - (a3 + b3 f)^2)
  //         + (a4 + b4 f)/(l^2 - a5^2) - a6 l^2,  f = (T-24.5)(T+570.82)
  // coefficients = [a1..a6, b1..b4], l in um, T in deg C.
  SellmeierThermoOptic,
  // n^2 = c0 + c1/(l^2 - c2) + c3/(l^2 - c4) - c5 l^2   (no T dependence)
  SellmeierBasic,
};

std::size_t form_arity(DispersionForm form);
const char* form_name(DispersionForm form);

// Temperature-dependent refractive index of one polarization axis,
// evaluated from a coefficient file. Immutable after load; safe for
// concurrent evaluation.
class DispersionModel {
public:
  // Default-constructed models are empty and reject evaluation; load one
  // of the shipped coefficient files to obtain a usable model.
  DispersionModel() = default;

  static DispersionModel load(const std::string& path);
  static DispersionModel from_json_text(const std::string& text,
                                        const std::string& origin);

  // n(lambda, T). Throws errc::out_of_validity if (lambda, T) is outside
  // the validity box and extrapolation was not requested, and
  // errc::domain if the closed form does not evaluate to a physical
  // index (n^2 <= 0, resonance pole, ...).
  double index(double lambda_um, double temp_c,
               bool allow_extrapolation = false) const;

  bool in_validity(double lambda_um, double temp_c) const {
    return wavelength_um_.contains(lambda_um) && temperature_c_.contains(temp_c);
  }

  const std::string& name() const { return name_; }
  DispersionForm form() const { return form_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  const Interval& wavelength_validity_um() const { return wavelength_um_; }
  const Interval& temperature_validity_c() const { return temperature_c_; }
  char axis() const { return axis_; }

private:
  std::string name_;
  DispersionForm form_ = DispersionForm::SellmeierBasic;
  std::vector<double> coefficients_;
  Interval wavelength_um_;
  Interval temperature_c_;
  char axis_ = 'e';
};

}  // namespace qfc
