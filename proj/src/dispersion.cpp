#include "dispersion.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace qfc {

std::size_t form_arity(DispersionForm form) {
  switch (form) {
    case DispersionForm::SellmeierThermoOptic: return 10;
    case DispersionForm::SellmeierBasic: return 6;
  }
  return 0;
}

const char* form_name(DispersionForm form) {
  switch (form) {
    case DispersionForm::SellmeierThermoOptic: return "sellmeier_thermo_optic";
    case DispersionForm::SellmeierBasic: return "sellmeier_basic";
  }
  return "?";
}

namespace {

DispersionForm parse_form(const std::string& s, const std::string& origin) {
  if (s == "sellmeier_thermo_optic") return DispersionForm::SellmeierThermoOptic;
  if (s == "sellmeier_basic") return DispersionForm::SellmeierBasic;
  fail(errc::parse, origin + ": unknown dispersion form '" + s + "'");
}

Interval parse_interval(const nlohmann::json& j, const std::string& key,
                        const std::string& origin) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(errc::parse, origin + ": '" + key + "' must be a pair of numbers");
  Interval iv{j[0].get<double>(), j[1].get<double>()};
  if (!(iv.lo < iv.hi))
    fail(errc::invalid_interval,
         origin + ": '" + key + "' is empty or inverted");
  return iv;
}

double eval_n_squared(DispersionForm form, const std::vector<double>& c,
                      double lambda_um, double temp_c) {
  const double l2 = lambda_um * lambda_um;
  switch (form) {
    case DispersionForm::SellmeierThermoOptic: {
      const double f = (temp_c - 24.5) * (temp_c + 570.82);
      const double res = c[2] + c[8] * f;
      return c[0] + c[6] * f + (c[1] + c[7] * f) / (l2 - res * res) +
             (c[3] + c[9] * f) / (l2 - c[4] * c[4]) - c[5] * l2;
    }
    case DispersionForm::SellmeierBasic:
      return c[0] + c[1] / (l2 - c[2]) + c[3] / (l2 - c[4]) - c[5] * l2;
  }
  return 0.0;
}

}  // namespace

DispersionModel DispersionModel::from_json_text(const std::string& text,
                                                const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, origin + ": " + e.what());
  }
  if (!j.is_object()) fail(errc::parse, origin + ": expected a JSON object");

  // Strict schema: required keys plus an optional free-text "reference".
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "name" && k != "form" && k != "coefficients" &&
        k != "validity_wavelength_um" && k != "validity_temperature_C" &&
        k != "axis" && k != "reference")
      fail(errc::parse, origin + ": unknown field '" + k + "'");
  }
  for (const char* k : {"name", "form", "coefficients",
                        "validity_wavelength_um", "validity_temperature_C",
                        "axis"})
    if (!j.contains(k))
      fail(errc::parse, origin + ": missing field '" + std::string(k) + "'");

  DispersionModel m;
  if (!j["name"].is_string()) fail(errc::parse, origin + ": 'name' must be a string");
  m.name_ = j["name"].get<std::string>();
  if (!j["form"].is_string()) fail(errc::parse, origin + ": 'form' must be a string");
  m.form_ = parse_form(j["form"].get<std::string>(), origin);

  if (!j["coefficients"].is_array())
    fail(errc::parse, origin + ": 'coefficients' must be an array");
  for (const auto& v : j["coefficients"]) {
    if (!v.is_number())
      fail(errc::parse, origin + ": non-numeric coefficient");
    m.coefficients_.push_back(v.get<double>());
  }
  const std::size_t want = form_arity(m.form_);
  if (m.coefficients_.size() != want) {
    std::ostringstream os;
    os << origin << ": form '" << form_name(m.form_) << "' takes " << want
       << " coefficients, file has " << m.coefficients_.size();
    fail(errc::arity_mismatch, os.str());
  }

  m.wavelength_um_ = parse_interval(j["validity_wavelength_um"],
                                    "validity_wavelength_um", origin);
  m.temperature_c_ = parse_interval(j["validity_temperature_C"],
                                    "validity_temperature_C", origin);

  if (!j["axis"].is_string()) fail(errc::parse, origin + ": 'axis' must be a string");
  const std::string axis = j["axis"].get<std::string>();
  if (axis != "e" && axis != "o")
    fail(errc::parse, origin + ": 'axis' must be \"e\" or \"o\"");
  m.axis_ = axis[0];
  return m;
}

DispersionModel DispersionModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io, "cannot open dispersion model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), path);
}

double DispersionModel::index(double lambda_um, double temp_c,
                              bool allow_extrapolation) const {
  if (coefficients_.size() != form_arity(form_))
    fail(errc::domain, "dispersion model is empty; load a coefficient file");
  if (!(lambda_um > 0.0))
    fail(errc::domain, "wavelength must be positive");
  if (!in_validity(lambda_um, temp_c) && !allow_extrapolation) {
    std::ostringstream os;
    os << "(" << lambda_um << " um, " << temp_c << " C) outside validity of '"
       << name_ << "' [" << wavelength_um_.lo << ", " << wavelength_um_.hi
       << "] um x [" << temperature_c_.lo << ", " << temperature_c_.hi
       << "] C; pass the extrapolation flag to override";
    fail(errc::out_of_validity, os.str());
  }
  const double n2 = eval_n_squared(form_, coefficients_, lambda_um, temp_c);
  if (!std::isfinite(n2) || n2 <= 0.0) {
    std::ostringstream os;
    os << "model '" << name_ << "' gives non-physical n^2 = " << n2 << " at ("
       << lambda_um << " um, " << temp_c << " C)";
    fail(errc::domain, os.str());
  }
  return std::sqrt(n2);
}

}  // namespace qfc
