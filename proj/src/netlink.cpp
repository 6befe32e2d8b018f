#include "netlink.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace qfc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) fail(errc::domain, msg);
}

double log10_transmission(double alpha_db_per_km, double length_km) {
  // the trailing + 0.0 turns -0.0 into +0.0 for clean formatting
  return -alpha_db_per_km * length_km / 10.0 + 0.0;
}

}  // namespace

void LinkScenario::validate() const {
  require(distance_km >= 0.0, "distance must be non-negative");
  require(alpha_blue_db_per_km >= 0.0 && alpha_ir_db_per_km >= 0.0,
          "attenuations must be non-negative");
  require(eta_down >= 0.0 && eta_down <= 1.0, "eta_down must lie in [0,1]");
  require(eta_up >= 0.0 && eta_up <= 1.0, "eta_up must lie in [0,1]");
}

double fiber_transmission(double alpha_db_per_km, double length_km) {
  require(alpha_db_per_km >= 0.0 && length_km >= 0.0,
          "attenuation and length must be non-negative");
  return std::pow(10.0, log10_transmission(alpha_db_per_km, length_km));
}

double scenario_success_log10(const LinkScenario& s) {
  s.validate();
  switch (s.topology) {
    case Topology::CaseA:
      return std::log10(s.eta_down) + std::log10(s.eta_up) +
             log10_transmission(s.alpha_ir_db_per_km, s.distance_km);
    case Topology::CaseB:
      return 2.0 * std::log10(s.eta_down) +
             2.0 * log10_transmission(s.alpha_ir_db_per_km,
                                      0.5 * s.distance_km);
    case Topology::CaseC:
      return log10_transmission(s.alpha_blue_db_per_km, s.distance_km);
  }
  return -std::numeric_limits<double>::infinity();
}

double scenario_success(const LinkScenario& s) {
  const double p = std::pow(10.0, scenario_success_log10(s));
  return std::clamp(p, 0.0, 1.0);
}

double improvement_orders(const LinkScenario& a, const LinkScenario& c) {
  return scenario_success_log10(a) - scenario_success_log10(c);
}

double crossover_distance_km(const LinkScenario& scenario) {
  scenario.validate();
  if (!(scenario.alpha_blue_db_per_km > scenario.alpha_ir_db_per_km))
    fail(errc::no_crossover,
         "case A never overtakes case C: alpha_blue <= alpha_ir");
  const double conversion_penalty =
      -std::log10(scenario.eta_down * scenario.eta_up);  // orders lost to QFC
  return 10.0 * conversion_penalty /
         (scenario.alpha_blue_db_per_km - scenario.alpha_ir_db_per_km);
}

std::vector<SweepRow> scenario_sweep(const LinkScenario& scenario,
                                     std::span<const double> distances_km) {
  std::vector<SweepRow> rows;
  rows.reserve(distances_km.size());
  for (double d : distances_km) {
    LinkScenario s = scenario;
    s.distance_km = d;
    SweepRow row{};
    row.distance_km = d;
    s.topology = Topology::CaseA;
    row.log10_p_a = scenario_success_log10(s);
    row.p_a = scenario_success(s);
    s.topology = Topology::CaseB;
    row.log10_p_b = scenario_success_log10(s);
    row.p_b = scenario_success(s);
    s.topology = Topology::CaseC;
    row.log10_p_c = scenario_success_log10(s);
    row.p_c = scenario_success(s);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qfc
