#pragma once

#include <span>
#include <vector>

namespace qfc {

// The three end-to-end topologies compared by the link budget.
//   A: one photon down-converted at node 1, sent the full distance in the
//      IR, up-converted at node 2; the partner photon stays local.
//   B: both photons down-converted and sent to a symmetric midpoint.
//   C: no interface; the short-wavelength photon travels the full distance.
enum class Topology { CaseA, CaseB, CaseC };

struct LinkScenario {
  Topology topology = Topology::CaseC;
  double distance_km = 0.0;
  double alpha_blue_db_per_km = 0.0;
  double alpha_ir_db_per_km = 0.0;
  double eta_down = 1.0;  // DFG efficiency fraction
  double eta_up = 1.0;    // SFG efficiency fraction

  void validate() const;
};

// 10^(-alpha*L/10)
double fiber_transmission(double alpha_db_per_km, double length_km);

// All success probabilities are evaluated in the log10 domain so that
// 50+ orders of magnitude survive; the linear value is clamped to [0,1].
double scenario_success_log10(const LinkScenario& s);
double scenario_success(const LinkScenario& s);

// log10(P_a) - log10(P_c)
double improvement_orders(const LinkScenario& a, const LinkScenario& c);

// Distance where case A overtakes case C; requires alpha_blue > alpha_ir.
double crossover_distance_km(const LinkScenario& scenario);

struct SweepRow {
  double distance_km;
  double p_a, p_b, p_c;
  double log10_p_a, log10_p_b, log10_p_c;
};

std::vector<SweepRow> scenario_sweep(const LinkScenario& scenario,
                                     std::span<const double> distances_km);

}  // namespace qfc
