// qfc command-line front end. Talks to the shared library exclusively
// through the C API in qfc/qfc.h; config ingestion, unit conversion and
// CSV/JSON emission happen here.

#include <qfc/qfc.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitConfig = 1;   // bad usage, config or input files
constexpr int kExitLibrary = 2;  // a qfc_* call failed

[[noreturn]] void die_config(const std::string& msg) {
  std::cerr << "qfc: " << msg << "\n";
  std::exit(kExitConfig);
}

// Aborts with the library status name and the thread's detail message.
void check(qfc_status st, const char* what) {
  if (st == QFC_OK) return;
  std::cerr << "qfc: " << what << " failed (" << qfc_status_name(st) << "): "
            << qfc_last_error() << "\n";
  std::exit(kExitLibrary);
}

// Shortest round-trip, locale-independent formatting for CSV output.
std::string fmt(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

struct Config {
  json root;
  fs::path dir;  // directory of the config file, for relative paths

  const json* find(const std::string& dotted) const {
    const json* node = &root;
    std::size_t pos = 0;
    while (pos != std::string::npos) {
      const auto dot = dotted.find('.', pos);
      const std::string key = dot == std::string::npos
                                  ? dotted.substr(pos)
                                  : dotted.substr(pos, dot - pos);
      if (!node->is_object() || !node->contains(key)) return nullptr;
      node = &(*node)[key];
      pos = dot == std::string::npos ? std::string::npos : dot + 1;
    }
    return node;
  }

  template <class T>
  T require(const std::string& dotted) const {
    const json* node = find(dotted);
    if (!node) die_config("config is missing '" + dotted + "'");
    try {
      return node->get<T>();
    } catch (const json::exception&) {
      die_config("config field '" + dotted + "' has the wrong type");
    }
  }

  template <class T>
  std::optional<T> optional(const std::string& dotted) const {
    const json* node = find(dotted);
    if (!node || node->is_null()) return std::nullopt;
    try {
      return node->get<T>();
    } catch (const json::exception&) {
      die_config("config field '" + dotted + "' has the wrong type");
    }
  }

  // Resolve a path from the config: absolute as-is, otherwise relative to
  // the working directory, the config directory, then $QFC_MODEL_DIR.
  fs::path resolve(const std::string& p) const {
    const fs::path path(p);
    if (path.is_absolute() || fs::exists(path)) return path;
    if (fs::exists(dir / path)) return dir / path;
    if (const char* env = std::getenv("QFC_MODEL_DIR")) {
      if (fs::exists(fs::path(env) / path)) return fs::path(env) / path;
    }
    return path;  // let the open fail with the plain name
  }
};

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) die_config("cannot open config file '" + path + "'");
  Config cfg;
  try {
    in >> cfg.root;
  } catch (const json::exception& e) {
    die_config("config '" + path + "' is not valid JSON: " + e.what());
  }
  cfg.dir = fs::path(path).parent_path();
  return cfg;
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) die_config("cannot open output file '" + out_path + "'");
  out << text;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const fs::path& path, const std::vector<std::string>& want) {
  std::ifstream in(path);
  if (!in) die_config("cannot open CSV file '" + path.string() + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) die_config("CSV '" + path.string() + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.header.push_back(cell);
  if (table.header != want) {
    std::string expect;
    for (const auto& h : want) expect += (expect.empty() ? "" : ",") + h;
    die_config("CSV '" + path.string() + "' must have header '" + expect +
               "', found '" + line + "'");
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        die_config("CSV '" + path.string() + "': non-numeric cell '" + cell + "'");
      }
    }
    if (row.size() != want.size())
      die_config("CSV '" + path.string() + "': wrong number of columns");
    table.rows.push_back(row);
  }
  return table;
}

/* ---- shared config pieces ---- */

struct ModelHandle {
  qfc_model* m = nullptr;
  ~ModelHandle() { qfc_model_free(m); }
};

struct CrystalHandle {
  qfc_crystal* c = nullptr;
  ~CrystalHandle() { qfc_crystal_free(c); }
};

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  bool allow_extrapolation = false;
  // numeric overrides; flags win over config values
  std::optional<double> temperature_c;
  std::optional<double> lambda_in_nm;
  std::optional<double> lambda_pump_nm;
  std::optional<double> poling_period_um;
  std::optional<double> length_mm;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_format = false) {
  cmd->add_option("--config", f.config_path, "JSON run configuration")
      ->required();
  cmd->add_option("--out", f.out_path,
                  "output file (stdout when omitted)");
  if (with_format)
    cmd->add_option("--format", f.format, "series output format")
        ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--allow-extrapolation", f.allow_extrapolation,
                "permit dispersion evaluation outside the model validity box");
  cmd->add_option("--temperature-c", f.temperature_c,
                  "override crystal.temperature_C");
  cmd->add_option("--lambda-in-nm", f.lambda_in_nm,
                  "override process.lambda_in_nm");
  cmd->add_option("--lambda-pump-nm", f.lambda_pump_nm,
                  "override process.lambda_pump_nm");
  cmd->add_option("--poling-period-um", f.poling_period_um,
                  "override crystal.poling_period_um");
  cmd->add_option("--length-mm", f.length_mm, "override crystal.length_mm");
}

struct ProcessConfig {
  qfc_process_kind kind;
  double lambda_in_nm;
  double lambda_pump_nm;
};

ProcessConfig read_process(const Config& cfg, const CommonFlags& f) {
  const std::string kind = cfg.require<std::string>("process.kind");
  ProcessConfig p{};
  if (kind == "SFG") p.kind = QFC_SFG;
  else if (kind == "DFG") p.kind = QFC_DFG;
  else die_config("process.kind must be \"SFG\" or \"DFG\"");
  p.lambda_in_nm =
      f.lambda_in_nm.value_or(cfg.require<double>("process.lambda_in_nm"));
  p.lambda_pump_nm =
      f.lambda_pump_nm.value_or(cfg.require<double>("process.lambda_pump_nm"));
  return p;
}

bool read_allow_extrapolation(const Config& cfg, const CommonFlags& f) {
  return f.allow_extrapolation ||
         cfg.optional<bool>("dispersion.allow_extrapolation").value_or(false);
}

void load_model(const Config& cfg, ModelHandle& model) {
  const std::string rel = cfg.require<std::string>("dispersion.model_path");
  const fs::path path = cfg.resolve(rel);
  check(qfc_model_load(path.string().c_str(), &model.m), "model load");
}

// True when any wavelength of the triple, at the given temperature, falls
// outside the model validity box (i.e. extrapolation actually happened).
bool triple_extrapolated(const qfc_model* m, const ProcessConfig& p,
                         double lambda_out_nm, double temp_c) {
  for (double nm : {p.lambda_in_nm, p.lambda_pump_nm, lambda_out_nm}) {
    int inside = 0;
    check(qfc_model_in_validity(m, nm * 1e-3, temp_c, &inside), "validity query");
    if (!inside) return true;
  }
  return false;
}

/* ---- subcommands ---- */

int run_design(const CommonFlags& f) {
  const Config cfg = load_config(f.config_path);
  const bool allow = read_allow_extrapolation(cfg, f);
  const ProcessConfig p = read_process(cfg, f);
  const double temp_c =
      f.temperature_c.value_or(cfg.require<double>("crystal.temperature_C"));
  const double length_mm =
      f.length_mm.value_or(cfg.require<double>("crystal.length_mm"));
  const auto bracket =
      cfg.require<std::vector<double>>("solver.bracket_nm");
  if (bracket.size() != 2) die_config("solver.bracket_nm must be a pair");
  const double dt_k = cfg.optional<double>("solver.dT_K").value_or(1.0);

  ModelHandle model;
  load_model(cfg, model);

  double lambda_out_nm = 0.0;
  check(qfc_energy_match(p.kind, p.lambda_in_nm, p.lambda_pump_nm,
                         &lambda_out_nm),
        "energy match");
  double period_um = 0.0;
  check(qfc_qpm_period(model.m, p.kind, p.lambda_in_nm, p.lambda_pump_nm,
                       temp_c, allow, &period_um),
        "QPM period");

  CrystalHandle crystal;
  check(qfc_crystal_create(model.m, length_mm, period_um, temp_c, &crystal.c),
        "crystal");
  qfc_tuning_slopes slopes{};
  check(qfc_tuning_slopes_get(crystal.c, p.lambda_pump_nm, p.kind, bracket[0],
                              bracket[1], dt_k, allow, &slopes),
        "tuning slopes");

  json report;
  report["command"] = "design";
  report["model"] = qfc_model_name(model.m);
  report["process"] = {{"kind", p.kind == QFC_SFG ? "SFG" : "DFG"},
                       {"lambda_in_nm", p.lambda_in_nm},
                       {"lambda_pump_nm", p.lambda_pump_nm},
                       {"lambda_out_nm", lambda_out_nm}};
  report["temperature_C"] = temp_c;
  report["length_mm"] = length_mm;
  report["poling_period_um"] = period_um;
  report["tuning"] = {
      {"dlambda_in_dT_nm_per_K", slopes.dlambda_in_dt_nm_per_k},
      {"dlambda_out_dT_nm_per_K", slopes.dlambda_out_dt_nm_per_k},
      {"ratio_analytic", slopes.ratio_analytic},
      {"lambda_in_nm", slopes.lambda_in_nm},
      {"lambda_out_nm", slopes.lambda_out_nm}};
  report["extrapolation"] = {
      {"allowed", allow},
      {"used", triple_extrapolated(model.m, p, lambda_out_nm, temp_c)}};
  write_text(f.out_path, report.dump(2) + "\n");
  return 0;
}

int run_curve(const CommonFlags& f) {
  const Config cfg = load_config(f.config_path);
  const bool allow = read_allow_extrapolation(cfg, f);
  const ProcessConfig p = read_process(cfg, f);
  const double temp_c =
      f.temperature_c.value_or(cfg.require<double>("crystal.temperature_C"));
  const double length_mm =
      f.length_mm.value_or(cfg.require<double>("crystal.length_mm"));
  const double period_um = f.poling_period_um.value_or(
      cfg.require<double>("crystal.poling_period_um"));
  const double lo = cfg.require<double>("curve.lambda_min_nm");
  const double hi = cfg.require<double>("curve.lambda_max_nm");
  const double step = cfg.require<double>("curve.step_nm");

  ModelHandle model;
  load_model(cfg, model);
  CrystalHandle crystal;
  check(qfc_crystal_create(model.m, length_mm, period_um, temp_c, &crystal.c),
        "crystal");

  double* xs = nullptr;
  double* ys = nullptr;
  size_t count = 0;
  check(qfc_phasematch_curve(crystal.c, p.lambda_pump_nm, p.kind, lo, hi, step,
                             allow, &xs, &ys, &count),
        "phase-matching curve");

  // the CSV format has no room for metadata, so flag extrapolation here
  double out_lo = 0.0, out_hi = 0.0;
  check(qfc_energy_match(p.kind, lo, p.lambda_pump_nm, &out_lo), "energy match");
  check(qfc_energy_match(p.kind, hi, p.lambda_pump_nm, &out_hi), "energy match");
  bool extrapolated = false;
  for (double nm : {lo, hi, p.lambda_pump_nm, out_lo, out_hi}) {
    int inside = 0;
    check(qfc_model_in_validity(model.m, nm * 1e-3, temp_c, &inside),
          "validity query");
    if (!inside) extrapolated = true;
  }
  if (allow && extrapolated)
    std::cerr << "qfc: note: curve evaluated outside the model validity box "
                 "(extrapolation enabled)\n";

  std::string text;
  if (f.format == "json") {
    json arr = json::array();
    for (size_t i = 0; i < count; ++i)
      arr.push_back({{"lambda_in_nm", xs[i]}, {"relative_efficiency", ys[i]}});
    text = arr.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "lambda_in_nm,relative_efficiency\n";
    for (size_t i = 0; i < count; ++i)
      os << fmt(xs[i]) << ',' << fmt(ys[i]) << '\n';
    text = os.str();
  }
  qfc_buffer_free(xs);
  qfc_buffer_free(ys);
  write_text(f.out_path, text);
  return 0;
}

int run_efficiency(const CommonFlags& f, const std::string& points_flag,
                   const std::vector<double>& predict_mw) {
  const Config cfg = load_config(f.config_path);
  const double length_m =
      f.length_mm.value_or(cfg.require<double>("crystal.length_mm")) * 1e-3;
  const double eta_max =
      cfg.optional<double>("conversion.eta_max").value_or(1.0);

  double overlap = 1.0;
  if (auto o = cfg.optional<double>("conversion.overlap")) {
    overlap = *o;
  } else if (auto wp = cfg.optional<double>("conversion.waist_pump_um")) {
    const double wi = cfg.require<double>("conversion.waist_input_um");
    check(qfc_beam_overlap_fraction(*wp, wi, &overlap), "beam overlap");
  }

  std::string points_path = points_flag;
  if (points_path.empty())
    points_path = cfg.require<std::string>("conversion.points_csv");
  const CsvTable table =
      read_csv(cfg.resolve(points_path), {"P_pump_W", "eta_ext"});
  if (table.rows.empty())
    die_config("efficiency points CSV has no data rows");
  std::vector<double> power, eta;
  for (const auto& row : table.rows) {
    power.push_back(row[0]);
    eta.push_back(row[1]);
  }

  qfc_conversion_model fitted{};
  double residual = 0.0;
  check(qfc_fit_normalized_efficiency(power.data(), eta.data(), power.size(),
                                      length_m, overlap, eta_max, &fitted,
                                      &residual),
        "efficiency fit");

  json report;
  report["command"] = "efficiency";
  report["eta_nor_per_w_m2"] = fitted.eta_nor_per_w_m2;
  report["residual_norm"] = residual;
  report["points_used"] = power.size();
  report["fixed"] = {{"length_m", length_m},
                     {"overlap", overlap},
                     {"eta_max", eta_max}};
  if (!predict_mw.empty()) {
    json preds = json::array();
    for (double p_mw : predict_mw) {
      double eta_pred = 0.0;
      check(qfc_efficiency_vs_power(&fitted, p_mw * 1e-3, &eta_pred),
            "efficiency prediction");
      preds.push_back({{"p_pump_mw", p_mw}, {"eta_ext", eta_pred}});
    }
    report["predictions"] = preds;
  }
  write_text(f.out_path, report.dump(2) + "\n");
  return 0;
}

int run_budget(const CommonFlags& f, const std::string& counts_flag) {
  const Config cfg = load_config(f.config_path);

  const std::string regime_str = cfg.require<std::string>("pulse.regime");
  qfc_input_regime regime;
  if (regime_str == "CW") regime = QFC_INPUT_CW;
  else if (regime_str == "PULSED") regime = QFC_INPUT_PULSED;
  else die_config("pulse.regime must be \"CW\" or \"PULSED\"");
  const double tau_pump_s = cfg.require<double>("pulse.tau_pump_ps") * 1e-12;
  const double rep_rate_hz = cfg.require<double>("pulse.rep_rate_mhz") * 1e6;
  const double tau_input_s =
      cfg.optional<double>("pulse.tau_input_ps").value_or(0.0) * 1e-12;

  const double p_in_w = cfg.require<double>("input.p_in_mw") * 1e-3;
  double lambda_in_nm = 0.0;
  if (auto l = cfg.optional<double>("input.lambda_in_nm"))
    lambda_in_nm = *l;
  else
    lambda_in_nm = cfg.require<double>("process.lambda_in_nm");

  const auto transmissions =
      cfg.require<std::vector<double>>("detection.component_transmissions");
  const double det_eff = cfg.require<double>("detection.detector_efficiency");
  const double dead_time_s =
      cfg.require<double>("detection.dead_time_ns") * 1e-9;

  double s_raw_hz = 0.0, n_raw_hz = 0.0;
  if (!counts_flag.empty()) {
    const CsvTable table = read_csv(cfg.resolve(counts_flag),
                                    {"s_counts", "n_counts", "integration_s"});
    if (table.rows.empty())
      die_config("counts CSV has no data rows");
    double s_total = 0.0, n_total = 0.0, t_total = 0.0;
    for (const auto& row : table.rows) {
      s_total += row[0];
      n_total += row[1];
      t_total += row[2];
    }
    if (!(t_total > 0.0)) die_config("counts CSV has zero integration time");
    s_raw_hz = s_total / t_total;
    n_raw_hz = n_total / t_total;
  } else {
    s_raw_hz = cfg.require<double>("counts.s_raw_hz");
    n_raw_hz = cfg.require<double>("counts.n_raw_hz");
  }

  double duty = 0.0;
  check(qfc_duty_cycle(regime, tau_pump_s, rep_rate_hz, tau_input_s, &duty),
        "duty cycle");
  double eta_loss = 0.0;
  check(qfc_chain_loss(transmissions.data(), transmissions.size(), det_eff,
                       &eta_loss),
        "chain loss");
  double input_rate_hz = 0.0;
  check(qfc_mean_input_photon_rate(p_in_w, duty, lambda_in_nm, &input_rate_hz),
        "input photon rate");
  double n_per_pulse = 0.0;
  check(qfc_photons_per_pulse(input_rate_hz, rep_rate_hz, &n_per_pulse),
        "photons per pulse");
  double s_hz = 0.0, n_hz = 0.0;
  check(qfc_dead_time_correct(s_raw_hz, dead_time_s, &s_hz), "dead-time correction");
  check(qfc_dead_time_correct(n_raw_hz, dead_time_s, &n_hz), "dead-time correction");
  double eta_ext = 0.0;
  check(qfc_external_efficiency(s_raw_hz, n_raw_hz, dead_time_s, input_rate_hz,
                                eta_loss, &eta_ext),
        "external efficiency");
  double snr = 0.0;
  check(qfc_snr(s_raw_hz, n_raw_hz, dead_time_s, &snr), "SNR");
  double mu1 = 0.0;
  check(qfc_mu1(n_per_pulse, snr, &mu1), "mu1");

  json report;
  report["command"] = "budget";
  report["duty_cycle"] = duty;
  report["eta_loss"] = eta_loss;
  report["input_rate_hz"] = input_rate_hz;
  report["n_per_pulse"] = n_per_pulse;
  report["s_hz"] = s_hz;
  report["n_hz"] = n_hz;
  report["eta_ext"] = eta_ext;
  report["snr"] = finite_or_string(snr);
  report["mu1"] = mu1;
  write_text(f.out_path, report.dump(2) + "\n");
  return 0;
}

int run_link(const CommonFlags& f, const std::string& summary_out) {
  const Config cfg = load_config(f.config_path);
  qfc_link_scenario base{};
  base.topology = QFC_CASE_A;
  base.distance_km = 0.0;
  base.alpha_blue_db_per_km = cfg.require<double>("link.alpha_blue_db_per_km");
  base.alpha_ir_db_per_km = cfg.require<double>("link.alpha_ir_db_per_km");
  base.eta_down = cfg.require<double>("link.eta_down");
  base.eta_up = cfg.require<double>("link.eta_up");

  std::vector<double> distances;
  if (auto values = cfg.optional<std::vector<double>>("link.distance_km.values")) {
    distances = *values;
  } else {
    const double start = cfg.require<double>("link.distance_km.start");
    const double stop = cfg.require<double>("link.distance_km.stop");
    const double step = cfg.require<double>("link.distance_km.step");
    if (!(step > 0.0) || stop < start)
      die_config("link.distance_km must have step > 0 and stop >= start");
    const auto n = static_cast<size_t>(std::floor((stop - start) / step + 1e-9));
    for (size_t i = 0; i <= n; ++i)
      distances.push_back(start + static_cast<double>(i) * step);
  }
  if (distances.empty()) die_config("link distance grid is empty");

  std::vector<double> pa(distances.size()), pb(distances.size()),
      pc(distances.size()), la(distances.size()), lb(distances.size()),
      lc(distances.size());
  check(qfc_scenario_sweep(&base, distances.data(), distances.size(),
                           pa.data(), pb.data(), pc.data(), la.data(),
                           lb.data(), lc.data()),
        "scenario sweep");

  std::ostringstream os;
  os << "distance_km,p_case_a,p_case_b,p_case_c,"
        "log10_p_case_a,log10_p_case_b,log10_p_case_c\n";
  for (size_t i = 0; i < distances.size(); ++i)
    os << fmt(distances[i]) << ',' << fmt(pa[i]) << ',' << fmt(pb[i]) << ','
       << fmt(pc[i]) << ',' << fmt(la[i]) << ',' << fmt(lb[i]) << ','
       << fmt(lc[i]) << '\n';
  write_text(f.out_path, os.str());

  qfc_link_scenario at10 = base;
  at10.distance_km = 10.0;
  qfc_link_scenario at10_c = at10;
  at10.topology = QFC_CASE_A;
  at10_c.topology = QFC_CASE_C;
  double orders = 0.0;
  check(qfc_improvement_orders(&at10, &at10_c, &orders), "improvement orders");

  json summary;
  summary["command"] = "link";
  summary["improvement_orders_at_10km"] = finite_or_string(orders);
  double crossover = 0.0;
  const qfc_status cs = qfc_crossover_distance(&base, &crossover);
  if (cs == QFC_OK) {
    summary["crossover_km"] = crossover;
  } else if (cs == QFC_E_NO_CROSSOVER) {
    summary["crossover_km"] = nullptr;
  } else {
    check(cs, "crossover distance");
  }

  // the sweep goes to --out (or stdout); the summary goes to
  // --summary-out when given, stdout otherwise
  write_text(summary_out, summary.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum frequency conversion design & analysis toolkit"};
  app.require_subcommand(1);

  CommonFlags design_flags, curve_flags, eff_flags, budget_flags, link_flags;
  std::string counts_flag, points_flag, summary_out;
  std::vector<double> predict_mw;

  auto* design = app.add_subcommand(
      "design", "poling period and temperature tuning for a process");
  add_common(design, design_flags);

  auto* curve = app.add_subcommand(
      "curve", "sinc^2 phase-matching curve over an input wavelength range");
  add_common(curve, curve_flags, /*with_format=*/true);

  auto* efficiency = app.add_subcommand(
      "efficiency", "fit the normalized conversion efficiency to measured points");
  add_common(efficiency, eff_flags);
  efficiency->add_option("--points", points_flag,
                         "efficiency points CSV (overrides config)");
  efficiency->add_option("--predict-mw", predict_mw,
                         "pump powers (mW) to evaluate the fitted model at");

  auto* budget = app.add_subcommand(
      "budget", "single-photon count budget: efficiency, SNR and mu1");
  add_common(budget, budget_flags);
  budget->add_option("--counts", counts_flag,
                     "counts CSV with integration-time column (overrides config)");

  auto* link = app.add_subcommand(
      "link", "two-photon network transmission over fiber, cases A/B/C");
  add_common(link, link_flags);
  link->add_option("--summary-out", summary_out,
                   "write the summary JSON here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (design->parsed()) return run_design(design_flags);
    if (curve->parsed()) return run_curve(curve_flags);
    if (efficiency->parsed())
      return run_efficiency(eff_flags, points_flag, predict_mw);
    if (budget->parsed()) return run_budget(budget_flags, counts_flag);
    if (link->parsed()) return run_link(link_flags, summary_out);
  } catch (const std::exception& e) {
    std::cerr << "qfc: " << e.what() << "\n";
  }
  return kExitConfig;
}
