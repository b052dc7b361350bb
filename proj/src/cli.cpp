#include "caterase/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "caterase/catalyst.hpp"
#include "caterase/jc_sim.hpp"
#include "caterase/majorization.hpp"
#include "caterase/optimal_erasure.hpp"

namespace caterase::cli {

namespace {

using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kCsvHeader =
    "x_exp_minus_beta_omega,dSs,Qe,Ise,gamma_H,gamma_E,dI,best_dv,t,coherence_diag";

Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

Json num(const std::optional<double>& v) { return v ? num(*v) : Json(nullptr); }

Json nums(std::span<const double> v) {
  Json a = Json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

Json tuple_json(const CorrelationWitness& w) {
  return Json::array({w.I + 1, w.Iprime + 1, w.J + 1, w.Jprime + 1});
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
  if (!f) throw ConfigError("failed writing " + path);
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

EnergyLadder parse_ladder(const std::string& spec, std::size_t d) {
  std::vector<double> levels;
  std::istringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad ladder entry '" + item + "'");
    }
    if (used != item.size()) throw ConfigError("bad ladder entry '" + item + "'");
    levels.push_back(v);
  }
  if (levels.size() != d)
    throw ConfigError("ladder has " + std::to_string(levels.size()) + " levels, environment has " +
                      std::to_string(d));
  try {
    return EnergyLadder(std::move(levels));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

EnergyLadder pick_ladder(const std::string& ladder_spec, double omega, std::size_t d) {
  if (!ladder_spec.empty()) return parse_ladder(ladder_spec, d);
  if (!(omega > 0.0)) throw ConfigError("--omega must be positive");
  return EnergyLadder::uniform(d, omega, 1);
}

// ------------------------------------------------------------------ jc-sweep

struct SweepConfig {
  double start = 0.05, stop = 0.65;
  long long steps = 25;
  std::optional<std::vector<double>> xs;
  double omega = 1.0;
  double coupling = 1.0;
  std::size_t truncation = 0;
  std::size_t dv_min = 3, dv_max = 10;
  std::string t_policy = "max-erasure";
  bool scan_all_witnesses = true;
  bool deterministic = false;
  std::uint64_t seed = 0;
  std::string out = "jc_sweep.csv";
};

void parse_grid(const std::string& text, SweepConfig& c) {
  std::istringstream in(text);
  std::string a, b, s;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, s) ||
      in.peek() != EOF)
    throw ConfigError("--grid expects start:stop:steps");
  try {
    std::size_t ua = 0, ub = 0, us = 0;
    c.start = std::stod(a, &ua);
    c.stop = std::stod(b, &ub);
    c.steps = std::stoll(s, &us);
    if (ua != a.size() || ub != b.size() || us != s.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ConfigError("--grid expects start:stop:steps, got '" + text + "'");
  }
  c.xs.reset();
}

TimePolicy parse_time_policy(const std::string& text) {
  if (text == "max-erasure") return TimePolicy::max_erasure();
  if (text.rfind("fixed:", 0) == 0) {
    const std::string v = text.substr(6);
    std::size_t used = 0;
    double t = 0.0;
    try {
      t = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v.size() || !(t >= 0.0) || !std::isfinite(t))
      throw ConfigError("bad fixed time '" + v + "'");
    return TimePolicy::fixed(t);
  }
  throw ConfigError("--t-policy must be max-erasure or fixed:<t>");
}

void apply_config_file(const std::string& path, SweepConfig& c) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "grid") {
        if (v.is_string()) {
          parse_grid(v.get<std::string>(), c);
        } else {
          c.start = v.at("start").get<double>();
          c.stop = v.at("stop").get<double>();
          c.steps = v.at("steps").get<long long>();
          c.xs.reset();
        }
      } else if (key == "x") {
        c.xs = v.get<std::vector<double>>();
      } else if (key == "omega") {
        c.omega = v.get<double>();
      } else if (key == "coupling") {
        c.coupling = v.get<double>();
      } else if (key == "truncation") {
        c.truncation = v.get<std::size_t>();
      } else if (key == "dv_min") {
        c.dv_min = v.get<std::size_t>();
      } else if (key == "dv_max") {
        c.dv_max = v.get<std::size_t>();
      } else if (key == "t_policy") {
        c.t_policy = v.get<std::string>();
      } else if (key == "scan_all_witnesses") {
        c.scan_all_witnesses = v.get<bool>();
      } else if (key == "deterministic") {
        c.deterministic = v.get<bool>();
      } else if (key == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (key == "out") {
        c.out = v.get<std::string>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
}

std::vector<double> grid_points(const SweepConfig& c) {
  std::vector<double> xs;
  if (c.xs) {
    xs = *c.xs;
  } else {
    if (c.steps < 0) throw ConfigError("grid steps must be non-negative");
    for (long long k = 0; k < c.steps; ++k)
      xs.push_back(c.steps == 1 ? c.start
                                : c.start + (c.stop - c.start) * static_cast<double>(k) /
                                                static_cast<double>(c.steps - 1));
  }
  if (xs.empty()) throw ConfigError("empty grid");
  for (double x : xs)
    if (!(x > 0.0 && x < 1.0))
      throw ConfigError("grid value " + format_number(x) + " outside (0, 1)");
  return xs;
}

std::filesystem::path summary_path(const std::string& csv) {
  std::filesystem::path p(csv);
  p.replace_extension(".json");
  return p;
}

Json record_json(const JCRecord& r) {
  Json j;
  j["x"] = num(r.x);
  j["beta"] = num(r.beta);
  j["t"] = num(r.t);
  j["truncation"] = r.truncation;
  j["dSs"] = num(r.dSs);
  j["dSe"] = num(r.dSe);
  j["Qe"] = num(r.Qe);
  j["Ise"] = num(r.Ise);
  j["Ise_dephased"] = num(r.Ise_dephased);
  j["relative_entropy"] = num(r.relent);
  j["landauer_residual"] = num(r.landauer_residual);
  j["coherence_diag"] = num(r.coherence_diag);
  j["tuple_is_witness"] = r.tuple_is_witness;
  j["gamma_H"] = num(r.gamma_H);
  j["gamma_E"] = num(r.gamma_E);
  j["dI"] = num(r.dI);
  j["best_dv"] = r.best_dv;
  j["best_dv_entropy"] = r.best_dv_entropy;
  j["dense"] = {{"catalyst_deviation", num(r.dense_catalyst_deviation)},
                {"catalyst_matrix_deviation", num(r.dense_catalyst_matrix_deviation)},
                {"system_deviation", num(r.dense_system_deviation)},
                {"system_matrix_deviation", num(r.dense_system_matrix_deviation)}};
  if (r.scan) {
    Json s;
    s["witnesses"] = r.scan->witnesses;
    s["gamma_H"] = num(r.scan->gamma_H);
    s["tuple_H"] = r.scan->witness_H ? tuple_json(*r.scan->witness_H) : Json(nullptr);
    s["dv_H"] = r.scan->dv_H;
    s["gamma_E"] = num(r.scan->gamma_E);
    s["tuple_E"] = r.scan->witness_E ? tuple_json(*r.scan->witness_E) : Json(nullptr);
    s["dv_E"] = r.scan->dv_E;
    j["all_witnesses"] = s;
  }
  return j;
}

std::string csv_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("nan");
}

int cmd_jc_sweep(SweepConfig c, std::ostream& out) {
  const std::vector<double> xs = grid_points(c);
  const TimePolicy policy = parse_time_policy(c.t_policy);
  if (c.dv_min < 3 || c.dv_max < c.dv_min)
    throw ConfigError("catalyst dimension range must satisfy 3 <= dv-min <= dv-max");
  if (!(c.omega > 0.0) || !(c.coupling > 0.0))
    throw ConfigError("omega and coupling must be positive");

  ExperimentOptions opt;
  opt.omega = c.omega;
  opt.coupling = c.coupling;
  opt.truncation = c.truncation;
  opt.time = policy;
  opt.dv = {c.dv_min, c.dv_max};
  opt.scan_all_witnesses = c.scan_all_witnesses;

  std::vector<double> betas;
  for (double x : xs) betas.push_back(beta_from_x(x, c.omega));
  std::vector<JCRecord> records;
  try {
    records = run_experiment(betas, opt);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  std::ostringstream csv;
  if (!c.deterministic) csv << "# generated " << timestamp() << "\n";
  csv << kCsvHeader << "\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const JCRecord& r = records[i];
    csv << format_number(xs[i]) << ',' << format_number(r.dSs) << ',' << format_number(r.Qe)
        << ',' << format_number(r.Ise) << ',' << csv_field(r.gamma_H) << ','
        << csv_field(r.gamma_E) << ',' << format_number(r.dI) << ',' << r.best_dv << ','
        << format_number(r.t) << ',' << format_number(r.coherence_diag) << "\n";
  }

  Json summary;
  std::optional<std::size_t> peak;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].gamma_H && (!peak || *records[i].gamma_H > *records[*peak].gamma_H)) peak = i;
  if (peak)
    summary["peak"] = {{"gamma_H", num(records[*peak].gamma_H)},
                       {"x", num(xs[*peak])},
                       {"best_dv", records[*peak].best_dv},
                       {"t", num(records[*peak].t)}};
  else
    summary["peak"] = nullptr;
  summary["t_policy"] = c.t_policy;
  summary["tuple"] = Json::array({kTupleI + 1, kTupleIprime + 1, kTupleJ + 1, kTupleJprime + 1});
  summary["dv_range"] = Json::array({c.dv_min, c.dv_max});
  summary["omega"] = num(c.omega);
  summary["coupling"] = num(c.coupling);
  summary["seed"] = c.seed;
  if (!c.deterministic) summary["generated"] = timestamp();
  Json rows = Json::array();
  for (const JCRecord& r : records) rows.push_back(record_json(r));
  summary["rows"] = rows;

  const std::string json_path = summary_path(c.out).string();
  write_file(c.out, csv.str());
  write_file(json_path, summary.dump(2) + "\n");
  out << "wrote " << c.out << " and " << json_path << " (" << records.size() << " rows)\n";
  return kOk;
}

// ------------------------------------------------------------------ catalyze

struct CatalyzeArgs {
  std::string state_file;
  std::size_t dv_min = 3, dv_max = 10;
  std::string objective = "entropy";
  double omega = 1.0;
  std::string ladder;
  bool greedy = false;
  std::string out;
};

Json side_json(const ProbDist& env, const EnergyLadder& ladder, double I) {
  return {{"S_e", num(shannon_entropy(env))},
          {"E_e", num(ladder.expectation(env.view()))},
          {"I_se", num(I)}};
}

int cmd_catalyze(const CatalyzeArgs& a, std::ostream& out) {
  if (a.dv_min < 3 || a.dv_max < a.dv_min)
    throw ConfigError("catalyst dimension range must satisfy 3 <= dv-min <= dv-max");
  Objective objective;
  if (a.objective == "heat")
    objective = Objective::Heat;
  else if (a.objective == "entropy")
    objective = Objective::Entropy;
  else
    throw ConfigError("--objective must be heat or entropy");

  const JointState joint = read_state_file(a.state_file);
  const EnergyLadder ladder = pick_ladder(a.ladder, a.omega, joint.dims()[1]);
  for (double q : joint.populations())
    if (!(q > 0.0)) throw ParseError(a.state_file, 0, "populations must be strictly positive");

  Json j;
  j["dims"] = joint.dims();
  const double I = mutual_information(joint);
  j["mutual_information"] = num(I);
  const std::vector<CorrelationWitness> ws = find_witnesses(joint);
  const ProbDist env = joint.marginal(1);
  Json wj = Json::array();
  for (const auto& w : ws)
    wj.push_back({{"tuple", tuple_json(w)},
                  {"ratio_strong", num(w.ratio_strong)},
                  {"ratio_weak", num(w.ratio_weak)},
                  {"weak_at_least_one", w.canonical()},
                  {"gain_on_richer", env[w.J] > env[w.Jprime]}});
  j["witnesses"] = wj;
  j["objective"] = a.objective;
  j["dv_range"] = Json::array({a.dv_min, a.dv_max});
  j["before"] = side_json(env, ladder, I);

  if (ws.empty()) {
    j["message"] = UncorrelatedError().what();
    j["chosen"] = nullptr;
    emit(j, a.out, out);
    return kOk;
  }

  const OptimizationResult res =
      optimize_dv(joint, {a.dv_min, a.dv_max}, objective, ladder, std::nullopt,
                  a.greedy ? WitnessPolicy::Greedy : WitnessPolicy::Exhaustive);
  j["candidates"] = res.candidates;
  j["valid_candidates"] = res.valid_candidates;
  if (!res.best) {
    j["message"] = "no equal-transfer catalyst validates in the requested range";
    j["chosen"] = nullptr;
    emit(j, a.out, out);
    return kOk;
  }
  const CatalyticChoice& b = *res.best;
  j["message"] = "catalyst found";
  j["chosen"] = {{"tuple", tuple_json(b.witness)},
                 {"d_v", b.d_v},
                 {"spectrum", nums(b.solution.spectrum.view())},
                 {"delta", num(b.solution.delta)},
                 {"catalyst_deviation", num(b.report.catalyst_deviation)},
                 {"system_deviation", num(b.report.system_deviation)}};
  j["after"] = side_json(b.report.env_after, ladder, I + b.report.dI);
  j["dSe"] = num(b.report.dSe);
  j["dQe"] = num(b.report.dQe);
  j["dQe_passive"] = num(b.report.dQe_passive);
  j["dI"] = num(b.report.dI);
  j["env_majorizes"] = b.report.env_majorizes;
  j["gain_on_richer"] = b.report.gain_on_richer;
  emit(j, a.out, out);
  return kOk;
}

// ------------------------------------------------------------- check-erasure

struct CheckArgs {
  std::string ps_file, pe_file;
  double omega = 0.0;  // 0: derive the ladder from rho_e
  std::string ladder;
  std::string out;
};

int cmd_check_erasure(const CheckArgs& a, std::ostream& out) {
  const ProbDist ps = read_distribution_file(a.ps_file);
  const ProbDist pe = read_distribution_file(a.pe_file);
  if (!ps.full_rank())
    throw ParseError(a.ps_file, 0, "state must be full rank");
  if (!pe.full_rank())
    throw ParseError(a.pe_file, 0, "state must be full rank");
  const std::size_t ds = ps.size(), de = pe.size();

  // Without a ladder, rho_e is taken as thermal at beta = 1 for the levels
  // -ln(p_j / p_1) after sorting.
  const std::vector<double> pe_sorted = pe.sorted_descending();
  const ProbDist rho_e(pe_sorted);
  EnergyLadder ladder;
  std::string ladder_source;
  if (!a.ladder.empty() || a.omega > 0.0) {
    ladder = pick_ladder(a.ladder, a.omega > 0.0 ? a.omega : 1.0, de);
    ladder_source = a.ladder.empty() ? "uniform" : "explicit";
  } else {
    std::vector<double> levels;
    for (double p : pe_sorted) levels.push_back(-std::log(p / pe_sorted.front()));
    ladder = EnergyLadder(std::move(levels));
    ladder_source = "modular";
  }

  const PeriodicityReport rep = check_periodicity(ps, pe);
  Json j;
  j["dims"] = Json::array({ds, de});
  j["premise_ok"] = rep.premise_ok;
  j["condition"] = to_string(rep.condition);
  j["m"] = rep.m;
  j["lambda_max"] = rep.lambda_max;
  j["periodic_ratios"] = nums(rep.periodic_ratios);
  j["ladder"] = {{"source", ladder_source}, {"levels", nums(ladder.levels())}};

  const ProbDist joint_sorted = sorted_joint_spectrum(ps, pe);
  const std::vector<double> bound = max_erasure_bound(joint_sorted, ds, de);
  j["max_erasure_bound"] = nums(bound);
  std::vector<double> q(ds);
  for (std::size_t i = 0; i < ds; ++i) q[i] = bound[i] - (i ? bound[i - 1] : 0.0);
  const ProbDist sigma_s_max = ProbDist::from_weights(q);
  const double dSs = shannon_entropy(sigma_s_max) - shannon_entropy(ps);
  j["dSs_max_erasure"] = num(dSs);

  std::optional<double> beta;
  try {
    beta = fit_inverse_temperature(ladder, rho_e);
  } catch (const std::invalid_argument&) {
  }
  j["env_thermal"] = beta.has_value();
  j["beta_e"] = num(beta);

  std::optional<double> achieved;
  std::string verdict;
  if (rep.applies()) {
    const VseResult v = build_vse(ps, pe);
    j["sigma_s"] = nums(v.sigma_s.view());
    j["sigma_e"] = nums(v.sigma_e.view());
    achieved = heat(ladder, v.sigma_e, rho_e);
    const std::optional<double> gamma = thermal_output_gamma(joint_sorted, rho_e, de);
    j["gamma"] = num(gamma);
    if (ds == 2 && de == 2) {
      const bool swap = std::abs(v.sigma_s[0] - pe_sorted[0]) <= 1e-12 &&
                        std::abs(v.sigma_e[0] - ps.sorted_descending()[0]) <= 1e-12;
      verdict = swap ? "swap optimal, no catalytic gain"
                     : "block sorting optimal, no catalytic gain";
    } else {
      verdict = "block sorting reaches maximum erasure with a product output";
    }
  } else {
    j["sigma_s"] = nullptr;
    j["sigma_e"] = nullptr;
    j["gamma"] = nullptr;
    verdict = rep.premise_ok ? "no periodicity condition holds"
                             : "environment ratios below the system span";
  }
  j["achieved_heat"] = num(achieved);
  std::optional<double> mh;
  if (beta) {
    try {
      mh = min_heat(ladder, rho_e, dSs);
    } catch (const std::domain_error&) {
    }
  }
  j["min_heat"] = num(mh);
  j["verdict"] = verdict;
  emit(j, a.out, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Catalytic mitigation of erasure dissipation"};
  app.name("caterase");
  app.require_subcommand(1);

  SweepConfig sweep;
  std::string config_path, grid, t_policy, out_path;
  bool deterministic = false;
  std::uint64_t seed = 0;
  std::size_t dv_min = 3, dv_max = 10;
  double omega = 1.0;
  bool no_scan = false;
  auto* s = app.add_subcommand("jc-sweep", "Jaynes-Cummings erasure sweep to CSV + JSON");
  auto* o_config = s->add_option("--config", config_path, "JSON config file");
  auto* o_out = s->add_option("--out", out_path, "CSV output path");
  auto* o_det = s->add_flag("--deterministic", deterministic, "omit timestamps");
  auto* o_seed = s->add_option("--seed", seed, "recorded in the summary");
  auto* o_dvmin = s->add_option("--dv-min", dv_min, "smallest catalyst dimension");
  auto* o_dvmax = s->add_option("--dv-max", dv_max, "largest catalyst dimension");
  auto* o_tpol = s->add_option("--t-policy", t_policy, "max-erasure | fixed:<t>");
  auto* o_grid = s->add_option("--grid", grid, "start:stop:steps in exp(-beta omega)");
  auto* o_omega = s->add_option("--omega", omega, "oscillator frequency");
  auto* o_noscan = s->add_flag("--no-witness-scan", no_scan, "skip the all-witness scan");

  CatalyzeArgs cat;
  auto* c = app.add_subcommand("catalyze", "find and apply a catalyst to a classical joint state");
  c->add_option("state_file", cat.state_file, "state file")->required();
  c->add_option("--dv-min", cat.dv_min, "smallest catalyst dimension");
  c->add_option("--dv-max", cat.dv_max, "largest catalyst dimension");
  c->add_option("--objective", cat.objective, "heat | entropy");
  c->add_option("--omega", cat.omega, "uniform environment ladder spacing");
  c->add_option("--ladder", cat.ladder, "comma-separated environment energies");
  c->add_flag("--greedy", cat.greedy, "single witness with the largest ratio gap");
  c->add_option("--out", cat.out, "JSON output path (default stdout)");

  CheckArgs chk;
  auto* e = app.add_subcommand("check-erasure", "periodicity, V_se and minimum-heat checks");
  e->add_option("ps", chk.ps_file, "system distribution file")->required();
  e->add_option("pe", chk.pe_file, "environment distribution file")->required();
  e->add_option("--omega", chk.omega, "uniform environment ladder spacing");
  e->add_option("--ladder", chk.ladder, "comma-separated environment energies");
  e->add_option("--out", chk.out, "JSON output path (default stdout)");

  std::vector<std::string> argv_storage{"caterase"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (s->parsed()) {
      if (*o_config) apply_config_file(config_path, sweep);
      if (*o_grid) parse_grid(grid, sweep);
      if (*o_tpol) sweep.t_policy = t_policy;
      if (*o_dvmin) sweep.dv_min = dv_min;
      if (*o_dvmax) sweep.dv_max = dv_max;
      if (*o_det) sweep.deterministic = deterministic;
      if (*o_seed) sweep.seed = seed;
      if (*o_omega) sweep.omega = omega;
      if (*o_noscan) sweep.scan_all_witnesses = !no_scan;
      if (*o_out) sweep.out = out_path;
      return cmd_jc_sweep(sweep, out);
    }
    if (c->parsed()) return cmd_catalyze(cat, out);
    return cmd_check_erasure(chk, out);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const ConfigError& ex) {
    err << "error: " << ex.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  }
}

}  // namespace caterase::cli
