#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "tauberian/closure.h"
#include "tauberian/sweep.h"
#include "tauberian/systems.h"
#include "tauberian/value.h"

namespace tauberian::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double start = 1.0;
  double ratio = 10.0;
  std::size_t count = 4;
};

// Per-system defaults for sweeps and verify-paper.
struct Preset {
  std::vector<State> states;
  GridSpec t_grid;
  GridSpec lambda_grid;
  double tol = 1e-8;
};

struct RunConfig {
  std::string system = "paper";
  std::vector<std::string> states;
  std::optional<double> horizon;
  std::optional<double> lambda;
  std::optional<std::string> t_grid;
  std::optional<std::string> lambda_grid;
  std::optional<double> tol;
  std::uint64_t seed = 7;
  std::size_t n = 500;
  std::optional<std::string> out;
  std::string format;
};

std::string Num(double v) { return fmt::format("{:.17g}", v); }

Preset PresetFor(const ControlSystem& system) {
  Preset p;
  p.states = DefaultStates(system);
  if (system.name == "sanity") {
    // Fine enough near T = 1e4 and lambda = 1e-4 for the trailing window of
    // min(T,1)/T and 1 - exp(-lambda) to settle below 1e-3.
    p.t_grid = {1250.0, 2.0, 4};
    p.lambda_grid = {8e-4, 0.5, 4};
    p.tol = 1e-4;
  } else {
    p.t_grid = {1.0, 10.0, 4};
    p.lambda_grid = {1.0, 0.1, 4};
    p.tol = 1e-8;
  }
  return p;
}

double ParseReal(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError(fmt::format("{}: '{}' is not a number", what, text));
  }
  return v;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

GridSpec ParseGrid(const std::string& text, const std::string& what) {
  const auto parts = Split(text, ':');
  if (parts.size() != 3) {
    throw UsageError(fmt::format("{} must look like start:ratio:count", what));
  }
  GridSpec g;
  g.start = ParseReal(parts[0], what);
  g.ratio = ParseReal(parts[1], what);
  const double count = ParseReal(parts[2], what);
  if (count < 1 || count != std::floor(count)) {
    throw UsageError(fmt::format("{}: count must be a positive integer", what));
  }
  g.count = static_cast<std::size_t>(count);
  return g;
}

State ParseState(const std::string& text, const ControlSystem& system) {
  std::vector<double> coords;
  for (const auto& part : Split(text, ',')) {
    coords.push_back(ParseReal(part, "--state"));
  }
  if (coords.size() != system.state_dim) {
    throw UsageError(fmt::format("--state needs {} coordinates for system '{}'",
                                 system.state_dim, system.name));
  }
  try {
    return State(std::move(coords));
  } catch (const DomainError& e) {
    throw UsageError(fmt::format("--state: {}", e.what()));
  }
}

ControlSystem ResolveSystem(const RunConfig& config) {
  auto system = SystemByName(config.system);
  if (!system) {
    throw UsageError(fmt::format("unknown system '{}'", config.system));
  }
  return *system;
}

Schedule MakeSchedule(ScheduleKind kind, const GridSpec& g) {
  try {
    return Schedule::Geometric(kind, g.start, g.ratio, g.count);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

double ResolveTol(const RunConfig& config, const Preset& preset) {
  const double tol = config.tol.value_or(preset.tol);
  if (!(tol > 0.0)) throw UsageError("--tol must be > 0");
  return tol;
}

// Writes to --out when given, to `out` otherwise.
void Emit(const std::optional<std::string>& path, const std::string& content,
          std::ostream& out) {
  if (!path) {
    out << content;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw OutputError(fmt::format("cannot write '{}'", *path));
  file << content;
  if (!file) throw OutputError(fmt::format("failed writing '{}'", *path));
}

Json StateJson(const State& s) {
  return Json(std::vector<double>(s.coords().begin(), s.coords().end()));
}

// RFC 4180 field quoting.
std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string CsvState(const State& s) {
  std::string text;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) text += ',';
    text += Num(s[i]);
  }
  return CsvField(text);
}

std::shared_ptr<spdlog::logger> MakeLogger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto logger = std::make_shared<spdlog::logger>("tauberian", sink);
  logger->set_pattern("[%l] %v");
  const char* env = std::getenv("TAUBERIAN_LOG");
  const std::string level = env ? env : "info";
  if (level == "quiet") {
    logger->set_level(spdlog::level::off);
  } else if (level == "debug") {
    logger->set_level(spdlog::level::debug);
  } else {
    if (level != "info") {
      logger->warn("TAUBERIAN_LOG='{}' not recognized, using info", level);
    }
    logger->set_level(spdlog::level::info);
  }
  return logger;
}

// ------------------------------------------------------------------ value

int CmdValue(const RunConfig& config, std::ostream& out, spdlog::logger& log) {
  if (config.horizon.has_value() == config.lambda.has_value()) {
    throw UsageError("value needs exactly one of --T or --lambda");
  }
  if (config.states.size() != 1) throw UsageError("value needs one --state");
  const ControlSystem system = ResolveSystem(config);
  const State omega = ParseState(config.states[0], system);
  const double tol = ResolveTol(config, PresetFor(system));
  const bool timed = config.horizon.has_value();
  const double horizon = timed ? *config.horizon : *config.lambda;
  if (!(horizon > 0.0)) {
    throw UsageError(timed ? "--T must be > 0" : "--lambda must be > 0");
  }
  log.debug("value: system={} state={} {}={} tol={}", system.name,
            omega.ToString(), timed ? "T" : "lambda", horizon, tol);
  const ValueResult r = timed ? ValueTime(system, omega, horizon, tol)
                              : ValueDiscounted(system, omega, horizon, tol);

  if (config.format == "json") {
    Json j;
    j["system"] = system.name;
    j["state"] = StateJson(omega);
    j["kind"] = timed ? "time" : "discount";
    j["horizon"] = horizon;
    j["value"] = r.value;
    j["minimizer"] = r.minimizer;
    j["family"] = r.family_label;
    j["evaluations"] = r.evaluations;
    j["achieved_tol"] = r.achieved_tol;
    Emit(config.out, j.dump(2) + "\n", out);
  } else if (config.format == "csv") {
    std::string minimizer;
    for (std::size_t i = 0; i < r.minimizer.size(); ++i) {
      if (i) minimizer += ';';
      minimizer += Num(r.minimizer[i]);
    }
    Emit(config.out,
         fmt::format("system,state,kind,horizon,value,minimizer,family\n"
                     "{},{},{},{},{},{},{}\n",
                     system.name, CsvState(omega),
                     timed ? "time" : "discount", Num(horizon), Num(r.value),
                     minimizer, CsvField(r.family_label)),
         out);
  } else {
    std::string minimizer = "-";
    if (!r.minimizer.empty()) {
      minimizer.clear();
      for (std::size_t i = 0; i < r.minimizer.size(); ++i) {
        if (i) minimizer += ", ";
        minimizer += Num(r.minimizer[i]);
      }
    }
    Emit(config.out,
         fmt::format("value     = {}\nminimizer = {}\nfamily    = {}\n",
                     Num(r.value), minimizer, r.family_label),
         out);
  }
  return kExitOk;
}

// ------------------------------------------------------------------ sweep

struct SweepSetup {
  ControlSystem system;
  std::vector<State> states;
  Schedule ts;
  Schedule lambdas;
  double tol;
};

SweepSetup ResolveSweep(const RunConfig& config) {
  ControlSystem system = ResolveSystem(config);
  const Preset preset = PresetFor(system);
  std::vector<State> states = preset.states;
  if (!config.states.empty()) {
    states.clear();
    for (const auto& s : config.states) states.push_back(ParseState(s, system));
  }
  const GridSpec tg =
      config.t_grid ? ParseGrid(*config.t_grid, "--T-grid") : preset.t_grid;
  const GridSpec lg = config.lambda_grid
                          ? ParseGrid(*config.lambda_grid, "--lambda-grid")
                          : preset.lambda_grid;
  return SweepSetup{std::move(system), std::move(states),
                    MakeSchedule(ScheduleKind::kTime, tg),
                    MakeSchedule(ScheduleKind::kDiscount, lg),
                    ResolveTol(config, preset)};
}

Json SweepSummary(const ControlSystem& system, const TauberianReport& r) {
  Json j;
  j["system"] = system.name;
  Json states = Json::array();
  for (const auto& s : r.states) states.push_back(StateJson(s));
  j["states"] = states;
  j["T"] = std::vector<double>(r.t_schedule.points().begin(),
                               r.t_schedule.points().end());
  j["lambda"] = std::vector<double>(r.lambda_schedule.points().begin(),
                                    r.lambda_schedule.points().end());
  j["v_limit"] = r.v_limit;
  j["w_limit"] = r.w_limit;
  j["uniformity_v"] = r.uniformity_v;
  j["uniformity_w"] = r.uniformity_w;
  j["verdict"] = VerdictName(r.verdict);
  j["max_gap"] = r.max_gap;
  j["worst_state"] = StateJson(r.states[r.worst_state]);
  j["verdict_tol"] = r.verdict_tol;
  return j;
}

std::string SweepCsv(const TauberianReport& r) {
  std::string csv = "state,kind,horizon,value,residual\n";
  for (std::size_t i = 0; i < r.states.size(); ++i) {
    const std::string state = CsvState(r.states[i]);
    for (std::size_t j = 0; j < r.t_schedule.size(); ++j) {
      csv += fmt::format("{},time,{},{},{}\n", state,
                         Num(r.t_schedule.points()[j]), Num(r.v_values[i][j]),
                         Num(r.v_residual[i]));
    }
    for (std::size_t j = 0; j < r.lambda_schedule.size(); ++j) {
      csv += fmt::format("{},discount,{},{},{}\n", state,
                         Num(r.lambda_schedule.points()[j]),
                         Num(r.w_values[i][j]), Num(r.w_residual[i]));
    }
  }
  return csv;
}

std::string VerdictLine(const TauberianReport& r) {
  if (const auto* c = std::get_if<Coincide>(&r.verdict)) {
    return fmt::format("verdict: coincide (limit {})", Num(c->sup_limit));
  }
  if (const auto* g = std::get_if<Gap>(&r.verdict)) {
    return fmt::format("verdict: gap (max_gap {} at state {})", Num(g->max_gap),
                       r.states[g->worst_state].ToString());
  }
  return fmt::format("verdict: inconclusive (uniformity_v {}, uniformity_w {})",
                     Num(r.uniformity_v), Num(r.uniformity_w));
}

int CmdSweep(const RunConfig& config, std::ostream& out, std::ostream& err,
             spdlog::logger& log) {
  const SweepSetup setup = ResolveSweep(config);
  log.info("sweep: system={} states={} T-points={} lambda-points={}",
           setup.system.name, setup.states.size(), setup.ts.size(),
           setup.lambdas.size());
  const TauberianReport r = Sweep(setup.system, setup.states, setup.ts,
                                  setup.lambdas, setup.tol);
  const Json summary = SweepSummary(setup.system, r);
  if (config.format == "json") {
    Emit(config.out, summary.dump(2) + "\n", out);
  } else {
    Emit(config.out, SweepCsv(r), out);
    if (config.out) {
      Emit(*config.out + ".summary.json", summary.dump(2) + "\n", out);
    }
  }
  (config.out ? out : err) << VerdictLine(r) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- closure

Json WitnessJson(const ClosureWitness& w) {
  Json j;
  j["process"] = w.first.descriptor().ToString();
  if (w.second) j["appended"] = w.second->descriptor().ToString();
  j["time"] = w.time;
  j["result"] = w.result.ToString();
  j["explanation"] = w.explanation;
  return j;
}

Json ReportJson(const ClosureReport& r) {
  Json j;
  j["property"] = ToString(r.property);
  j["status"] = ToString(r.status);
  j["samples_checked"] = r.samples_checked;
  j["note"] = r.note;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(WitnessJson(w));
  j["witnesses"] = witnesses;
  return j;
}

std::string ReportText(const ClosureReport& r) {
  std::string text =
      fmt::format("{}: {} ({})\n", ToString(r.property), ToString(r.status),
                  r.note);
  for (const auto& w : r.witnesses) {
    text += fmt::format("  witness: {}\n", w.explanation);
  }
  return text;
}

int CmdClosure(const RunConfig& config, std::ostream& out,
               spdlog::logger& log) {
  const ControlSystem system = ResolveSystem(config);
  if (config.n == 0) throw UsageError("--n must be >= 1");
  log.info("closure: system={} seed={} n={}", system.name, config.seed,
           config.n);
  const ClosureReport concat = CheckConcatClosure(system, config.seed, config.n);
  const ClosureReport shift = CheckShiftClosure(system, config.seed, config.n);
  if (config.format == "json") {
    Json j;
    j["system"] = system.name;
    j["seed"] = config.seed;
    j["n"] = config.n;
    j["concat"] = ReportJson(concat);
    j["shift"] = ReportJson(shift);
    Emit(config.out, j.dump(2) + "\n", out);
  } else {
    Emit(config.out, ReportText(concat) + ReportText(shift), out);
  }
  return kExitOk;
}

// ----------------------------------------------------------- verify-paper

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass;
};

bool Near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool RelNear(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::abs(b);
}

void AddClosureChecks(const ControlSystem& system, const RunConfig& config,
                      bool expect_shift_pass, std::vector<Check>& checks) {
  const ClosureReport concat = CheckConcatClosure(system, config.seed, config.n);
  checks.push_back({fmt::format("concat-closure ({} samples)", config.n),
                    "pass", ToString(concat.status),
                    concat.status == ClosureStatus::kPass});
  const ClosureReport shift = CheckShiftClosure(system, config.seed, config.n);
  if (expect_shift_pass) {
    checks.push_back({"shift-closure", "pass", ToString(shift.status),
                      shift.status == ClosureStatus::kPass});
    return;
  }
  bool reproducible_b = false;
  for (const auto& w : shift.witnesses) {
    if (w.first.descriptor().get_if<DescB>() && ReplayWitness(system, w)) {
      reproducible_b = true;
    }
  }
  checks.push_back({"shift-closure", "fail, witness B(s) shifted",
                    fmt::format("{}, {} witnesses", ToString(shift.status),
                                shift.witnesses.size()),
                    shift.status == ClosureStatus::kFail && reproducible_b});
}

std::vector<Check> PaperChecks(const RunConfig& config, double tol) {
  const ControlSystem system = PaperSystem();
  const State origin{0, 0, 0};
  const double ln2 = std::log(2.0);
  std::vector<Check> checks;
  for (double horizon : {0.5, 1.0, 10.0, 100.0, 1000.0}) {
    const ValueResult r = ValueTime(system, origin, horizon, tol);
    checks.push_back({fmt::format("V[v_T](0,0,0), T={}", horizon), "0.5",
                      Num(r.value), Near(r.value, 0.5, 1e-6)});
    checks.push_back({fmt::format("  argmin s, T={}", horizon),
                      Num(2.0 / horizon), Num(r.minimizer.at(0)),
                      RelNear(r.minimizer.at(0), 2.0 / horizon, 1e-3)});
  }
  for (double lambda : {10.0, 1.0, 0.1, 0.01, 0.001}) {
    const ValueResult r = ValueDiscounted(system, origin, lambda, tol);
    checks.push_back({fmt::format("V[w_l](0,0,0), lambda={}", lambda), "0.75",
                      Num(r.value), Near(r.value, 0.75, 1e-6)});
    checks.push_back({fmt::format("  argmin s, lambda={}", lambda),
                      Num(lambda / ln2), Num(r.minimizer.at(0)),
                      RelNear(r.minimizer.at(0), lambda / ln2, 1e-3)});
  }
  const Preset preset = PresetFor(system);
  const Schedule ts = MakeSchedule(ScheduleKind::kTime, preset.t_grid);
  const Schedule ls = MakeSchedule(ScheduleKind::kDiscount, preset.lambda_grid);
  for (const State& w : {State{1, 1, 1}, State{1.5, 0, 0}, State{0.5, 3, 0}}) {
    bool all_one = true;
    for (double t : ts.points()) {
      all_one = all_one && ValueTime(system, w, t, tol).value == 1.0;
    }
    for (double l : ls.points()) {
      all_one = all_one && ValueDiscounted(system, w, l, tol).value == 1.0;
    }
    checks.push_back({fmt::format("V[v_T], V[w_l] at {}", w.ToString()), "1",
                      all_one ? "1" : "not 1", all_one});
  }
  const TauberianReport r = Sweep(system, preset.states, ts, ls, tol);
  checks.push_back({"sweep verdict", "gap", VerdictName(r.verdict),
                    std::holds_alternative<Gap>(r.verdict)});
  checks.push_back({"  max_gap", "0.25", Num(r.max_gap),
                    Near(r.max_gap, 0.25, 1e-6)});
  checks.push_back(
      {"  uniformity residuals", "<= 1e-06",
       Num(std::max(r.uniformity_v, r.uniformity_w)),
       r.uniformity_v <= 1e-6 && r.uniformity_w <= 1e-6});
  AddClosureChecks(system, config, /*expect_shift_pass=*/false, checks);
  return checks;
}

std::vector<Check> SanityChecks(const RunConfig& config, double tol) {
  const ControlSystem system = SanitySystem();
  std::vector<Check> checks;
  const double v = ValueTime(system, State{0.0}, 4.0, tol).value;
  checks.push_back({"V[v_T](0), T=4", "0.25", Num(v), Near(v, 0.25, 1e-12)});
  const double w = ValueDiscounted(system, State{0.0}, 1.0, tol).value;
  checks.push_back({"V[w_l](0), lambda=1", Num(1.0 - std::exp(-1.0)), Num(w),
                    Near(w, 1.0 - std::exp(-1.0), 1e-12)});
  const Preset preset = PresetFor(system);
  const TauberianReport r =
      Sweep(system, preset.states,
            MakeSchedule(ScheduleKind::kTime, preset.t_grid),
            MakeSchedule(ScheduleKind::kDiscount, preset.lambda_grid), tol);
  const auto* c = std::get_if<Coincide>(&r.verdict);
  checks.push_back({"sweep verdict", "coincide", VerdictName(r.verdict),
                    c != nullptr});
  checks.push_back({"  shared limit", "0 +- 1e-3",
                    c ? Num(c->sup_limit) : "-",
                    c != nullptr && Near(c->sup_limit, 0.0, 1e-3)});
  AddClosureChecks(system, config, /*expect_shift_pass=*/true, checks);
  return checks;
}

int CmdVerify(const RunConfig& config, std::ostream& out,
              spdlog::logger& log) {
  const ControlSystem system = ResolveSystem(config);
  const double tol = ResolveTol(config, PresetFor(system));
  const auto started = std::chrono::steady_clock::now();
  const std::vector<Check> checks = system.name == "sanity"
                                        ? SanityChecks(config, tol)
                                        : PaperChecks(config, tol);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::string table = fmt::format("{:<{}}  {:<26}  {:<24}  {}\n", "check",
                                  width, "expected", "observed", "status");
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    table += fmt::format("{:<{}}  {:<26}  {:<24}  {}\n", c.name, width,
                         c.expected, c.observed, c.pass ? "PASS" : "FAIL");
  }
  table += fmt::format("{}: {} checks, system {}, tol {}, {:.2f} s\n",
                       all ? "ALL PASS" : "FAILED", checks.size(), system.name,
                       tol, seconds);
  if (config.format == "json") {
    Json j;
    j["system"] = system.name;
    j["tol"] = tol;
    j["pass"] = all;
    Json rows = Json::array();
    for (const auto& c : checks) {
      rows.push_back({{"check", c.name},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"pass", c.pass}});
    }
    j["checks"] = rows;
    Emit(config.out, j.dump(2) + "\n", out);
  } else {
    Emit(config.out, table, out);
  }
  log.debug("verify-paper finished in {:.3f} s", seconds);
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  auto logger = MakeLogger(err);
  RunConfig config;

  CLI::App app{"Cesaro and Abel value functions of abstract control systems",
               "tauberian"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--system", config.system, "paper | sanity")
        ->check(CLI::IsMember({"paper", "sanity"}));
    cmd->add_option("--tol", config.tol, "minimizer tolerance");
    cmd->add_option("--out", config.out, "output path (default: stdout)");
    cmd->add_option("--format", config.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* verify =
      app.add_subcommand("verify-paper", "reproduce the counterexample");
  add_common(verify);
  verify->add_option("--seed", config.seed, "closure sampling seed");
  verify->add_option("--n", config.n, "closure sample count");

  CLI::App* value = app.add_subcommand("value", "V[v_T] or V[w_lambda]");
  add_common(value);
  value->add_option("--state", config.states, "state, e.g. 0,0,0")
      ->expected(1);
  value->add_option("--T", config.horizon, "time-average horizon");
  value->add_option("--lambda", config.lambda, "discount rate");

  CLI::App* sweep = app.add_subcommand("sweep", "T -> inf, lambda -> 0 sweep");
  add_common(sweep);
  sweep->add_option("--state", config.states, "witness state (repeatable)")
      ->allow_extra_args(false);
  sweep->add_option("--T-grid", config.t_grid, "start:ratio:count");
  sweep->add_option("--lambda-grid", config.lambda_grid, "start:ratio:count");

  CLI::App* closure = app.add_subcommand("closure", "closure checks of K");
  add_common(closure);
  closure->add_option("--seed", config.seed, "sampling seed");
  closure->add_option("--n", config.n, "sample count");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1),
                                     args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return CmdVerify(config, out, *logger);
    if (value->parsed()) return CmdValue(config, out, *logger);
    if (sweep->parsed()) return CmdSweep(config, out, err, *logger);
    if (closure->parsed()) return CmdClosure(config, out, *logger);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    logger->error("{}", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace tauberian::cli
