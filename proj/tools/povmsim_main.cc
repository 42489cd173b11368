// Copyright 2026 The povmsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// povmsim command-line front end. Every command prints a JSON or CSV
// document carrying the schema version, seed and a hash of its
// configuration.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "povmsim/born.h"
#include "povmsim/error.h"
#include "povmsim/experiment.h"
#include "povmsim/fixtures.h"
#include "povmsim/io.h"
#include "povmsim/naimark.h"
#include "povmsim/postselection.h"
#include "povmsim/usd.h"

namespace {

using namespace povmsim;

constexpr int kSchemaVersion = 1;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

// Usage problems detected after flag parsing (bad names, bad ranges).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

struct Output {
  std::string path;
  std::string format = "json";
};

// Resolves the destination: --output, else $POVMSIM_OUTPUT_DIR/<command>.<ext>,
// else stdout.
void emit(const Output& out, const std::string& command, const std::string& body) {
  std::filesystem::path path = out.path;
  if (path.empty()) {
    if (const char* dir = std::getenv("POVMSIM_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      std::filesystem::create_directories(dir);
      path = std::filesystem::path(dir) / (command + "." + out.format);
    }
  }
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path.string());
  file << body;
  std::cerr << "wrote " << path.string() << '\n';
}

Json metadata(const std::string& command, const Json& config, std::optional<std::uint64_t> seed) {
  Json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["command"] = command;
  meta["config"] = config;
  meta["config_hash"] = hex(fnv1a(config.dump()));
  meta["seed"] = seed ? Json(*seed) : Json(nullptr);
  return meta;
}

std::string csv_header(const Json& meta) {
  std::ostringstream s;
  s << "# schema_version=" << meta["schema_version"].get<int>() << '\n';
  s << "# command=" << meta["command"].get<std::string>() << '\n';
  s << "# config_hash=" << meta["config_hash"].get<std::string>() << '\n';
  s << "# seed=" << (meta["seed"].is_null() ? std::string("none") : meta["seed"].dump()) << '\n';
  return s.str();
}

void check_format(const Output& out) {
  if (out.format != "json" && out.format != "csv") throw UsageError("--format must be csv or json");
}

// A fixture name, or a path to a POVM document.
Povm resolve_povm(const std::string& spec) {
  if (std::filesystem::exists(spec) && std::filesystem::is_regular_file(spec)) {
    return povm_from_json(read_json_file(spec));
  }
  try {
    return load_fixture(spec);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

QuantumState resolve_state(const std::string& spec, Index dim) {
  if (std::filesystem::exists(spec) && std::filesystem::is_regular_file(spec)) {
    return state_from_json(read_json_file(spec));
  }
  if (spec == "mixed") return QuantumState::maximally_mixed(dim);
  if (dim == 2) {
    if (auto s = named_qubit_state(spec)) return *s;
  }
  if (spec.rfind("basis:", 0) == 0) {
    const long k = std::stol(spec.substr(6));
    if (k < 0 || k >= dim) throw UsageError("basis index out of range");
    return QuantumState::basis(dim, k);
  }
  throw UsageError("unknown state '" + spec +
                   "'; use zero, one, plus, minus, plus_i, minus_i, mixed, basis:<k> or a JSON file");
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string povm = "tetrahedral";
  std::string state = "zero";
  std::size_t shots = 100000;
  std::uint64_t seed = 1;
  std::string mode = "two-stage";
  unsigned threads = 1;
  Output out;
};

void run_simulate(const SimulateArgs& a) {
  check_format(a.out);
  if (a.shots < 1) throw UsageError("--shots must be at least 1");
  if (a.mode != "two-stage" && a.mode != "composite") throw UsageError("--mode must be two-stage or composite");
  const Povm povm = resolve_povm(a.povm);
  const QuantumState state = resolve_state(a.state, povm.dim());
  const PostselectionScheme scheme = postselection_scheme(povm);
  SamplerOptions options;
  options.mode = a.mode == "composite" ? SamplingMode::kComposite : SamplingMode::kTwoStage;
  options.threads = a.threads;
  const ShotRecord record = sample_postselection(scheme, state, a.shots, a.seed, options);
  const auto born = born_probabilities(state, povm);
  const auto counts = record.counts();
  const auto freq = record.conditional_frequencies();

  const Json config = {{"povm", a.povm}, {"state", a.state}, {"shots", a.shots}, {"mode", a.mode}};
  const Json meta = metadata("simulate", config, a.seed);
  if (a.out.format == "csv") {
    std::ostringstream s;
    s << csv_header(meta);
    s << "# success_rate=" << fixed(record.success_rate()) << " expected=" << fixed(scheme.success_probability())
      << '\n';
    s << "outcome,label,count,frequency,born\n";
    for (std::size_t i = 0; i < povm.size(); ++i) {
      s << i + 1 << ',' << povm.labels()[i] << ',' << counts[i] << ',' << fixed(freq[i]) << ',' << fixed(born[i])
        << '\n';
    }
    s << "fail,fail," << counts[scheme.failure_label()] << ",,\n";
    emit(a.out, "simulate", s.str());
    return;
  }
  Json doc = meta;
  doc["success_rate"] = record.success_rate();
  doc["success_probability"] = scheme.success_probability();
  doc["fail_count"] = counts[scheme.failure_label()];
  doc["outcomes"] = Json::array();
  double tv = 0.0;
  for (std::size_t i = 0; i < povm.size(); ++i) {
    doc["outcomes"].push_back(
        {{"label", povm.labels()[i]}, {"count", counts[i]}, {"frequency", freq[i]}, {"born", born[i]}});
    tv += 0.5 * std::abs(freq[i] - born[i]);
  }
  doc["total_variation_to_born"] = tv;
  emit(a.out, "simulate", doc.dump(2) + "\n");
}

// --------------------------------------------------------------------- usd

struct UsdArgs {
  std::vector<double> symmetric;  // d eps
  std::vector<long> random;       // d D
  std::string ensemble;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  Output out;
};

void run_usd(const UsdArgs& a) {
  check_format(a.out);
  const int modes = int(!a.symmetric.empty()) + int(!a.random.empty()) + int(!a.ensemble.empty());
  if (modes != 1) throw UsageError("choose exactly one of --symmetric, --random, --ensemble");

  if (!a.random.empty()) {
    if (a.trials < 1) throw UsageError("--trials must be at least 1");
    const Index d = a.random[0];
    const Index big_d = a.random[1];
    if (d < 1 || big_d < 1 || d > big_d) throw UsageError("--random needs 1 <= d <= D");
    const RandomExperiment ex = random_ensemble_experiment(d, big_d, a.trials, a.seed, a.threads);
    const Json config = {{"random", {d, big_d}}, {"trials", a.trials}};
    const Json meta = metadata("usd", config, a.seed);
    if (a.out.format == "csv") {
      std::ostringstream s;
      s << csv_header(meta);
      s << "# mean_lambda_min=" << fixed(ex.mean_lambda_min) << " std=" << fixed(ex.std_lambda_min)
        << " predicted=" << fixed(ex.predicted) << '\n';
      write_random_experiment_csv(s, ex);
      emit(a.out, "usd", s.str());
      return;
    }
    Json doc = meta;
    doc["d"] = d;
    doc["D"] = big_d;
    doc["gamma"] = ex.gamma;
    doc["mean_lambda_min"] = ex.mean_lambda_min;
    doc["std_lambda_min"] = ex.std_lambda_min;
    doc["predicted_lambda_min"] = ex.predicted;
    doc["band_holds_all_trials"] = ex.band_ok_all;
    doc["lambda_min"] = Json::array();
    for (const auto& t : ex.trials) doc["lambda_min"].push_back(t.lambda_min);
    emit(a.out, "usd", doc.dump(2) + "\n");
    return;
  }

  Ensemble ensemble = Ensemble::uniform({Vector::Ones(1)});
  Json config;
  std::optional<double> eps;
  Index d = 0;
  if (!a.symmetric.empty()) {
    d = static_cast<Index>(a.symmetric[0]);
    eps = a.symmetric[1];
    if (static_cast<double>(d) != a.symmetric[0] || d < 2) throw UsageError("--symmetric needs an integer d >= 2");
    if (!(*eps > 0.0 && *eps < 1.0)) throw UsageError("eps must lie in (0, 1) for non-orthogonal states");
    ensemble = symmetric_ensemble_with_gap(d, *eps).ensemble;
    config = {{"symmetric", {d, *eps}}};
  } else {
    ensemble = ensemble_from_json(read_json_file(a.ensemble));
    d = static_cast<Index>(ensemble.size());
    config = {{"ensemble", a.ensemble}};
  }
  const AdvantageBound bound = povm_advantage_bound(ensemble);
  const double dd = static_cast<double>(d);
  const Json meta = metadata("usd", config, std::nullopt);
  if (a.out.format == "csv") {
    std::ostringstream s;
    s << csv_header(meta);
    s << "d,eps,p_povm,p_sp,ratio,band_lower,band_upper,bound_ok\n";
    s << d << ',' << (eps ? fixed(*eps) : std::string()) << ',' << fixed(bound.p_povm_lower, 9) << ','
      << fixed(bound.p_sp, 9) << ',' << fixed(bound.ratio, 9) << ',' << (eps ? fixed(dd * (1 - *eps)) : "") << ','
      << fixed(dd) << ',' << (bound.bound_ok ? "true" : "false") << '\n';
    emit(a.out, "usd", s.str());
    return;
  }
  Json doc = meta;
  doc["d"] = d;
  if (eps) {
    doc["eps"] = *eps;
    doc["band"] = {dd * (1 - *eps), dd};
  }
  doc["p_povm"] = bound.p_povm_lower;
  doc["p_glued"] = bound.p_glued;
  doc["p_sp"] = bound.p_sp;
  doc["ratio"] = bound.ratio;
  doc["bound_ok"] = bound.bound_ok;
  emit(a.out, "usd", doc.dump(2) + "\n");
}

// ----------------------------------------------------------------- compare

struct CompareArgs {
  std::string povm = "tetrahedral";
  std::string noise = "ibmx4-like";
  std::size_t shots = 8192;
  std::uint64_t seed = 1;
  std::string scheme = "both";
  std::string randomization = "per-shot";
  std::string config;
  Output out;
};

NoiseModel parse_noise(const std::string& name) {
  if (auto n = NoiseModel::preset(name)) return *n;
  std::string list;
  for (const auto& p : NoiseModel::preset_names()) list += (list.empty() ? "" : ", ") + p;
  throw UsageError("unknown noise preset '" + name + "'; available: " + list);
}

void run_compare(CompareArgs a) {
  check_format(a.out);
  NoiseModel noise;
  bool custom_noise = false;
  if (!a.config.empty()) {
    // The config file overrides flags.
    const Json cfg = read_json_file(a.config);
    try {
      if (cfg.contains("povm_fixture")) a.povm = cfg["povm_fixture"].get<std::string>();
      if (cfg.contains("shots")) a.shots = cfg["shots"].get<std::size_t>();
      if (cfg.contains("seed")) a.seed = cfg["seed"].get<std::uint64_t>();
      if (cfg.contains("scheme")) a.scheme = cfg["scheme"].get<std::string>();
      if (cfg.contains("randomization")) a.randomization = cfg["randomization"].get<std::string>();
      if (cfg.contains("noise")) {
        const Json& n = cfg["noise"];
        if (n.is_string()) {
          a.noise = n.get<std::string>();
        } else {
          noise = parse_noise(n.value("preset", a.noise));
          noise.cnot = n.value("cnot", noise.cnot);
          noise.su2 = n.value("su2", noise.su2);
          noise.readout_bias = n.value("readout_bias", noise.readout_bias);
          custom_noise = true;
        }
      }
    } catch (const Json::exception& e) {
      throw ParseError(a.config + ": " + e.what());
    }
  }
  if (!custom_noise) noise = parse_noise(a.noise);
  try {
    noise.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  if (a.scheme != "both" && a.scheme != "postselection" && a.scheme != "naimark") {
    throw UsageError("scheme must be both, postselection or naimark");
  }
  if (a.randomization != "per-shot" && a.randomization != "block") {
    throw UsageError("randomization must be per-shot or block");
  }
  if (a.shots < 1) throw UsageError("shots must be at least 1");

  const Povm povm = resolve_povm(a.povm);
  CompareOptions options{noise, a.shots, a.seed,
                         a.randomization == "block" ? Randomization::kBlockAllocation : Randomization::kPerShot};
  std::optional<SchemeRun> ps;
  std::optional<SchemeRun> nm;
  if (a.scheme != "naimark") ps = run_postselection_tomography(povm, options);
  if (a.scheme != "postselection") nm = run_naimark_tomography(povm, options);

  const Json config = {{"povm", a.povm},
                       {"noise", {{"cnot", noise.cnot}, {"su2", noise.su2}, {"readout_bias", noise.readout_bias}}},
                       {"shots", a.shots},
                       {"scheme", a.scheme},
                       {"randomization", a.randomization}};
  const Json meta = metadata("compare", config, a.seed);
  std::vector<DistanceRow> rows;
  if (nm) rows.push_back({a.povm, "naimark", nm->distance});
  if (ps) rows.push_back({a.povm, "postselection", ps->distance});
  if (a.out.format == "csv") {
    std::ostringstream s;
    s << csv_header(meta);
    write_distance_csv(s, rows);
    emit(a.out, "compare", s.str());
    return;
  }
  Json doc = meta;
  if (ps) {
    doc["postselection"] = {{"distance", ps->distance},
                            {"postselection_fraction", ps->record.acceptance_fraction()},
                            {"effects", effects_to_json(ps->reconstruction.effects)},
                            {"unphysical_outcomes", ps->reconstruction.unphysical}};
  }
  if (nm) {
    double residual = 0.0;
    for (std::size_t i = povm.size(); i < nm->reconstruction.effects.size(); ++i) {
      residual += 0.5 * nm->reconstruction.effects[i].trace().real();
    }
    doc["naimark"] = {{"distance", nm->distance},
                      {"residual_mass", residual},
                      {"effects", effects_to_json(nm->reconstruction.effects)},
                      {"unphysical_outcomes", nm->reconstruction.unphysical}};
  }
  emit(a.out, "compare", doc.dump(2) + "\n");
}

// ------------------------------------------------------------------ others

void run_table1(const Output& out) {
  check_format(out);
  const auto rows = hardware_distance_table();
  const Json meta = metadata("table1", Json::object(), std::nullopt);
  if (out.format == "csv") {
    std::ostringstream s;
    s << csv_header(meta);
    write_distance_csv(s, rows);
    emit(out, "table1", s.str());
    return;
  }
  Json doc = meta;
  doc["rows"] = Json::array();
  for (const auto& r : rows) doc["rows"].push_back({{"povm", r.povm}, {"method", r.method}, {"distance", r.distance}});
  emit(out, "table1", doc.dump(2) + "\n");
}

void run_fixtures() {
  std::cout << "fixture directory: " << fixture_dir().string() << '\n';
  for (const auto& name : fixture_names()) {
    const Povm p = *builtin_fixture(name);
    std::cout << "  " << name << "  (d=" << p.dim() << ", " << p.size() << " outcomes)\n";
  }
}

struct DilateArgs {
  std::string povm = "trine";
  std::string mode = "qubit";
  Output out;
};

void run_dilate(const DilateArgs& a) {
  if (a.mode != "qubit" && a.mode != "abstract") throw UsageError("--mode must be qubit or abstract");
  const Povm povm = resolve_povm(a.povm);
  const NaimarkDilation dilation =
      naimark_dilation(povm, a.mode == "qubit" ? DilationMode::kQubitRegister : DilationMode::kAbstract);
  Json doc = metadata("dilate", {{"povm", a.povm}, {"mode", a.mode}}, std::nullopt);
  doc["unitary"] = unitary_to_json(dilation.unitary);
  doc["embedding"] = dilation.embedding;
  emit(a.out, "dilate", doc.dump(2) + "\n");
}

void run_scheme(const std::string& povm_spec, const Output& out) {
  const Povm povm = resolve_povm(povm_spec);
  Json doc = metadata("scheme", {{"povm", povm_spec}}, std::nullopt);
  doc["scheme"] = scheme_to_json(postselection_scheme(povm));
  emit(out, "scheme", doc.dump(2) + "\n");
}

void add_output(CLI::App* cmd, Output& out, bool with_format = true) {
  cmd->add_option("-o,--output", out.path, "Output file (default: stdout or $POVMSIM_OUTPUT_DIR)");
  if (with_format) cmd->add_option("--format", out.format, "csv or json")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate POVMs with projective measurements and postselection"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Sample the postselection scheme on a state");
  simulate->add_option("--povm", sim.povm, "Fixture name or POVM JSON file")->capture_default_str();
  simulate->add_option("--state", sim.state, "Named qubit state, mixed, basis:<k> or JSON file")->capture_default_str();
  simulate->add_option("--shots", sim.shots)->capture_default_str();
  simulate->add_option("--seed", sim.seed)->capture_default_str();
  simulate->add_option("--mode", sim.mode, "two-stage or composite")->capture_default_str();
  simulate->add_option("--threads", sim.threads)->capture_default_str();
  add_output(simulate, sim.out);

  UsdArgs usd;
  auto* usd_cmd = app.add_subcommand("usd", "Unambiguous discrimination bounds");
  usd_cmd->add_option("--symmetric", usd.symmetric, "d eps")->expected(2);
  usd_cmd->add_option("--random", usd.random, "d D")->expected(2);
  usd_cmd->add_option("--ensemble", usd.ensemble, "Ensemble JSON file");
  usd_cmd->add_option("--trials", usd.trials)->capture_default_str();
  usd_cmd->add_option("--seed", usd.seed)->capture_default_str();
  usd_cmd->add_option("--threads", usd.threads)->capture_default_str();
  add_output(usd_cmd, usd.out);

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare", "Noisy postselection vs Naimark tomography");
  compare->add_option("--povm", cmp.povm)->capture_default_str();
  compare->add_option("--noise", cmp.noise, "Noise preset")->capture_default_str();
  compare->add_option("--shots", cmp.shots, "Shots per probe and x-gate variant")->capture_default_str();
  compare->add_option("--seed", cmp.seed)->capture_default_str();
  compare->add_option("--scheme", cmp.scheme, "both, postselection or naimark")->capture_default_str();
  compare->add_option("--randomization", cmp.randomization, "per-shot or block")->capture_default_str();
  compare->add_option("--config", cmp.config, "JSON config; overrides flags");
  add_output(compare, cmp.out);

  Output t1;
  auto* table1 = app.add_subcommand("table1", "Distances of the shipped hardware reconstructions");
  add_output(table1, t1);

  auto* fixtures = app.add_subcommand("fixtures", "List fixtures");

  std::string export_dir = fixture_dir().string();
  auto* export_cmd = app.add_subcommand("export-fixtures", "Write fixture JSON documents");
  export_cmd->add_option("--dir", export_dir)->capture_default_str();

  DilateArgs dil;
  auto* dilate = app.add_subcommand("dilate", "Naimark dilation unitary as JSON");
  dilate->add_option("--povm", dil.povm)->capture_default_str();
  dilate->add_option("--mode", dil.mode, "qubit or abstract")->capture_default_str();
  add_output(dilate, dil.out, false);

  std::string scheme_povm = "tetrahedral";
  Output scheme_out;
  auto* scheme = app.add_subcommand("scheme", "Postselection scheme as JSON");
  scheme->add_option("--povm", scheme_povm)->capture_default_str();
  add_output(scheme, scheme_out, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*simulate) run_simulate(sim);
    if (*usd_cmd) run_usd(usd);
    if (*compare) run_compare(cmp);
    if (*table1) run_table1(t1);
    if (*fixtures) run_fixtures();
    if (*export_cmd) export_fixtures(export_dir);
    if (*dilate) run_dilate(dil);
    if (*scheme) run_scheme(scheme_povm, scheme_out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
