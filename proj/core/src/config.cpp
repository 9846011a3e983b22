#include "qssim/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qssim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void require_object(const json& j, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* name : allowed)
      if (item.key() == name) known = true;
    if (!known) fail(where, "unknown field \"" + item.key() + "\"");
  }
}

const json& require_field(const json& j, const std::string& where,
                          const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

long require_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

NoiseSpec parse_noise_entry(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::string kind = require_string(require_field(j, where, "kind"),
                                    where + ".kind");
  if (kind == "pauli") {
    require_object(j, where, {"kind", "p_bit", "p_phase"});
    PauliNoise noise;
    if (j.contains("p_bit"))
      noise.p_bit = require_number(j["p_bit"], where + ".p_bit");
    if (j.contains("p_phase"))
      noise.p_phase = require_number(j["p_phase"], where + ".p_phase");
    return noise;
  }
  if (kind == "damping") {
    require_object(j, where, {"kind", "gamma"});
    DampingNoise noise;
    noise.gamma =
        require_number(require_field(j, where, "gamma"), where + ".gamma");
    return noise;
  }
  fail(where + ".kind", "expected \"pauli\" or \"damping\"");
}

std::string format_probability(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

ProtocolConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  require_object(root, "config", {"parties", "noise", "qec", "evaluation"});

  ProtocolConfig cfg;
  cfg.parties = static_cast<int>(
      require_integer(require_field(root, "config", "parties"),
                      "config.parties"));
  if (cfg.parties < 3 || cfg.parties > 8)
    fail("config.parties", "must lie in [3,8]");

  const json& noise = require_field(root, "config", "noise");
  require_object(noise, "config.noise", {"uniform", "per_hop"});
  if (noise.contains("uniform") == noise.contains("per_hop"))
    fail("config.noise", "give exactly one of \"uniform\" or \"per_hop\"");
  if (noise.contains("uniform")) {
    NoiseSpec spec =
        parse_noise_entry(noise["uniform"], "config.noise.uniform");
    cfg.hops.assign(cfg.parties, spec);
  } else {
    const json& hops = noise["per_hop"];
    if (!hops.is_array()) fail("config.noise.per_hop", "expected an array");
    if (static_cast<int>(hops.size()) != cfg.parties)
      fail("config.noise.per_hop",
           "needs exactly one entry per hop (= parties)");
    for (std::size_t i = 0; i < hops.size(); ++i)
      cfg.hops.push_back(parse_noise_entry(
          hops[i], "config.noise.per_hop[" + std::to_string(i) + "]"));
  }

  if (root.contains("qec")) {
    const json& qec = root["qec"];
    require_object(qec, "config.qec", {"scheme", "mode"});
    std::string scheme =
        require_string(require_field(qec, "config.qec", "scheme"),
                       "config.qec.scheme");
    if (scheme == "none") cfg.qec.scheme = CodeScheme::None;
    else if (scheme == "repetition") cfg.qec.scheme = CodeScheme::Repetition;
    else if (scheme == "five_qubit") cfg.qec.scheme = CodeScheme::FiveQubit;
    else if (scheme == "four_qubit") cfg.qec.scheme = CodeScheme::FourQubit;
    else
      fail("config.qec.scheme",
           "expected one of none, repetition, five_qubit, four_qubit");
    if (qec.contains("mode")) {
      std::string mode = require_string(qec["mode"], "config.qec.mode");
      if (mode == "single_cycle") cfg.qec.mode = QecMode::SingleCycle;
      else if (mode == "per_hop") cfg.qec.mode = QecMode::PerHop;
      else fail("config.qec.mode", "expected single_cycle or per_hop");
    }
  }

  if (root.contains("evaluation")) {
    const json& ev = root["evaluation"];
    require_object(ev, "config.evaluation", {"mode", "trials", "seed"});
    std::string mode = require_string(
        require_field(ev, "config.evaluation", "mode"),
        "config.evaluation.mode");
    if (mode == "exact") {
      cfg.evaluation = EvaluationMode::Exact;
      if (ev.contains("trials") || ev.contains("seed"))
        fail("config.evaluation", "trials/seed only apply to monte_carlo");
    } else if (mode == "monte_carlo") {
      cfg.evaluation = EvaluationMode::MonteCarlo;
      if (ev.contains("trials")) {
        cfg.trials = require_integer(ev["trials"], "config.evaluation.trials");
        if (cfg.trials < 1)
          fail("config.evaluation.trials", "must be positive");
      }
      if (ev.contains("seed")) {
        long seed = require_integer(ev["seed"], "config.evaluation.seed");
        if (seed < 0) fail("config.evaluation.seed", "must be nonnegative");
        cfg.seed = static_cast<std::uint64_t>(seed);
      }
    } else {
      fail("config.evaluation.mode", "expected exact or monte_carlo");
    }
  }

  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

ProtocolConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string report_to_json(const ErrorReport& report) {
  json out = json::object();
  if (report.error_exact)
    out["error_exact"] = format_probability(*report.error_exact);
  if (report.error_mc) out["error_mc"] = format_probability(*report.error_mc);
  if (report.mc_stderr)
    out["mc_stderr"] = format_probability(*report.mc_stderr);
  if (report.trials) out["trials"] = *report.trials;
  if (report.seed) out["seed"] = *report.seed;
  if (!report.per_tuple.empty()) {
    json tuples = json::object();
    for (const auto& [label, value] : report.per_tuple)
      tuples[label] = format_probability(value);
    out["per_tuple"] = tuples;
  }
  return out.dump(2) + "\n";
}

}  // namespace qssim
