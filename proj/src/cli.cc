// Copyright 2026 The erasurelab Authors
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

#include "erasurelab/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>

#include <CLI11.hpp>

#include "erasurelab/codes.h"
#include "erasurelab/gates.h"
#include "erasurelab/verify.h"

namespace erasurelab::cli {

namespace {

constexpr std::uint64_t kChannelStream = 0x6368616e6e656cULL;

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ConfigError("invalid " + what + ": '" + text + "'");
  return value;
}

CodeSpec build_code(const CodeSelector& sel) {
  switch (sel.kind) {
    case CodeSelector::Kind::kSix: return six_qubit_logical_basis();
    case CodeSelector::Kind::kW5: return w_code();
    case CodeSelector::Kind::kHiding: return hiding_code(sel.hiding_n);
    case CodeSelector::Kind::kFile:
      try {
        return load_code_file(sel.path);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
  }
  throw ConfigError("unknown code");
}

DecoherenceIsometry make_channel(const RunConfig& config, std::uint64_t trial) {
  const ChannelSpec& ch = config.channel;
  const std::uint64_t seed = derive_seed(config.seed, kChannelStream, trial);
  switch (ch.kind) {
    case ChannelSpec::Kind::kPauli: return pauli_error(ch.pauli);
    case ChannelSpec::Kind::kRandom: return random_decoherence(seed, ch.env_dim);
    case ChannelSpec::Kind::kLeak: return leakage_decoherence(seed, ch.leak_dim, ch.env_dim, config.leak_weight);
  }
  throw ConfigError("unknown channel");
}

void validate_common(const RunConfig& config) {
  if (config.trials < 1 || config.trials > kMaxTrials) {
    throw ConfigError("trials out of range 1.." + std::to_string(kMaxTrials));
  }
  if (!(config.tolerance > 0.0 && config.tolerance < 1.0)) {
    throw ConfigError("tolerance must lie in (0, 1)");
  }
}

json_t meta_json(const RunConfig& config) {
  return json_t{{"seed", config.seed},
                {"code", config.code.to_string()},
                {"command", config.command},
                {"tolerance", config.tolerance}};
}

std::string pauli_name(PauliKind k) {
  switch (k) {
    case PauliKind::kI: return "I";
    case PauliKind::kX: return "X";
    case PauliKind::kY: return "Y";
    case PauliKind::kZ: return "Z";
  }
  return "?";
}

}  // namespace

//============================================================================
// Parsing
//============================================================================

std::string ChannelSpec::to_string() const {
  switch (kind) {
    case Kind::kPauli: return "pauli:" + pauli_name(pauli);
    case Kind::kRandom: return "random:" + std::to_string(env_dim);
    case Kind::kLeak: return "leak:" + std::to_string(leak_dim) + "," + std::to_string(env_dim);
  }
  return "?";
}

ChannelSpec parse_channel(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("channel must look like pauli:K, random:E or leak:D,E");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  ChannelSpec spec;
  if (kind == "pauli") {
    spec.kind = ChannelSpec::Kind::kPauli;
    spec.env_dim = 1;
    if (arg == "I") spec.pauli = PauliKind::kI;
    else if (arg == "X") spec.pauli = PauliKind::kX;
    else if (arg == "Y") spec.pauli = PauliKind::kY;
    else if (arg == "Z") spec.pauli = PauliKind::kZ;
    else throw ConfigError("unknown Pauli '" + arg + "' (expected I, X, Y or Z)");
  } else if (kind == "random") {
    spec.kind = ChannelSpec::Kind::kRandom;
    spec.env_dim = parse_int(arg, "environment dimension");
  } else if (kind == "leak") {
    spec.kind = ChannelSpec::Kind::kLeak;
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw ConfigError("leak channel must look like leak:D,E");
    spec.leak_dim = parse_int(arg.substr(0, comma), "leak dimension");
    spec.env_dim = parse_int(arg.substr(comma + 1), "environment dimension");
    if (spec.leak_dim < 3 || spec.leak_dim > kMaxLeakDim) {
      throw ConfigError("leak dimension out of range 3.." + std::to_string(kMaxLeakDim));
    }
  } else {
    throw ConfigError("unknown channel kind '" + kind + "'");
  }
  if (spec.env_dim < 1 || spec.env_dim > kMaxEnvDim) {
    throw ConfigError("environment dimension out of range 1.." + std::to_string(kMaxEnvDim));
  }
  return spec;
}

std::string CodeSelector::to_string() const {
  switch (kind) {
    case Kind::kSix: return "six";
    case Kind::kW5: return "w5";
    case Kind::kHiding: return "hiding:" + std::to_string(hiding_n);
    case Kind::kFile: return "file:" + path;
  }
  return "?";
}

CodeSelector parse_code(const std::string& text) {
  CodeSelector sel;
  if (text == "six") {
    sel.kind = CodeSelector::Kind::kSix;
  } else if (text == "w5") {
    sel.kind = CodeSelector::Kind::kW5;
  } else if (text.rfind("hiding:", 0) == 0) {
    sel.kind = CodeSelector::Kind::kHiding;
    sel.hiding_n = parse_int(text.substr(7), "hiding qubit count");
    if (sel.hiding_n < 1 || sel.hiding_n > kMaxHidingQubits) {
      throw ConfigError("n out of range: hiding:n accepts 1.." + std::to_string(kMaxHidingQubits));
    }
  } else {
    throw ConfigError("unknown code '" + text + "' (expected six, w5 or hiding:n)");
  }
  return sel;
}

//============================================================================
// Commands
//============================================================================

CommandResult cmd_verify(const RunConfig& config) {
  validate_common(config);
  const CodeSpec code = build_code(config.code);
  VerificationReport report;
  report.seed = config.seed;
  for (int p = 0; p < code.n_physical(); ++p) {
    report.append(check_kl_general(code, single_site_errors(code.dims(), p), config.tolerance));
  }
  for (int p = 0; p < code.n_physical(); ++p) {
    report.append(check_erasure_kl(code, p, config.tolerance));
  }
  report.append(check_hiding(code, config.seed, config.trials, config.tolerance));

  json_t doc{{"meta", meta_json(config)}, {"checks", checks_to_json(report)}, {"trials", json_t::array()}};
  return CommandResult{report.all_passed() ? kExitOk : kExitCheckFailed, dump_json(doc)};
}

CommandResult cmd_recover(const RunConfig& config) {
  validate_common(config);
  const CodeSpec code = build_code(config.code);
  if (config.bad_position < 0 || config.bad_position >= code.n_physical()) {
    throw ConfigError("position out of range 0.." + std::to_string(code.n_physical() - 1));
  }
  try {
    (void)make_channel(config, 0);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid channel: ") + e.what());
  }

  const bool use_circuits = config.code.kind == CodeSelector::Kind::kSix && !config.synthesized;
  std::optional<RecoveryPlan> plan;
  std::optional<SynthesizedDecoder> decoder;
  VerificationReport report;
  report.seed = config.seed;
  if (use_circuits) {
    plan = recovery_for(config.bad_position);
  } else {
    try {
      decoder = synthesize_recovery(code, config.bad_position, config.tolerance);
    } catch (const std::length_error& e) {
      throw ConfigError(e.what());
    } catch (const RecoveryError& e) {
      report.add("synthesize_recovery", e.worst_deviation(), config.tolerance, e.what());
      json_t meta = meta_json(config);
      meta["position"] = config.bad_position;
      json_t doc{{"meta", meta}, {"checks", checks_to_json(report)}, {"trials", json_t::array()}};
      return CommandResult{kExitCheckFailed, dump_json(doc)};
    }
  }
  const Circuit encoder = six_qubit_encoder();

  json_t trials = json_t::array();
  double min_f = 1.0, min_p = 1.0, sum_f = 0.0, sum_p = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    const auto index = static_cast<std::uint64_t>(t);
    const cvector_t coords = random_coordinates(code.logical_dim(), config.seed, index);
    const ErasureEvent event{config.bad_position, make_channel(config, index)};
    const TrialResult r = use_circuits ? run_recovery_trial(encoder, MessageState(3, coords), event, *plan)
                                    : run_synthesized_trial(code, coords, event, *decoder);
    trials.push_back({{"index", t}, {"fidelity", r.fidelity}, {"purity", r.purity}});
    min_f = std::min(min_f, r.fidelity);
    min_p = std::min(min_p, r.purity);
    sum_f += r.fidelity;
    sum_p += r.purity;
  }
  report.add("min_fidelity", 1.0 - min_f, config.tolerance);
  report.add("min_purity", 1.0 - min_p, config.tolerance);

  json_t meta = meta_json(config);
  meta["position"] = config.bad_position;
  meta["channel"] = config.channel.to_string();
  meta["decoder"] = use_circuits ? "circuit" : "synthesized";
  meta["trials"] = config.trials;
  json_t doc{{"meta", meta},
             {"checks", checks_to_json(report)},
             {"trials", std::move(trials)},
             {"summary",
              {{"min_fidelity", min_f},
               {"mean_fidelity", sum_f / config.trials},
               {"min_purity", min_p},
               {"mean_purity", sum_p / config.trials}}}};
  return CommandResult{report.all_passed() ? kExitOk : kExitCheckFailed, dump_json(doc)};
}

CommandResult cmd_share_demo(const RunConfig& config) {
  validate_common(config);
  if (config.code.kind != CodeSelector::Kind::kHiding) {
    throw ConfigError("share-demo needs --code hiding:n");
  }
  const int n = config.code.hiding_n;
  const Circuit encoder = hiding_encoder(n);
  const MessageState message(n, random_coordinates(1 << n, config.seed, 0));
  const PureState shared = apply_circuit(with_ancillas(message, 2 * n), encoder);

  VerificationReport report;
  report.seed = config.seed;
  json_t marginals = json_t::array();
  const cmatrix_t mixed = cmatrix_t::Identity(2, 2) / 2.0;
  for (int s = 0; s < 2 * n; ++s) {
    const std::vector<int> keep{s};
    const DensityMatrix rho = partial_trace(shared, keep);
    report.add("marginal[site=" + std::to_string(s) + "]", (rho.matrix() - mixed).cwiseAbs().maxCoeff(),
               config.tolerance);
    json_t entries = json_t::array();
    for (Eigen::Index i = 0; i < 2; ++i) {
      for (Eigen::Index j = 0; j < 2; ++j) {
        entries.push_back(json_t::array({rho.matrix()(i, j).real(), rho.matrix()(i, j).imag()}));
      }
    }
    marginals.push_back({{"site", s}, {"rho", std::move(entries)}});
  }

  // All receivers together undo the encoder and read the message back.
  const PureState joint = apply_circuit(shared, invert_circuit(encoder));
  std::vector<int> message_sites(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) message_sites[static_cast<std::size_t>(i)] = i;
  const double f = fidelity_with_pure(partial_trace(joint, message_sites), message.as_state());
  report.add("joint_reconstruction", 1.0 - f, config.tolerance);

  json_t doc{{"meta", meta_json(config)},
             {"checks", checks_to_json(report)},
             {"trials", json_t::array()},
             {"marginals", std::move(marginals)},
             {"reconstruction_fidelity", f}};
  return CommandResult{report.all_passed() ? kExitOk : kExitCheckFailed, dump_json(doc)};
}

//============================================================================
// Front end
//============================================================================

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Six-qubit erasure code simulator and verifier", "erasurelab"};
  app.require_subcommand(1);

  RunConfig config;
  std::string code_text = "six";
  std::string code_file;
  std::string channel_text = "random:4";
  std::optional<std::uint64_t> seed;
  double leak_weight = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed (default 42, or $ERASURELAB_SEED)");
    sub->add_option("--trials", config.trials, "Number of random messages")->capture_default_str();
    sub->add_option("--tol", config.tolerance, "Pass/fail tolerance")->capture_default_str();
    sub->add_option("--out", config.output_path, "Write the JSON report here instead of stdout");
    sub->add_option("--code", code_text, "six | w5 | hiding:n")->capture_default_str();
  };

  CLI::App* verify = app.add_subcommand("verify", "Certify a code against the erasure conditions");
  add_common(verify);
  verify->add_option("--code-file", code_file, "JSON code file to certify instead of --code");

  CLI::App* recover = app.add_subcommand("recover", "Encode, erase, decode and recover random messages");
  add_common(recover);
  recover->add_option("--pos", config.bad_position, "Known position of the bad qubit")->capture_default_str();
  recover->add_option("--channel", channel_text, "pauli:K | random:E | leak:D,E")->capture_default_str();
  recover->add_option("--leak-weight", leak_weight, "Fixed leaked weight in [0,1] for leak channels");
  recover->add_flag("--synthesized", config.synthesized, "Use the synthesized decoder for the six-qubit code");

  CLI::App* share = app.add_subcommand("share-demo", "Split a message over 2n receivers");
  add_common(share);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    config.code = parse_code(code_text);
    if (!code_file.empty()) {
      config.code.kind = CodeSelector::Kind::kFile;
      config.code.path = code_file;
    }
    if (seed) {
      config.seed = *seed;
    } else if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
      std::uint64_t v = 0;
      const char* end = env + std::char_traits<char>::length(env);
      auto [ptr, ec] = std::from_chars(env, end, v);
      if (ec != std::errc() || ptr != end) throw ConfigError(std::string("invalid ") + kSeedEnvVar);
      config.seed = v;
    }

    CommandResult result;
    if (verify->parsed()) {
      config.command = "verify";
      result = cmd_verify(config);
    } else if (recover->parsed()) {
      config.command = "recover";
      config.channel = parse_channel(channel_text);
      if (recover->count("--leak-weight") > 0) {
        if (!(leak_weight >= 0.0 && leak_weight <= 1.0)) throw ConfigError("leak weight must lie in [0, 1]");
        config.leak_weight = leak_weight;
      }
      result = cmd_recover(config);
    } else {
      config.command = "share-demo";
      result = cmd_share_demo(config);
    }

    if (config.output_path.empty()) {
      out << result.json;
    } else {
      std::ofstream file(config.output_path, std::ios::binary);
      if (!file) throw ConfigError("cannot write " + config.output_path);
      file << result.json;
    }
    if (result.exit_code != kExitOk) err << "erasurelab: " << config.command << ": checks failed\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    err << "erasurelab: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "erasurelab: error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace erasurelab::cli
