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

#ifndef ERASURELAB_CLI_H
#define ERASURELAB_CLI_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "erasurelab/noise.h"
#include "erasurelab/report.h"

namespace erasurelab::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kDefaultTrials = 25;
inline constexpr int kMaxTrials = 100000;
inline constexpr int kMaxEnvDim = 64;
inline constexpr int kMaxLeakDim = 16;
inline constexpr const char* kSeedEnvVar = "ERASURELAB_SEED";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ChannelSpec {
  enum class Kind { kPauli, kRandom, kLeak };
  Kind kind = Kind::kRandom;
  PauliKind pauli = PauliKind::kI;
  int env_dim = 4;
  int leak_dim = 3;

  std::string to_string() const;
};

// "pauli:X", "random:4", "leak:3,4".
ChannelSpec parse_channel(const std::string& text);

struct CodeSelector {
  enum class Kind { kSix, kW5, kHiding, kFile };
  Kind kind = Kind::kSix;
  int hiding_n = 0;
  std::string path;

  std::string to_string() const;
};

// "six", "w5", "hiding:n".
CodeSelector parse_code(const std::string& text);

struct RunConfig {
  std::string command;
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  double tolerance = kPipelineTol;
  CodeSelector code;
  int bad_position = 0;
  ChannelSpec channel;
  std::optional<double> leak_weight;
  bool synthesized = false;
  std::string output_path;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string json;
};

// Each command builds its report from `config` alone; identical configs give
// byte-identical JSON. ConfigError propagates for invalid settings.
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_recover(const RunConfig& config);
CommandResult cmd_share_demo(const RunConfig& config);

// Full front end: parses argv, honours ERASURELAB_SEED, writes the report to
// `out` (or --out) and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace erasurelab::cli

#endif  // ERASURELAB_CLI_H
