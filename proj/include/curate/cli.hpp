// Copyright 2026 The biomed-curate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CURATE_CLI_HPP_
#define CURATE_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace curate {

inline constexpr std::string_view kToolName = "biomed-curate";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kEnvPrefix = "BIOMED_CURATE_";

// Every tunable of the pipeline. Values come from built-in defaults, then a
// key = value config file, then BIOMED_CURATE_* environment variables, then
// command-line flags, later sources winning.
struct PipelineConfig {
  std::string input;
  std::string corpus;
  std::string annotations;
  std::string output;
  std::size_t min_tokens = 64;
  int edu_threshold = 3;
  std::size_t replication_factor = 10;
  std::string language_target = "fr";
  std::size_t context_budget = 8192;
  std::uint64_t seed = 0;
  std::size_t shard_size = 1000;
  std::string token_counter = "whitespace";
  std::string hash = "sha256";
  std::size_t jobs = 1;

  std::size_t sample_size = 400000;
  std::string variant = "be_base";
  std::string clinical_majority = "paragraphs";
  int min_score = 4;
  bool commercial_only = false;
  std::string group_by = "none";
  std::string plot_dir;
  bool strict = false;

  // Throws PipelineError(kConfig) naming the first out-of-range field.
  void validate() const;
  // Sorted "key = value" lines, readable back as a config file.
  std::string snapshot() const;
  // Throws PipelineError(kConfig) for an unknown key or unparsable value.
  void set(std::string_view key, std::string_view value);
};

// Reads `path`: top-level keys, then keys of the `[subcommand]` section.
void load_config_file(PipelineConfig& config, const std::filesystem::path& path,
                      std::string_view subcommand);

// Exit codes: 0 success, 1 validation or pipeline error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, char** argv);

}  // namespace curate

#endif  // CURATE_CLI_HPP_
