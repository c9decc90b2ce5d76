// Copyright 2026 The ontovsm Authors.
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

#ifndef ONTOVSM_TOOLS_COMMANDS_HPP_
#define ONTOVSM_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ontovsm/eval.hpp"
#include "ontovsm/index.hpp"
#include "ontovsm/retrieval.hpp"

namespace ontovsm::cli {

struct CliConfig {
  std::filesystem::path taxonomy;
  std::filesystem::path kb;
  std::filesystem::path corpus;
  std::filesystem::path queries;
  std::filesystem::path qrels;
  std::filesystem::path index;
  std::filesystem::path out;
  std::filesystem::path stopwords;
  std::vector<std::filesystem::path> runs;  // eval inputs

  std::vector<ModelKind> models{kAllModels.begin(), kAllModels.end()};
  ModelConfig model_config;  // 0.25 each, alpha 0.5
  Interpolation interpolation = Interpolation::kStandard;
  std::size_t top_k = 1000;
  Space dump_space = Space::kUnified;
};

// "kw,ne-o" → models. Throws kUnknownModel.
std::vector<ModelKind> parse_models(const std::string& list);
// "wN,wC,wNC,wI" → weights set on cfg. Throws kInvalidConfig.
void parse_weights(const std::string& list, ModelConfig& cfg);
// "standard" | "windowed". Throws kInvalidArgument.
Interpolation parse_interpolation(const std::string& mode);

// Each command writes its outputs and a short summary to `log`, and throws
// ontovsm::Error on failure.
void cmd_build_index(const CliConfig& config, std::ostream& log);
void cmd_search(const CliConfig& config, std::ostream& log);
void cmd_eval(const CliConfig& config, std::ostream& log);
void cmd_annotate(const CliConfig& config, std::ostream& log);
void cmd_compare(const CliConfig& config, std::ostream& log);
void cmd_dump(const CliConfig& config, std::ostream& log);

// Parses argv and runs the command. Failures print one line
// "error: <code>: <message>" to err and return nonzero.
int run_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ontovsm::cli

#endif  // ONTOVSM_TOOLS_COMMANDS_HPP_
