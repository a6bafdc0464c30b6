// Copyright 2026 The defclust Authors
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

// Command-line front end: extract, cluster, sweep, eval, report.
//
// Exit status is 0 on success, 1 for usage errors, 2 for data errors.

#ifndef DEFCLUST_CLI_H_
#define DEFCLUST_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "defclust/corpus.h"
#include "defclust/distance.h"
#include "defclust/eval.h"

namespace defclust::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kExtract, kCluster, kSweep, kEval, kReport };

struct RunConfig {
  Command command = Command::kCluster;
  std::vector<std::filesystem::path> inputs;
  // stdout when unset.
  std::optional<std::filesystem::path> output;

  DistanceKind distance = DistanceKind::kEnergy;
  EnergyMode distance_mode = EnergyMode::kInverted;
  std::optional<double> alpha;
  std::optional<SweepGrid> grid;
  std::size_t min_size = 2;
  CorpusFormat format = CorpusFormat::kJsonl;

  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> phrases;
  bool drop_defined_term = false;

  // extract
  std::optional<std::filesystem::path> patterns;
  std::vector<std::string> terms;
  std::optional<std::filesystem::path> terms_file;
  bool as_corpus = false;

  // cluster debug dumps
  std::optional<std::filesystem::path> dendrogram_csv;
  std::optional<std::filesystem::path> energy_csv;
  std::optional<std::filesystem::path> distances_csv;

  // Throws UsageError on invalid flag combinations.
  void Validate() const;
};

// Runs a validated config. Result files go to config.output or `out`;
// notes and warnings go to `err`. Throws UsageError, DataError or
// std::invalid_argument.
void Execute(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name), executes, and
// maps failures to exit statuses.
int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace defclust::cli

#endif  // DEFCLUST_CLI_H_
