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

// File formats: clustering JSON, sweep CSV, dendrogram and distance dumps,
// candidate JSONL, and the plain-text cluster report.

#ifndef DEFCLUST_IO_H_
#define DEFCLUST_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "defclust/corpus.h"
#include "defclust/distance.h"
#include "defclust/eval.h"
#include "defclust/hac.h"
#include "defclust/patterns.h"

namespace defclust {

// Quotes a CSV field when it holds a comma, quote or line break.
std::string CsvField(std::string_view value);

// Fixed notation with `decimals` digits after the point.
std::string FormatFixed(double value, int decimals);

// {"alpha": a, "groups": [[id, ...], ...], "ungrouped": [id, ...]}
void WriteClusteringJson(std::ostream& out, const Clustering& clustering,
                         std::span<const std::string> doc_ids);

struct LoadedClustering {
  Clustering clustering;
  // Item index -> document id: grouped ids in file order, then ungrouped.
  std::vector<std::string> doc_ids;
};

// Throws DataError on malformed input or ids that appear twice.
LoadedClustering ParseClusteringJson(std::istream& in,
                                     std::string_view source_name);

// Header "alpha,num_groups,precision,recall,zone"; alpha printed with
// max(2, alpha_decimals) decimals, metrics with six.
void WriteSweepCsv(std::ostream& out, std::span<const EvalRow> rows,
                   int alpha_decimals = 2);

// Header "left_id,right_id,distance,new_id".
void WriteDendrogramCsv(std::ostream& out, const Dendrogram& dendrogram);

// Square matrix with document ids as row and column headers.
void WriteEnergyCsv(std::ostream& out, const EnergyMatrix& energy,
                    std::span<const std::string> doc_ids);

// Header "id_i,id_j,distance", one line per pair in storage order.
void WriteDistanceCsv(std::ostream& out, const PairwiseDistances& distances,
                      std::span<const std::string> doc_ids);

void WriteCandidatesJsonl(std::ostream& out,
                          std::span<const CandidateContext> cands);
void WriteCorpusJsonl(std::ostream& out, std::span<const Document> docs);

// Groups with member texts in id order, the group sense and flagged
// intruders when labels are given, then the ungrouped ids.
void WriteReport(std::ostream& out, const Clustering& clustering,
                 std::span<const Document> docs,
                 std::optional<std::span<const std::string>> labels);

// Writes to a temporary sibling, then renames over `path`.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content);

}  // namespace defclust

#endif  // DEFCLUST_IO_H_
