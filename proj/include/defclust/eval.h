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

// Adapted recall and precision for threshold clusterings, intruder
// detection against gold sense labels, and the threshold sweep.

#ifndef DEFCLUST_EVAL_H_
#define DEFCLUST_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "defclust/corpus.h"
#include "defclust/hac.h"

namespace defclust {

// Gold acception label per document id.
struct GoldAnnotation {
  std::map<std::string, std::string, std::less<>> sense_of;

  // Documents without gold_sense are left out.
  static GoldAnnotation FromDocuments(std::span<const Document> docs);
  // JSONL of {"id": ..., "sense": ...}. Throws DataError on malformed
  // records or conflicting duplicate ids.
  static GoldAnnotation Parse(std::istream& in, std::string_view source_name);
  static GoldAnnotation Load(const std::filesystem::path& path);

  // Throws DataError naming the first id without a label.
  std::vector<std::string> LabelsFor(std::span<const std::string> ids) const;
};

// Fraction of the `total` items that sit in a reported group; 0 when no
// group exists. Throws std::invalid_argument for total == 0 or when the
// clustering holds more items than total.
double Recall(const Clustering& clustering, std::size_t total);

// Within each group the most frequent label is the group's sense; on a
// tie, the label met first in ascending item order wins. Members carrying
// another label are intruders. Returns sorted item indices. Throws
// DataError if a grouped item has no gold label.
std::vector<std::size_t> IdentifyIntruders(
    const Clustering& clustering, std::span<const std::string> doc_ids,
    const GoldAnnotation& gold);

// Same, with labels already aligned to item indices.
std::vector<std::size_t> IdentifyIntruders(const Clustering& clustering,
                                           std::span<const std::string> labels);

// (grouped - intruders) / grouped; 0 when no group exists. Throws
// std::invalid_argument if an intruder is not a grouped item.
double Precision(const Clustering& clustering,
                 std::span<const std::size_t> intruders);

enum class Zone { kZone1, kZone2, kZone3, kAbsolute };

std::string_view ToString(Zone zone);

// zone1: alpha <= 0.70; zone2: (0.70, 0.85]; zone3: (0.85, 1.00);
// absolute: alpha == 1.00. The nominal zone limits overlap at 0.85 and
// leave (0.70, 0.75) uncovered; this partition closes both.
Zone ClassifyZone(double alpha);

// One-line human-readable statement of the partition above.
std::string_view ZoneBoundaryNote();

// Thresholds start/scale, (start+step)/scale, ..., end/scale held as
// integers so grid points never drift by repeated addition.
struct SweepGrid {
  std::int64_t start = 1;
  std::int64_t end = 100;
  std::int64_t step = 1;
  std::int64_t scale = 100;

  // 0.01:1.00:0.01
  static SweepGrid Default() { return {}; }
  // "S:E:STEP" with plain decimals, e.g. "0.5:0.9:0.05". The scale is 100
  // or finer if any field carries more than two decimals.
  static SweepGrid Parse(std::string_view text);
  // Rounds to hundredths; throws if a value is not a whole hundredth.
  static SweepGrid FromValues(double start, double end, double step);

  // Throws std::invalid_argument unless 0 < start <= end <= 1, step > 0.
  void Validate() const;
  std::size_t size() const;
  double AlphaAt(std::size_t k) const;
  // Digits after the decimal point needed to print grid values exactly.
  int decimals() const;
};

struct EvalRow {
  double alpha = 0.0;
  std::size_t num_groups = 0;
  double precision = 0.0;
  double recall = 0.0;
  Zone zone = Zone::kZone1;

  friend bool operator==(const EvalRow&, const EvalRow&) = default;
};

// Evaluates one clustering: groups, intruders, precision, recall, zone.
EvalRow Evaluate(const Clustering& clustering,
                 std::span<const std::string> labels);

// One row per grid point, cut with min_size. doc_ids index the dendrogram
// leaves; gold must label every one of them. Recall is checked to be
// non-decreasing along the grid.
std::vector<EvalRow> RunSweep(const Dendrogram& dendrogram,
                              std::span<const std::string> doc_ids,
                              const GoldAnnotation& gold,
                              const SweepGrid& grid = SweepGrid::Default(),
                              std::size_t min_size = 2);

}  // namespace defclust

#endif  // DEFCLUST_EVAL_H_
