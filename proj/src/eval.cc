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

#include "defclust/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <unordered_map>

#include "defclust/error.h"
#include "json.hpp"
#include "unicode.h"

namespace defclust {

namespace {

struct Decimal {
  std::int64_t digits = 0;
  int decimals = 0;
};

Decimal ParseDecimal(std::string_view text) {
  Decimal out;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      if (out.digits > (INT64_MAX - 9) / 10 || out.decimals >= 9) {
        throw std::invalid_argument("grid value too precise: " +
                                    std::string(text));
      }
      out.digits = out.digits * 10 + (c - '0');
      if (seen_point) ++out.decimals;
      seen_digit = true;
    } else {
      throw std::invalid_argument("malformed grid value: \"" +
                                  std::string(text) + "\"");
    }
  }
  if (!seen_digit) {
    throw std::invalid_argument("malformed grid value: \"" +
                                std::string(text) + "\"");
  }
  return out;
}

std::int64_t Pow10(int exp) {
  std::int64_t v = 1;
  while (exp-- > 0) v *= 10;
  return v;
}

std::int64_t ToHundredths(double value) {
  const double scaled = value * 100.0;
  const auto rounded = static_cast<std::int64_t>(std::llround(scaled));
  if (std::abs(scaled - static_cast<double>(rounded)) > 1e-6) {
    throw std::invalid_argument("grid values must be whole hundredths");
  }
  return rounded;
}

}  // namespace

GoldAnnotation GoldAnnotation::FromDocuments(std::span<const Document> docs) {
  GoldAnnotation gold;
  for (const Document& doc : docs) {
    if (doc.gold_sense) gold.sense_of[doc.id] = *doc.gold_sense;
  }
  return gold;
}

GoldAnnotation GoldAnnotation::Parse(std::istream& in,
                                     std::string_view source_name) {
  GoldAnnotation gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (unicode::Trim(line).empty()) continue;
    const std::string where =
        std::string(source_name) + ":" + std::to_string(line_no) + ": ";
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(where + "malformed JSON record (" + e.what() + ")");
    }
    if (!record.is_object() || !record.contains("id") ||
        !record.contains("sense") || !record["id"].is_string() ||
        !record["sense"].is_string()) {
      throw DataError(where + "gold records need string \"id\" and \"sense\"");
    }
    const std::string id = record["id"].get<std::string>();
    const std::string sense = record["sense"].get<std::string>();
    const auto [it, inserted] = gold.sense_of.emplace(id, sense);
    if (!inserted && it->second != sense) {
      throw DataError(where + "conflicting senses for id \"" + id + "\"");
    }
  }
  return gold;
}

GoldAnnotation GoldAnnotation::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open gold annotation " + path.string());
  return Parse(in, path.string());
}

std::vector<std::string> GoldAnnotation::LabelsFor(
    std::span<const std::string> ids) const {
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (const std::string& id : ids) {
    const auto it = sense_of.find(id);
    if (it == sense_of.end()) {
      throw DataError("no gold sense for document \"" + id + "\"");
    }
    labels.push_back(it->second);
  }
  return labels;
}

double Recall(const Clustering& clustering, std::size_t total) {
  if (total == 0) throw std::invalid_argument("recall over zero documents");
  const std::size_t grouped = clustering.grouped_count();
  if (grouped > total) {
    throw std::invalid_argument("more grouped items than documents");
  }
  return static_cast<double>(grouped) / static_cast<double>(total);
}

std::vector<std::size_t> IdentifyIntruders(
    const Clustering& clustering, std::span<const std::string> labels) {
  std::vector<std::size_t> intruders;
  for (const auto& group : clustering.groups) {
    std::unordered_map<std::string_view, std::size_t> counts;
    for (std::size_t item : group) {
      if (item >= labels.size()) {
        throw std::out_of_range("item without a label slot");
      }
      ++counts[labels[item]];
    }
    std::string_view sense;
    std::size_t best = 0;
    for (std::size_t item : group) {
      const std::size_t c = counts[labels[item]];
      if (c > best) {
        best = c;
        sense = labels[item];
      }
    }
    for (std::size_t item : group) {
      if (labels[item] != sense) intruders.push_back(item);
    }
  }
  std::sort(intruders.begin(), intruders.end());
  return intruders;
}

std::vector<std::size_t> IdentifyIntruders(
    const Clustering& clustering, std::span<const std::string> doc_ids,
    const GoldAnnotation& gold) {
  std::vector<std::string> labels(doc_ids.size());
  for (const auto& group : clustering.groups) {
    for (std::size_t item : group) {
      if (item >= doc_ids.size()) {
        throw std::out_of_range("grouped item has no document id");
      }
      const auto it = gold.sense_of.find(doc_ids[item]);
      if (it == gold.sense_of.end()) {
        throw DataError("no gold sense for grouped document \"" +
                        doc_ids[item] + "\"");
      }
      labels[item] = it->second;
    }
  }
  return IdentifyIntruders(clustering, labels);
}

double Precision(const Clustering& clustering,
                 std::span<const std::size_t> intruders) {
  std::vector<bool> grouped;
  std::size_t grouped_count = 0;
  for (const auto& group : clustering.groups) {
    for (std::size_t item : group) {
      if (item >= grouped.size()) grouped.resize(item + 1, false);
      grouped[item] = true;
      ++grouped_count;
    }
  }
  std::vector<std::size_t> distinct(intruders.begin(), intruders.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  for (std::size_t item : distinct) {
    if (item >= grouped.size() || !grouped[item]) {
      throw std::invalid_argument("intruder " + std::to_string(item) +
                                  " is not in any group");
    }
  }
  if (grouped_count == 0) return 0.0;
  return static_cast<double>(grouped_count - distinct.size()) /
         static_cast<double>(grouped_count);
}

std::string_view ToString(Zone zone) {
  switch (zone) {
    case Zone::kZone1:
      return "zone1";
    case Zone::kZone2:
      return "zone2";
    case Zone::kZone3:
      return "zone3";
    case Zone::kAbsolute:
      return "absolute";
  }
  return "zone1";
}

Zone ClassifyZone(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (alpha <= 0.70) return Zone::kZone1;
  if (alpha <= 0.85) return Zone::kZone2;
  if (alpha < 1.0) return Zone::kZone3;
  return Zone::kAbsolute;
}

std::string_view ZoneBoundaryNote() {
  return "zones: zone1 alpha<=0.70, zone2 0.70<alpha<=0.85, "
         "zone3 0.85<alpha<1.00, absolute alpha=1.00 "
         "(nominal ranges 0-0.7, 0.75-0.85, 0.85-0.99 closed into a partition)";
}

SweepGrid SweepGrid::Parse(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t colon = text.find(':', begin);
    fields.push_back(text.substr(begin, colon - begin));
    if (colon == std::string_view::npos) break;
    begin = colon + 1;
  }
  if (fields.size() != 3) {
    throw std::invalid_argument("grid must be START:END:STEP, got \"" +
                                std::string(text) + "\"");
  }
  Decimal parts[3];
  int decimals = 2;
  for (int k = 0; k < 3; ++k) {
    parts[k] = ParseDecimal(fields[k]);
    decimals = std::max(decimals, parts[k].decimals);
  }
  SweepGrid grid;
  grid.scale = Pow10(decimals);
  auto rescale = [&](const Decimal& d) {
    return d.digits * Pow10(decimals - d.decimals);
  };
  grid.start = rescale(parts[0]);
  grid.end = rescale(parts[1]);
  grid.step = rescale(parts[2]);
  grid.Validate();
  return grid;
}

SweepGrid SweepGrid::FromValues(double start, double end, double step) {
  SweepGrid grid{ToHundredths(start), ToHundredths(end), ToHundredths(step),
                 100};
  grid.Validate();
  return grid;
}

void SweepGrid::Validate() const {
  if (scale <= 0 || start <= 0 || start > end || end > scale || step <= 0) {
    throw std::invalid_argument(
        "grid needs 0 < start <= end <= 1 and step > 0");
  }
}

std::size_t SweepGrid::size() const {
  return static_cast<std::size_t>((end - start) / step) + 1;
}

double SweepGrid::AlphaAt(std::size_t k) const {
  const std::int64_t ticks = start + static_cast<std::int64_t>(k) * step;
  return static_cast<double>(ticks) / static_cast<double>(scale);
}

int SweepGrid::decimals() const {
  int d = 0;
  for (std::int64_t s = scale; s > 1; s /= 10) ++d;
  return d;
}

EvalRow Evaluate(const Clustering& clustering,
                 std::span<const std::string> labels) {
  const std::vector<std::size_t> intruders =
      IdentifyIntruders(clustering, labels);
  EvalRow row;
  row.alpha = clustering.alpha;
  row.num_groups = clustering.groups.size();
  row.precision = Precision(clustering, intruders);
  row.recall = Recall(clustering, labels.size());
  row.zone = ClassifyZone(clustering.alpha);
  return row;
}

std::vector<EvalRow> RunSweep(const Dendrogram& dendrogram,
                              std::span<const std::string> doc_ids,
                              const GoldAnnotation& gold,
                              const SweepGrid& grid, std::size_t min_size) {
  grid.Validate();
  if (doc_ids.size() != dendrogram.leaf_count()) {
    throw std::invalid_argument("one document id per dendrogram leaf needed");
  }
  const std::vector<std::string> labels = gold.LabelsFor(doc_ids);
  std::vector<EvalRow> rows;
  rows.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Clustering clustering =
        CutAtThreshold(dendrogram, grid.AlphaAt(k), min_size);
    rows.push_back(Evaluate(clustering, labels));
    if (k > 0 && rows[k].recall < rows[k - 1].recall) {
      throw std::logic_error("recall decreased along the sweep");
    }
  }
  return rows;
}

}  // namespace defclust
