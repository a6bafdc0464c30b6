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

#include "defclust/io.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <system_error>
#include <unistd.h>

#include "defclust/error.h"
#include "json.hpp"

namespace defclust {

namespace {

using nlohmann::json;

std::string FormatExact(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string FormatHalf(std::uint64_t twice) {
  std::string out = std::to_string(twice / 2);
  if (twice % 2 != 0) out += ".5";
  return out;
}

std::vector<std::string> ReadIdArray(const json& value,
                                     const std::string& where) {
  if (!value.is_array()) throw DataError(where + "expected an array of ids");
  std::vector<std::string> ids;
  for (const json& id : value) {
    if (!id.is_string()) throw DataError(where + "ids must be strings");
    ids.push_back(id.get<std::string>());
  }
  return ids;
}

}  // namespace

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

void WriteClusteringJson(std::ostream& out, const Clustering& clustering,
                         std::span<const std::string> doc_ids) {
  json groups = json::array();
  for (const auto& group : clustering.groups) {
    json members = json::array();
    for (std::size_t item : group) members.push_back(doc_ids[item]);
    groups.push_back(std::move(members));
  }
  json ungrouped = json::array();
  for (std::size_t item : clustering.ungrouped) {
    ungrouped.push_back(doc_ids[item]);
  }
  json doc = json::object();
  doc["alpha"] = clustering.alpha;
  doc["groups"] = std::move(groups);
  doc["ungrouped"] = std::move(ungrouped);
  out << doc.dump() << '\n';
}

LoadedClustering ParseClusteringJson(std::istream& in,
                                     std::string_view source_name) {
  const std::string where = std::string(source_name) + ": ";
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(where + "malformed clustering JSON (" + e.what() + ")");
  }
  if (!doc.is_object() || !doc.contains("alpha") || !doc["alpha"].is_number() ||
      !doc.contains("groups") || !doc.contains("ungrouped") ||
      !doc["groups"].is_array()) {
    throw DataError(where +
                    "clustering JSON needs \"alpha\", \"groups\", "
                    "\"ungrouped\"");
  }
  LoadedClustering loaded;
  std::set<std::string> seen;
  auto take = [&](const std::string& id) {
    if (!seen.insert(id).second) {
      throw DataError(where + "document \"" + id + "\" appears twice");
    }
    loaded.doc_ids.push_back(id);
    return loaded.doc_ids.size() - 1;
  };
  std::vector<std::vector<std::size_t>> clusters;
  for (const json& group : doc["groups"]) {
    std::vector<std::size_t> members;
    for (const std::string& id : ReadIdArray(group, where)) {
      members.push_back(take(id));
    }
    clusters.push_back(std::move(members));
  }
  for (const std::string& id : ReadIdArray(doc["ungrouped"], where)) {
    clusters.push_back({take(id)});
  }
  const double alpha = doc["alpha"].get<double>();
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DataError(where + "alpha outside [0, 1]");
  }
  // Groups are reported as-is, so any listed group counts regardless of
  // size; singletons in "groups" are kept as groups.
  loaded.clustering.alpha = alpha;
  loaded.clustering.min_size = 1;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (k < doc["groups"].size()) {
      if (!clusters[k].empty()) {
        loaded.clustering.groups.push_back(std::move(clusters[k]));
      }
    } else {
      loaded.clustering.ungrouped.push_back(clusters[k].front());
    }
  }
  if (!loaded.clustering.groups.empty()) {
    std::size_t smallest = loaded.clustering.groups.front().size();
    for (const auto& g : loaded.clustering.groups) {
      smallest = std::min(smallest, g.size());
    }
    loaded.clustering.min_size = smallest;
  }
  return loaded;
}

void WriteSweepCsv(std::ostream& out, std::span<const EvalRow> rows,
                   int alpha_decimals) {
  const int decimals = std::max(2, alpha_decimals);
  out << "alpha,num_groups,precision,recall,zone\n";
  for (const EvalRow& row : rows) {
    out << FormatFixed(row.alpha, decimals) << ',' << row.num_groups << ','
        << FormatFixed(row.precision, 6) << ',' << FormatFixed(row.recall, 6)
        << ',' << ToString(row.zone) << '\n';
  }
}

void WriteDendrogramCsv(std::ostream& out, const Dendrogram& dendrogram) {
  out << "left_id,right_id,distance,new_id\n";
  for (const Merge& m : dendrogram.merges()) {
    out << m.left << ',' << m.right << ',' << FormatExact(m.distance) << ','
        << m.id << '\n';
  }
}

void WriteEnergyCsv(std::ostream& out, const EnergyMatrix& energy,
                    std::span<const std::string> doc_ids) {
  out << "id";
  for (const std::string& id : doc_ids) out << ',' << CsvField(id);
  out << '\n';
  for (std::size_t i = 0; i < energy.size(); ++i) {
    out << CsvField(doc_ids[i]);
    for (std::size_t j = 0; j < energy.size(); ++j) {
      out << ',' << FormatHalf(energy.twice_energy(i, j));
    }
    out << '\n';
  }
}

void WriteDistanceCsv(std::ostream& out, const PairwiseDistances& distances,
                      std::span<const std::string> doc_ids) {
  out << "id_i,id_j,distance\n";
  const std::size_t n = distances.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out << CsvField(doc_ids[i]) << ',' << CsvField(doc_ids[j]) << ','
          << FormatExact(distances.at(i, j)) << '\n';
    }
  }
}

void WriteCandidatesJsonl(std::ostream& out,
                          std::span<const CandidateContext> cands) {
  for (const CandidateContext& c : cands) {
    json record = json::object();
    record["source_id"] = c.source_id;
    record["span"] = json::array({c.begin, c.end});
    record["term"] = c.term;
    record["pattern"] = c.pattern.surface();
    record["def_type"] = std::string(ToString(c.pattern.def_type()));
    record["tail"] = c.tail;
    out << record.dump() << '\n';
  }
}

void WriteCorpusJsonl(std::ostream& out, std::span<const Document> docs) {
  for (const Document& d : docs) {
    json record = json::object();
    record["id"] = d.id;
    record["text"] = d.text;
    if (d.term) record["term"] = *d.term;
    if (d.def_type) record["def_type"] = std::string(ToString(*d.def_type));
    if (d.gold_sense) record["gold_sense"] = *d.gold_sense;
    out << record.dump() << '\n';
  }
}

void WriteReport(std::ostream& out, const Clustering& clustering,
                 std::span<const Document> docs,
                 std::optional<std::span<const std::string>> labels) {
  std::vector<bool> intruder(docs.size(), false);
  if (labels) {
    for (std::size_t item : IdentifyIntruders(clustering, *labels)) {
      intruder[item] = true;
    }
  }
  const Zone zone = ClassifyZone(clustering.alpha);
  out << "alpha " << FormatFixed(clustering.alpha, 2) << " ("
      << ToString(zone) << "), " << clustering.groups.size()
      << " groups of >= " << clustering.min_size << ", "
      << clustering.grouped_count() << "/" << docs.size()
      << " documents grouped\n";
  out << "# " << ZoneBoundaryNote() << "\n";

  for (std::size_t g = 0; g < clustering.groups.size(); ++g) {
    std::vector<std::size_t> members = clustering.groups[g];
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) {
                return docs[a].id < docs[b].id;
              });
    out << "\n== group " << (g + 1) << " (" << members.size() << " members";
    if (labels) {
      // The group sense is whatever label the non-intruders share.
      for (std::size_t item : members) {
        if (!intruder[item]) {
          out << ", sense " << (*labels)[item];
          break;
        }
      }
    }
    out << ")\n";
    for (std::size_t item : members) {
      out << (intruder[item] ? "  ! " : "    ") << docs[item].id;
      if (labels && intruder[item]) out << " [" << (*labels)[item] << "]";
      out << ": " << docs[item].text << '\n';
    }
  }
  if (!clustering.ungrouped.empty()) {
    out << "\n== ungrouped (" << clustering.ungrouped.size() << ")\n";
    for (std::size_t item : clustering.ungrouped) {
      out << "    " << docs[item].id << '\n';
    }
  }
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw DataError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DataError("cannot move output into place at " + path.string() +
                    ": " + ec.message());
  }
}

}  // namespace defclust
