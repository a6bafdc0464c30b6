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

#include "defclust/hac.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace defclust {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Ordering key of a candidate merge between the clusters named a and b.
struct PairKey {
  double distance;
  std::size_t low;
  std::size_t high;

  static PairKey Of(double d, std::size_t a, std::size_t b) {
    return a < b ? PairKey{d, a, b} : PairKey{d, b, a};
  }
  bool operator<(const PairKey& o) const {
    return std::tie(distance, low, high) < std::tie(o.distance, o.low, o.high);
  }
};

}  // namespace

Dendrogram::Dendrogram(std::size_t leaf_count, std::vector<Merge> merges)
    : leaf_count_(leaf_count), merges_(std::move(merges)) {
  if (leaf_count_ == 0) {
    throw std::invalid_argument("dendrogram needs at least one leaf");
  }
  if (merges_.size() != leaf_count_ - 1) {
    throw std::invalid_argument("dendrogram over " +
                                std::to_string(leaf_count_) +
                                " leaves needs " +
                                std::to_string(leaf_count_ - 1) + " merges");
  }
  std::vector<bool> consumed(2 * leaf_count_ - 1, false);
  for (std::size_t k = 0; k < merges_.size(); ++k) {
    const Merge& m = merges_[k];
    if (m.id != leaf_count_ + k) {
      throw std::invalid_argument("merge ids must be n, n+1, ...");
    }
    for (std::size_t child : {m.left, m.right}) {
      if (child >= m.id || consumed[child]) {
        throw std::invalid_argument("merge " + std::to_string(m.id) +
                                    " reuses or forward-references cluster " +
                                    std::to_string(child));
      }
      consumed[child] = true;
    }
    if (m.left == m.right) {
      throw std::invalid_argument("merge of a cluster with itself");
    }
    if (k > 0 && m.distance < merges_[k - 1].distance) {
      throw std::invalid_argument("merge distances must be non-decreasing");
    }
  }
}

double CompleteLinkageDistance(std::span<const std::size_t> a,
                               std::span<const std::size_t> b,
                               const PairwiseDistances& distances) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("complete linkage of an empty cluster");
  }
  double worst = 0.0;
  for (std::size_t x : a) {
    for (std::size_t y : b) {
      if (x == y) {
        throw std::invalid_argument("clusters overlap at item " +
                                    std::to_string(x));
      }
      worst = std::max(worst, distances.at(x, y));
    }
  }
  return worst;
}

Dendrogram BuildDendrogram(const PairwiseDistances& distances) {
  const std::size_t n = distances.size();
  if (n < 2) throw std::invalid_argument("need at least two items to cluster");

  // Slot s holds the cluster whose smallest member is s, so slot indices
  // double as tie-break names. Merging keeps the lower slot.
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i * n + j] = dist[j * n + i] = distances.at(i, j);
    }
  }
  std::vector<bool> active(n, true);
  std::vector<std::size_t> node_id(n);
  for (std::size_t i = 0; i < n; ++i) node_id[i] = i;

  std::vector<std::size_t> nearest(n, kNone);
  auto refresh = [&](std::size_t s) {
    nearest[s] = kNone;
    PairKey best{};
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s || !active[t]) continue;
      const PairKey key = PairKey::Of(dist[s * n + t], s, t);
      if (nearest[s] == kNone || key < best) {
        best = key;
        nearest[s] = t;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) refresh(s);

  std::vector<Merge> merges;
  merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t a = kNone;
    PairKey best{};
    for (std::size_t s = 0; s < n; ++s) {
      if (!active[s]) continue;
      const PairKey key = PairKey::Of(dist[s * n + nearest[s]], s, nearest[s]);
      if (a == kNone || key < best) {
        best = key;
        a = s;
      }
    }
    const std::size_t low = best.low;
    const std::size_t high = best.high;
    merges.push_back({node_id[low], node_id[high], best.distance, n + step});

    // Lance-Williams update for complete linkage.
    active[high] = false;
    node_id[low] = n + step;
    for (std::size_t t = 0; t < n; ++t) {
      if (!active[t] || t == low) continue;
      const double d = std::max(dist[low * n + t], dist[high * n + t]);
      dist[low * n + t] = dist[t * n + low] = d;
    }
    // Distances to the merged cluster only grow, so only clusters whose
    // nearest neighbour was one of the pair need a rescan.
    for (std::size_t t = 0; t < n; ++t) {
      if (!active[t]) continue;
      if (t == low || nearest[t] == low || nearest[t] == high) refresh(t);
    }
  }
  return Dendrogram(n, std::move(merges));
}

std::size_t Clustering::grouped_count() const {
  std::size_t count = 0;
  for (const auto& g : groups) count += g.size();
  return count;
}

Clustering MakeClustering(std::vector<std::vector<std::size_t>> clusters,
                          double alpha, std::size_t min_size) {
  if (min_size == 0) throw std::invalid_argument("min_size must be positive");
  Clustering out;
  out.alpha = alpha;
  out.min_size = min_size;
  for (auto& cluster : clusters) {
    if (cluster.empty()) continue;
    std::sort(cluster.begin(), cluster.end());
    if (cluster.size() >= min_size) {
      out.groups.push_back(std::move(cluster));
    } else {
      out.ungrouped.insert(out.ungrouped.end(), cluster.begin(),
                           cluster.end());
    }
  }
  std::sort(out.groups.begin(), out.groups.end());
  std::sort(out.ungrouped.begin(), out.ungrouped.end());
  return out;
}

Clustering CutAtThreshold(const Dendrogram& dendrogram, double alpha,
                          std::size_t min_size) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  const std::size_t n = dendrogram.leaf_count();
  std::vector<std::vector<std::size_t>> members(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (const Merge& m : dendrogram.merges()) {
    if (m.distance > alpha) break;
    auto& merged = members[m.id];
    merged = std::move(members[m.left]);
    merged.insert(merged.end(), members[m.right].begin(),
                  members[m.right].end());
    members[m.left].clear();
    members[m.right].clear();
  }
  return MakeClustering(std::move(members), alpha, min_size);
}

}  // namespace defclust
