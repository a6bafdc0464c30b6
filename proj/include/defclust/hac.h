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

// Complete-linkage agglomerative clustering with a distance-threshold cut.

#ifndef DEFCLUST_HAC_H_
#define DEFCLUST_HAC_H_

#include <cstddef>
#include <span>
#include <vector>

#include "defclust/distance.h"

namespace defclust {

// Leaves are clusters 0..n-1; merge k creates cluster n+k.
struct Merge {
  std::size_t left;
  std::size_t right;
  double distance;
  std::size_t id;

  friend bool operator==(const Merge&, const Merge&) = default;
};

class Dendrogram {
 public:
  // Validates the structure: n-1 merges, non-decreasing distances, ids
  // created in sequence and each consumed at most once. Throws
  // std::invalid_argument otherwise.
  Dendrogram(std::size_t leaf_count, std::vector<Merge> merges);

  std::size_t leaf_count() const { return leaf_count_; }
  const std::vector<Merge>& merges() const { return merges_; }

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;

 private:
  std::size_t leaf_count_;
  std::vector<Merge> merges_;
};

// Largest distance between a member of `a` and a member of `b`. Throws
// std::invalid_argument if either set is empty or they overlap.
double CompleteLinkageDistance(std::span<const std::size_t> a,
                               std::span<const std::size_t> b,
                               const PairwiseDistances& distances);

// Repeatedly merges the two closest clusters until one remains. A cluster
// is named by its smallest member; among equally close pairs the one with
// the lexicographically least (smaller name, larger name) goes first, and
// that cluster becomes the merge's left child. Needs n >= 2.
//
// Runs in O(n^2) memory; time is O(n^2) per merge in the worst case.
Dendrogram BuildDendrogram(const PairwiseDistances& distances);

struct Clustering {
  double alpha = 0.0;
  std::size_t min_size = 2;
  // Each group sorted ascending; groups ordered by their first member.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> ungrouped;

  std::size_t grouped_count() const;
  std::size_t item_count() const { return grouped_count() + ungrouped.size(); }

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

// Replays every merge at distance <= alpha, in order. Clusters with at
// least min_size members become groups. Throws std::invalid_argument when
// alpha is outside [0, 1] or min_size is 0.
Clustering CutAtThreshold(const Dendrogram& dendrogram, double alpha,
                          std::size_t min_size = 2);

// Builds a Clustering from arbitrary disjoint clusters covering 0..n-1.
Clustering MakeClustering(std::vector<std::vector<std::size_t>> clusters,
                          double alpha, std::size_t min_size);

}  // namespace defclust

#endif  // DEFCLUST_HAC_H_
