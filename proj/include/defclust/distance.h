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

// Pairwise document distances: the textual-energy distance derived from a
// Hopfield network over the binary document-term matrix, and the
// normalized Hamming baseline. Both produce a PairwiseDistances vector in
// the same flattened upper-triangle order.

#ifndef DEFCLUST_DISTANCE_H_
#define DEFCLUST_DISTANCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "defclust/corpus.h"

namespace defclust {

// Magnitude of the interaction energy between every pair of documents,
//   |E| = 1/2 * (X X^T)(X X^T),
// held as the exact integer 2|E| so no precision is lost to the 1/2.
// Symmetric and non-negative by construction. Storage is O(n^2).
class EnergyMatrix {
 public:
  EnergyMatrix(std::size_t n, std::vector<std::uint64_t> twice_energy);

  std::size_t size() const { return n_; }
  std::uint64_t twice_energy(std::size_t i, std::size_t j) const {
    return values_[i * n_ + j];
  }
  double energy(std::size_t i, std::size_t j) const {
    return static_cast<double>(twice_energy(i, j)) / 2.0;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> values_;
};

// Computes G = X X^T with popcounts over the packed rows, then G G in
// 64-bit integer arithmetic. Throws std::invalid_argument for an empty
// matrix.
EnergyMatrix ComputeEnergyMatrix(const BinaryDocTermMatrix& matrix);

// kInverted: 1 - e_ij / max (similar documents are close).
// kRaw: e_ij / max, the normalized energy taken literally as a distance.
enum class EnergyMode { kInverted, kRaw };

std::string_view ToString(EnergyMode mode);
std::optional<EnergyMode> ParseEnergyMode(std::string_view name);

// One value in [0, 1] per unordered pair i < j, laid out as
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
class PairwiseDistances {
 public:
  // Throws std::invalid_argument if the value count is not n(n-1)/2 or a
  // value lies outside [0, 1].
  PairwiseDistances(std::size_t n, std::vector<double> values);

  std::size_t size() const { return n_; }
  std::span<const double> values() const { return values_; }

  // Zero-based; symmetric in (i, j). Throws std::invalid_argument for i == j
  // and std::out_of_range for indices >= size().
  double at(std::size_t i, std::size_t j) const;

  static std::size_t PairIndex(std::size_t n, std::size_t i, std::size_t j);

 private:
  std::size_t n_;
  std::vector<double> values_;
};

// Off-diagonal energies divided by their maximum (the diagonal self
// energies never enter). When every off-diagonal energy is zero the
// result is all ones (kInverted) or all zeros (kRaw). Needs n >= 2.
PairwiseDistances EnergyDistances(const EnergyMatrix& energy,
                                  EnergyMode mode = EnergyMode::kInverted);

// Fraction of the p positions where two rows differ. Needs n >= 2, p >= 1.
PairwiseDistances HammingDistances(const BinaryDocTermMatrix& matrix);

enum class DistanceKind { kEnergy, kHamming };

std::string_view ToString(DistanceKind kind);
std::optional<DistanceKind> ParseDistanceKind(std::string_view name);

// Dispatches to EnergyDistances (with `mode`) or HammingDistances.
PairwiseDistances ComputeDistances(const BinaryDocTermMatrix& matrix,
                                   DistanceKind kind,
                                   EnergyMode mode = EnergyMode::kInverted);

}  // namespace defclust

#endif  // DEFCLUST_DISTANCE_H_
