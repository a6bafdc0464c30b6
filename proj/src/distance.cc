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

#include "defclust/distance.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace defclust {

EnergyMatrix::EnergyMatrix(std::size_t n, std::vector<std::uint64_t> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw std::invalid_argument("energy matrix must hold n*n values");
  }
}

EnergyMatrix ComputeEnergyMatrix(const BinaryDocTermMatrix& matrix) {
  const std::size_t n = matrix.rows();
  if (n == 0) throw std::invalid_argument("energy of an empty matrix");

  // Gram matrix: shared lexical entities per document pair.
  std::vector<std::uint64_t> gram(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_i = matrix.row_bits(i);
    for (std::size_t k = i; k < n; ++k) {
      const auto row_k = matrix.row_bits(k);
      std::uint64_t shared = 0;
      for (std::size_t w = 0; w < row_i.size(); ++w) {
        shared += std::popcount(row_i[w] & row_k[w]);
      }
      gram[i * n + k] = shared;
      gram[k * n + i] = shared;
    }
  }

  // G symmetric, so (G G)_ij is the dot product of rows i and j.
  std::vector<std::uint64_t> twice(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* gi = gram.data() + i * n;
    for (std::size_t j = i; j < n; ++j) {
      const std::uint64_t* gj = gram.data() + j * n;
      std::uint64_t sum = 0;
      for (std::size_t k = 0; k < n; ++k) sum += gi[k] * gj[k];
      twice[i * n + j] = sum;
      twice[j * n + i] = sum;
    }
  }
  return EnergyMatrix(n, std::move(twice));
}

std::string_view ToString(EnergyMode mode) {
  return mode == EnergyMode::kRaw ? "raw" : "inverted";
}

std::optional<EnergyMode> ParseEnergyMode(std::string_view name) {
  if (name == "inverted") return EnergyMode::kInverted;
  if (name == "raw") return EnergyMode::kRaw;
  return std::nullopt;
}

PairwiseDistances::PairwiseDistances(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  const std::size_t expected = n_ < 2 ? 0 : n_ * (n_ - 1) / 2;
  if (values_.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " pairwise values, got " +
                                std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("pairwise distance outside [0, 1]");
    }
  }
}

std::size_t PairwiseDistances::PairIndex(std::size_t n, std::size_t i,
                                         std::size_t j) {
  if (i > j) std::swap(i, j);
  // Pairs before row i: (n-1) + (n-2) + ... + (n-i).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

double PairwiseDistances::at(std::size_t i, std::size_t j) const {
  if (i == j) {
    throw std::invalid_argument("no distance stored for an item and itself");
  }
  if (i >= n_ || j >= n_) {
    throw std::out_of_range("item index out of range");
  }
  return values_[PairIndex(n_, i, j)];
}

PairwiseDistances EnergyDistances(const EnergyMatrix& energy,
                                  EnergyMode mode) {
  const std::size_t n = energy.size();
  if (n < 2) throw std::invalid_argument("need at least two documents");
  std::uint64_t max = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      max = std::max(max, energy.twice_energy(i, j));
    }
  }
  std::vector<double> values;
  values.reserve(n * (n - 1) / 2);
  const double denom = static_cast<double>(max);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (max == 0) {
        values.push_back(mode == EnergyMode::kInverted ? 1.0 : 0.0);
        continue;
      }
      const std::uint64_t e = energy.twice_energy(i, j);
      // Integer numerator keeps the inverted value to a single rounding.
      const std::uint64_t numer = mode == EnergyMode::kInverted ? max - e : e;
      values.push_back(static_cast<double>(numer) / denom);
    }
  }
  return PairwiseDistances(n, std::move(values));
}

PairwiseDistances HammingDistances(const BinaryDocTermMatrix& matrix) {
  const std::size_t n = matrix.rows();
  if (n < 2) throw std::invalid_argument("need at least two documents");
  if (matrix.cols() == 0) {
    throw std::invalid_argument("Hamming distance needs at least one column");
  }
  const double p = static_cast<double>(matrix.cols());
  std::vector<double> values;
  values.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_i = matrix.row_bits(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto row_j = matrix.row_bits(j);
      std::size_t differ = 0;
      for (std::size_t w = 0; w < row_i.size(); ++w) {
        differ += std::popcount(row_i[w] ^ row_j[w]);
      }
      values.push_back(static_cast<double>(differ) / p);
    }
  }
  return PairwiseDistances(n, std::move(values));
}

std::string_view ToString(DistanceKind kind) {
  return kind == DistanceKind::kHamming ? "hamming" : "energy";
}

std::optional<DistanceKind> ParseDistanceKind(std::string_view name) {
  if (name == "energy") return DistanceKind::kEnergy;
  if (name == "hamming") return DistanceKind::kHamming;
  return std::nullopt;
}

PairwiseDistances ComputeDistances(const BinaryDocTermMatrix& matrix,
                                   DistanceKind kind, EnergyMode mode) {
  if (kind == DistanceKind::kHamming) return HammingDistances(matrix);
  return EnergyDistances(ComputeEnergyMatrix(matrix), mode);
}

}  // namespace defclust
