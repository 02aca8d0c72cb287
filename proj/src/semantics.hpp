// Copyright 2026 The sbs Authors
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

#ifndef SBS_SEMANTICS_HPP_
#define SBS_SEMANTICS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "network.hpp"

namespace sbs {

/// A term's strongest textual associations: its neighbors by weight,
/// heaviest first, ties broken by term.
struct AssociationList {
  std::string focal;
  std::vector<std::pair<std::string, std::uint64_t>> entries;
};

/// Symmetric cosine-distance matrix over a list of terms, entries in [0, 1],
/// zero diagonal. Stored row-major.
struct DistanceMatrix {
  std::vector<std::string> terms;
  std::vector<double> d;

  double at(std::size_t i, std::size_t j) const {
    return d[i * terms.size() + j];
  }
};

/// Plot-ready 2-D coordinates, centered on the origin.
struct Embedding2D {
  std::vector<std::string> terms;
  std::vector<std::array<double, 2>> coords;
};

AssociationList associations(const CooccurrenceNetwork& net,
                             std::string_view focal, std::size_t top_n);

// Each term is represented by its co-occurrence weight vector over all
// nodes; when comparing u and v the dimensions u and v are zeroed in both
// vectors so the pair's own arc cannot dominate. Distance = 1 - cosine;
// a pair with an all-zero masked vector is maximally distant (1).
DistanceMatrix concept_distances(const CooccurrenceNetwork& net,
                                 std::span<const std::string> terms);

// Classical (Torgerson) multidimensional scaling: double-center the squared
// distances and embed with the top-2 eigenpairs. Deterministic sign
// convention: the first nonzero coordinate of each axis is positive.
// Throws Error(degenerate) when fewer than two nonnegative eigenvalues
// remain; small negative eigenvalues elsewhere are clamped with a notice.
Embedding2D embed_mds(const DistanceMatrix& dm);

}  // namespace sbs

#endif  // SBS_SEMANTICS_HPP_
