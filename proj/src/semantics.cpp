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

#include "semantics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include <Eigen/Dense>

#include "error.hpp"

namespace sbs {

AssociationList associations(const CooccurrenceNetwork& net,
                             std::string_view focal, std::size_t top_n) {
  if (top_n < 1) {
    throw Error(ErrorKind::validation, "semantics: top_n must be >= 1");
  }
  const std::uint32_t id = net.require(focal);
  AssociationList out;
  out.focal = std::string(focal);
  for (const auto& nb : net.neighbors(id)) {
    out.entries.emplace_back(net.term(nb.id), nb.weight);
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  if (out.entries.size() > top_n) out.entries.resize(top_n);
  return out;
}

DistanceMatrix concept_distances(const CooccurrenceNetwork& net,
                                 std::span<const std::string> terms) {
  if (terms.size() < 2) {
    throw Error(ErrorKind::validation,
                "semantics: concept distances need at least 2 terms");
  }
  const std::size_t k = terms.size();
  std::vector<std::uint32_t> ids(k);
  for (std::size_t i = 0; i < k; ++i) ids[i] = net.require(terms[i]);

  // Weight toward a given node, and the full squared norm of each profile.
  auto weight_to = [&](std::uint32_t from, std::uint32_t to) -> double {
    for (const auto& nb : net.neighbors(from)) {
      if (nb.id == to) return static_cast<double>(nb.weight);
      if (nb.id > to) break;  // neighbors sorted by id
    }
    return 0.0;
  };
  std::vector<double> norm_sq(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& nb : net.neighbors(ids[i])) {
      norm_sq[i] += static_cast<double>(nb.weight) *
                    static_cast<double>(nb.weight);
    }
  }

  DistanceMatrix dm;
  dm.terms.assign(terms.begin(), terms.end());
  dm.d.assign(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::uint32_t u = ids[i];
      const std::uint32_t v = ids[j];
      // Masked dot product: skip dimensions u and v in both profiles.
      double dot = 0.0;
      const auto nu = net.neighbors(u);
      const auto nv = net.neighbors(v);
      std::size_t a = 0, b = 0;
      while (a < nu.size() && b < nv.size()) {
        if (nu[a].id == nv[b].id) {
          if (nu[a].id != u && nu[a].id != v) {
            dot += static_cast<double>(nu[a].weight) *
                   static_cast<double>(nv[b].weight);
          }
          ++a;
          ++b;
        } else if (nu[a].id < nv[b].id) {
          ++a;
        } else {
          ++b;
        }
      }
      const double wuv = weight_to(u, v);
      const double nu_sq = norm_sq[i] - wuv * wuv;
      const double nv_sq = norm_sq[j] - wuv * wuv;
      double dist;
      if (nu_sq <= 0.0 || nv_sq <= 0.0) {
        dist = 1.0;
      } else {
        const double cosine = dot / (std::sqrt(nu_sq) * std::sqrt(nv_sq));
        dist = std::clamp(1.0 - cosine, 0.0, 1.0);
      }
      dm.d[i * k + j] = dist;
      dm.d[j * k + i] = dist;
    }
  }
  return dm;
}

Embedding2D embed_mds(const DistanceMatrix& dm) {
  const std::size_t n = dm.terms.size();
  if (n < 3) {
    throw Error(ErrorKind::validation,
                "semantics: MDS needs at least 3 terms");
  }
  Eigen::MatrixXd d2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = dm.at(i, j);
      d2(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = d * d;
    }
  }
  // B = -1/2 J D^2 J with J = I - 11^T/n.
  const Eigen::MatrixXd j_mat =
      Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                static_cast<Eigen::Index>(n)) -
      Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(n),
                                static_cast<Eigen::Index>(n),
                                1.0 / static_cast<double>(n));
  const Eigen::MatrixXd b = -0.5 * j_mat * d2 * j_mat;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::degenerate,
                "semantics: eigendecomposition did not converge");
  }
  const Eigen::VectorXd values = solver.eigenvalues();  // ascending
  const double scale = std::max(1.0, std::abs(values(values.size() - 1)));
  const double tol = 1e-9 * scale;
  double l1 = values(values.size() - 1);
  double l2 = values(values.size() - 2);
  if (l1 < -tol || l2 < -tol) {
    std::ostringstream msg;
    msg << "semantics: degenerate embedding, fewer than 2 nonnegative "
           "eigenvalues (";
    for (Eigen::Index i = values.size() - 1; i >= 0; --i) {
      if (i < values.size() - 1) msg << ", ";
      msg << values(i);
    }
    msg << ")";
    throw Error(ErrorKind::degenerate, msg.str());
  }
  // Eigenvalues within tolerance of zero are treated as exactly zero so
  // degenerate axes come out as clean zero coordinates.
  if (l1 < tol) l1 = 0.0;
  if (l2 < tol) l2 = 0.0;
  if (values(0) < -tol) {
    std::clog << "sbs: note: distance matrix is not Euclidean, negative "
                 "eigenvalues clamped to zero\n";
  }
  Embedding2D out;
  out.terms = dm.terms;
  out.coords.resize(n);
  const Eigen::VectorXd v1 = solver.eigenvectors().col(values.size() - 1);
  const Eigen::VectorXd v2 = solver.eigenvectors().col(values.size() - 2);
  for (std::size_t i = 0; i < n; ++i) {
    out.coords[i][0] = v1(static_cast<Eigen::Index>(i)) * std::sqrt(l1);
    out.coords[i][1] = v2(static_cast<Eigen::Index>(i)) * std::sqrt(l2);
  }
  // Center exactly, then fix each axis sign by its first nonzero entry.
  for (int axis = 0; axis < 2; ++axis) {
    double mean = 0.0;
    for (const auto& c : out.coords) mean += c[axis];
    mean /= static_cast<double>(n);
    for (auto& c : out.coords) c[axis] -= mean;
    for (const auto& c : out.coords) {
      if (std::abs(c[axis]) > 1e-12) {
        if (c[axis] < 0.0) {
          for (auto& flip : out.coords) flip[axis] = -flip[axis];
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace sbs
