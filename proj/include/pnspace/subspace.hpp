/*
 * Copyright 2026 The pnspace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PNSPACE_SUBSPACE_HPP
#define PNSPACE_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pnspace/rng.hpp"
#include "pnspace/vector.hpp"

namespace pns {

/**
 * Linear subspace W of R^n (finite basis) or the named c00 testbed
 * {p in c00 : sum_i p_i = 0}, which is dense in c00 under l2 and linf.
 */
class Subspace {
 public:
  /// Span of linearly independent vectors in R^n. An empty basis is {theta}.
  static Subspace span(std::vector<Vector> basis, std::size_t ambient_dim);
  static Subspace c00_sum_kernel();

  bool is_c00_sum_kernel() const { return sum_kernel_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  /// Orthonormal basis of W as columns (finite case).
  const Eigen::MatrixXd& orthonormal() const { return q_; }

  /// Membership with residual below 1e-10 of the input scale.
  bool contains(const Vector& p) const;

  /// Orthogonal (l2) projection onto W; finite case only.
  Vector project(const Vector& p) const;

  /// Deterministic coset representative: the minimal-l2 one p - proj(p) for a
  /// finite basis, s * e_1 (s = coordinate sum) for the c00 testbed.
  Vector canonical(const Vector& p) const;

  /// Random member of W with orthonormal coefficients in [-radius, radius]
  /// (finite case) or a random zero-sum vector (c00).
  Vector sample(Rng& rng, double radius = 1.0) const;

  /// c00 testbed only: q_n in W with |p - q_n|_inf < 1/n, built by spreading
  /// the coordinate sum of p over fresh coordinates past its support.
  Vector c00_witness(const Vector& p, std::size_t n) const;

  void check_vector(const Vector& p) const;
  std::string describe() const;

 private:
  Subspace() = default;

  bool sum_kernel_ = false;
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  Eigen::MatrixXd q_;
};

/// p ~_W q iff p - q in W. Throws InvalidArgument on a dimension mismatch.
bool coset_equal(const Vector& p, const Vector& q, const Subspace& w);

/// inf_{w in W} |p + w| together with an attaining w.
struct SubspaceDistance {
  double distance = 0.0;
  Vector minimizer;  // w in W with |p + w| = distance
};

/**
 * Exact distance from p to W in the given norm. l2 uses the orthogonal
 * projection; l1 and linf enumerate the vertices of the equivalent linear
 * program. The c00 testbed is predicate-only and raises Unsupported.
 */
SubspaceDistance distance_to_subspace(const Vector& p, const Subspace& w, NormKind norm);

inline double dist_to_subspace(const Vector& p, const Subspace& w, NormKind norm) {
  return distance_to_subspace(p, w, norm).distance;
}

}  // namespace pns

#endif  // PNSPACE_SUBSPACE_HPP
