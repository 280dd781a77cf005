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

#ifndef PNSPACE_TNORM_HPP
#define PNSPACE_TNORM_HPP

#include <memory>
#include <string>
#include <vector>

#include "pnspace/report.hpp"

namespace pns {

enum class TNormKind { minimum, product, lukasiewicz, table };

/// Grid-sampled t-norm, bilinearly interpolated between nodes i / (n - 1).
struct TNormTable {
  std::size_t n = 0;
  std::vector<double> values;  // row-major, values[i * n + j] = T(a_i, a_j)

  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/**
 * Triangular norm on [0, 1].
 *
 * Table kinds are validated at construction for commutativity, monotonicity
 * and the boundary T(a, 1) = a at every grid node. Associativity of an
 * interpolated table is not guaranteed; see check_tnorm_associativity.
 */
class TNorm {
 public:
  static TNorm minimum() { return TNorm(TNormKind::minimum); }
  static TNorm product() { return TNorm(TNormKind::product); }
  static TNorm lukasiewicz() { return TNorm(TNormKind::lukasiewicz); }
  static TNorm from_table(TNormTable table);

  /// "min", "prod", "luk" (also "M", "Pi", "W").
  static TNorm from_name(const std::string& name);

  TNormKind kind() const { return kind_; }
  std::string name() const;

  /// Unchecked evaluation; inputs assumed in [0, 1].
  double operator()(double a, double b) const;

  bool operator==(const TNorm& other) const {
    return kind_ == other.kind_ && table_ == other.table_;
  }

 private:
  explicit TNorm(TNormKind kind) : kind_(kind) {}

  TNormKind kind_;
  std::shared_ptr<const TNormTable> table_;
};

/// T(a, b) with range checks; throws InvalidArgument outside [0, 1].
double tnorm_eval(const TNorm& t, double a, double b);

/// T*(a, b) = 1 - T(1 - a, 1 - b).
class TConorm {
 public:
  explicit TConorm(TNorm base) : base_(std::move(base)) {}

  double operator()(double a, double b) const {
    return 1.0 - base_(1.0 - a, 1.0 - b);
  }

  /// The t-norm whose conorm this is, so that (T*)* = T.
  const TNorm& dual() const { return base_; }

 private:
  TNorm base_;
};

inline TConorm tconorm_of(const TNorm& t) { return TConorm(t); }

/// Sampled associativity check on grid triples (evidence only for tables).
VerificationReport check_tnorm_associativity(const TNorm& t, std::size_t grid,
                                             double tol = 1e-9);

}  // namespace pns

#endif  // PNSPACE_TNORM_HPP
