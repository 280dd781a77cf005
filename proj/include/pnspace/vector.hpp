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

#ifndef PNSPACE_VECTOR_HPP
#define PNSPACE_VECTOR_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pns {

/**
 * Real vector with implicit zero padding.
 *
 * Fixed-dimension spaces use it as a coordinate tuple; the c00 model uses it
 * as a finitely supported sequence, where coordinates past size() are zero.
 * Arithmetic pads the shorter operand.
 */
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> coords) : c_(std::move(coords)) {}
  Vector(std::initializer_list<double> coords) : c_(coords) {}

  static Vector zero(std::size_t n) { return Vector(std::vector<double>(n, 0.0)); }
  /// e_i (0-based) in a space of dimension n (n = 0: shortest support).
  static Vector unit(std::size_t i, std::size_t n = 0);

  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }
  double& at(std::size_t i);
  std::span<const double> coords() const { return c_; }

  /// Index one past the last nonzero coordinate.
  std::size_t support() const;
  bool is_zero() const { return support() == 0; }

  /// Copy resized to n coordinates (pads with zeros or truncates).
  Vector resized(std::size_t n) const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(double s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(double s, Vector a) { return a *= s; }
  friend Vector operator*(Vector a, double s) { return a *= s; }

  /// Equal up to trailing zeros.
  bool operator==(const Vector& o) const;

  std::string describe() const;

 private:
  std::vector<double> c_;
};

enum class NormKind { l1, l2, linf };

/// "l1", "l2", "linf".
NormKind norm_kind_from_name(const std::string& name);
const char* to_string(NormKind kind);

double norm(const Vector& p, NormKind kind);

}  // namespace pns

#endif  // PNSPACE_VECTOR_HPP
