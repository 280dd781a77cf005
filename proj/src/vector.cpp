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

#include "pnspace/vector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pnspace/error.hpp"

namespace pns {

Vector Vector::unit(std::size_t i, std::size_t n) {
  if (n != 0 && i >= n) throw InvalidArgument("unit vector index out of range");
  std::vector<double> c(std::max(n, i + 1), 0.0);
  c[i] = 1.0;
  return Vector(std::move(c));
}

double& Vector::at(std::size_t i) {
  if (i >= c_.size()) c_.resize(i + 1, 0.0);
  return c_[i];
}

std::size_t Vector::support() const {
  std::size_t n = c_.size();
  while (n > 0 && c_[n - 1] == 0.0) --n;
  return n;
}

Vector Vector::resized(std::size_t n) const {
  std::vector<double> c(c_);
  c.resize(n, 0.0);
  return Vector(std::move(c));
}

Vector Vector::operator-() const {
  Vector r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (auto& x : c_) x *= s;
  return *this;
}

bool Vector::operator==(const Vector& o) const {
  const std::size_t n = std::max(c_.size(), o.c_.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((*this)[i] != o[i]) return false;
  return true;
}

std::string Vector::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ")";
  return os.str();
}

NormKind norm_kind_from_name(const std::string& name) {
  if (name == "l1") return NormKind::l1;
  if (name == "l2") return NormKind::l2;
  if (name == "linf") return NormKind::linf;
  throw InvalidArgument("unknown norm '" + name + "' (expected l1, l2 or linf)");
}

const char* to_string(NormKind kind) {
  switch (kind) {
    case NormKind::l1: return "l1";
    case NormKind::l2: return "l2";
    case NormKind::linf: return "linf";
  }
  return "unknown";
}

double norm(const Vector& p, NormKind kind) {
  double acc = 0.0;
  for (double x : p.coords()) {
    switch (kind) {
      case NormKind::l1: acc += std::abs(x); break;
      case NormKind::l2: acc = std::hypot(acc, x); break;
      case NormKind::linf: acc = std::max(acc, std::abs(x)); break;
    }
  }
  return acc;
}

}  // namespace pns
