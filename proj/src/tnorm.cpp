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

#include "pnspace/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pnspace/error.hpp"

namespace pns {

namespace {

constexpr double kTableTol = 1e-12;

double node(std::size_t i, std::size_t n) {
  return static_cast<double>(i) / static_cast<double>(n - 1);
}

double interpolate(const TNormTable& t, double a, double b) {
  const double scale = static_cast<double>(t.n - 1);
  const double fa = std::clamp(a, 0.0, 1.0) * scale;
  const double fb = std::clamp(b, 0.0, 1.0) * scale;
  const auto i = std::min(static_cast<std::size_t>(fa), t.n - 2);
  const auto j = std::min(static_cast<std::size_t>(fb), t.n - 2);
  const double u = fa - static_cast<double>(i);
  const double v = fb - static_cast<double>(j);
  return (1 - u) * (1 - v) * t.at(i, j) + u * (1 - v) * t.at(i + 1, j) +
         (1 - u) * v * t.at(i, j + 1) + u * v * t.at(i + 1, j + 1);
}

}  // namespace

TNorm TNorm::from_table(TNormTable table) {
  const std::size_t n = table.n;
  if (n < 2 || table.values.size() != n * n)
    throw InvalidArgument("t-norm table needs an n x n grid with n >= 2");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = table.at(i, j);
      if (!(v >= 0.0 && v <= 1.0))
        throw InvalidArgument("t-norm table value outside [0, 1]");
      if (std::abs(v - table.at(j, i)) > kTableTol)
        throw InvalidArgument("t-norm table is not commutative");
      if (i + 1 < n && table.at(i + 1, j) < v - kTableTol)
        throw InvalidArgument("t-norm table is not nondecreasing");
    }
    if (std::abs(table.at(i, n - 1) - node(i, n)) > kTableTol)
      throw InvalidArgument("t-norm table violates T(a, 1) = a");
  }
  TNorm t(TNormKind::table);
  t.table_ = std::make_shared<const TNormTable>(std::move(table));
  return t;
}

TNorm TNorm::from_name(const std::string& name) {
  if (name == "min" || name == "M" || name == "minimum") return minimum();
  if (name == "prod" || name == "Pi" || name == "product") return product();
  if (name == "luk" || name == "W" || name == "lukasiewicz") return lukasiewicz();
  throw InvalidArgument("unknown t-norm '" + name + "' (expected min, prod or luk)");
}

std::string TNorm::name() const {
  switch (kind_) {
    case TNormKind::minimum: return "min";
    case TNormKind::product: return "prod";
    case TNormKind::lukasiewicz: return "luk";
    case TNormKind::table: return "table" + std::to_string(table_->n);
  }
  return "unknown";
}

double TNorm::operator()(double a, double b) const {
  switch (kind_) {
    case TNormKind::minimum: return std::min(a, b);
    case TNormKind::product: return a * b;
    case TNormKind::lukasiewicz: return std::max(a + b - 1.0, 0.0);
    case TNormKind::table: return interpolate(*table_, a, b);
  }
  return 0.0;
}

double tnorm_eval(const TNorm& t, double a, double b) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
    throw InvalidArgument("t-norm arguments must lie in [0, 1]");
  return t(a, b);
}

VerificationReport check_tnorm_associativity(const TNorm& t, std::size_t grid,
                                             double tol) {
  if (grid < 2) throw InvalidArgument("associativity grid needs >= 2 nodes");
  VerificationReport report;
  report.check = "tnorm_associativity";
  MarginTracker tracker;
  std::size_t index = 0;
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = 0; j < grid; ++j)
      for (std::size_t k = 0; k < grid; ++k, ++index) {
        const double a = node(i, grid), b = node(j, grid), c = node(k, grid);
        const double gap = std::abs(t(t(a, b), c) - t(a, t(b, c)));
        tracker.observe(tol - gap, index, [&] {
          std::ostringstream os;
          os.precision(17);
          os << "a=" << a << " b=" << b << " c=" << c << " gap=" << gap;
          return os.str();
        });
      }
  report.samples = index;
  tracker.finish(report, "T(T(a,b),c) != T(a,T(b,c))");
  return report;
}

}  // namespace pns
