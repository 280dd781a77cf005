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

#include "pnspace/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pnspace/error.hpp"

namespace pns {

namespace {

constexpr double kMembershipTol = 1e-10;
// Enumeration budget for the l1 / linf vertex search.
constexpr std::size_t kMaxVertices = 2'000'000;

Eigen::VectorXd to_eigen(const Vector& p, std::size_t n) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) x[static_cast<Eigen::Index>(i)] = p[i];
  return x;
}

Vector from_eigen(const Eigen::VectorXd& x) {
  return Vector(std::vector<double>(x.data(), x.data() + x.size()));
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// Calls visit(rows) for every increasing k-subset of {0..n-1}.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Subspace Subspace::span(std::vector<Vector> basis, std::size_t ambient_dim) {
  if (ambient_dim == 0) throw InvalidArgument("subspace: ambient dimension must be positive");
  if (basis.size() > ambient_dim)
    throw InvalidArgument("subspace: more basis vectors than the ambient dimension");
  Eigen::MatrixXd b(static_cast<Eigen::Index>(ambient_dim),
                    static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].support() > ambient_dim)
      throw InvalidArgument("subspace: basis vector " + std::to_string(j) +
                            " has more than " + std::to_string(ambient_dim) + " coordinates");
    for (double x : basis[j].coords())
      if (!std::isfinite(x)) throw InvalidArgument("subspace: non-finite basis coordinate");
    b.col(static_cast<Eigen::Index>(j)) = to_eigen(basis[j], ambient_dim);
  }
  Subspace w;
  w.ambient_dim_ = ambient_dim;
  if (!basis.empty()) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(b);
    qr.setThreshold(1e-10);
    if (qr.rank() != static_cast<Eigen::Index>(basis.size()))
      throw InvalidArgument("subspace: basis vectors are linearly dependent");
    Eigen::HouseholderQR<Eigen::MatrixXd> hqr(b);
    w.q_ = hqr.householderQ() * Eigen::MatrixXd::Identity(b.rows(), b.cols());
  } else {
    w.q_ = Eigen::MatrixXd(static_cast<Eigen::Index>(ambient_dim), 0);
  }
  for (auto& v : basis) v = v.resized(ambient_dim);
  w.basis_ = std::move(basis);
  return w;
}

Subspace Subspace::c00_sum_kernel() {
  Subspace w;
  w.sum_kernel_ = true;
  return w;
}

void Subspace::check_vector(const Vector& p) const {
  for (double x : p.coords())
    if (!std::isfinite(x)) throw InvalidArgument("vector has a non-finite coordinate");
  if (!sum_kernel_ && p.support() > ambient_dim_)
    throw InvalidArgument("vector " + p.describe() + " does not live in R^" +
                          std::to_string(ambient_dim_));
}

bool Subspace::contains(const Vector& p) const {
  check_vector(p);
  if (sum_kernel_) {
    double sum = 0.0, scale = 1.0;
    for (double x : p.coords()) {
      sum += x;
      scale = std::max(scale, std::abs(x));
    }
    return std::abs(sum) <= kMembershipTol * scale * static_cast<double>(std::max<std::size_t>(p.size(), 1));
  }
  Eigen::VectorXd x = to_eigen(p, ambient_dim_);
  Eigen::VectorXd r = x - q_ * (q_.transpose() * x);
  return r.norm() <= kMembershipTol * std::max(1.0, x.norm());
}

Vector Subspace::project(const Vector& p) const {
  if (sum_kernel_) throw Unsupported("orthogonal projection onto the c00 sum kernel");
  check_vector(p);
  Eigen::VectorXd x = to_eigen(p, ambient_dim_);
  return from_eigen(q_ * (q_.transpose() * x));
}

Vector Subspace::canonical(const Vector& p) const {
  check_vector(p);
  if (sum_kernel_) {
    double s = 0.0;
    for (double x : p.coords()) s += x;
    return Vector{s};
  }
  Vector r = p.resized(ambient_dim_) - project(p);
  // Clean rounding noise so canonical representatives compare exactly.
  std::vector<double> c(r.coords().begin(), r.coords().end());
  double scale = std::max(1.0, norm(p, NormKind::linf));
  for (double& x : c)
    if (std::abs(x) < 1e-14 * scale) x = 0.0;
  return Vector(std::move(c));
}

Vector Subspace::sample(Rng& rng, double radius) const {
  if (sum_kernel_) {
    std::size_t k = 2 + rng.index(5);
    std::vector<double> c(k);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      c[i] = rng.uniform(-radius, radius);
      sum += c[i];
    }
    c[k - 1] = -sum;
    return Vector(std::move(c));
  }
  Eigen::VectorXd coef(q_.cols());
  for (Eigen::Index j = 0; j < coef.size(); ++j) coef[j] = rng.uniform(-radius, radius);
  return from_eigen(q_ * coef);
}

Vector Subspace::c00_witness(const Vector& p, std::size_t n) const {
  if (!sum_kernel_) throw Unsupported("c00 witnesses exist only for the c00 sum kernel");
  if (n == 0) throw InvalidArgument("c00 witness index must be positive");
  double s = 0.0;
  for (double x : p.coords()) s += x;
  if (s == 0.0) return p;
  auto m = static_cast<std::size_t>(std::floor(std::abs(s) * static_cast<double>(n))) + 1;
  std::size_t k = p.support();
  std::vector<double> c(k + m);
  for (std::size_t i = 0; i < k; ++i) c[i] = p[i];
  for (std::size_t i = 0; i < m; ++i) c[k + i] = -s / static_cast<double>(m);
  return Vector(std::move(c));
}

std::string Subspace::describe() const {
  if (sum_kernel_) return "c00-sum-kernel";
  std::ostringstream os;
  os << "span{";
  for (std::size_t j = 0; j < basis_.size(); ++j) os << (j ? ", " : "") << basis_[j].describe();
  os << "} in R^" << ambient_dim_;
  return os.str();
}

bool coset_equal(const Vector& p, const Vector& q, const Subspace& w) {
  w.check_vector(p);
  w.check_vector(q);
  return w.contains(p - q);
}

SubspaceDistance distance_to_subspace(const Vector& p, const Subspace& w, NormKind kind) {
  if (w.is_c00_sum_kernel())
    throw Unsupported("distance to the c00 sum kernel is not computed exactly; "
                      "use the sampled quotient norm");
  w.check_vector(p);
  const std::size_t n = w.ambient_dim();
  const std::size_t k = w.dim();
  const Eigen::MatrixXd& q = w.orthonormal();
  Eigen::VectorXd a = to_eigen(p, n);

  // l2 optimum; also a safe candidate for the other norms.
  Eigen::VectorXd c2 = -(q.transpose() * a);
  auto value = [&](const Eigen::VectorXd& c) {
    return norm(from_eigen(a + q * c), kind);
  };
  Eigen::VectorXd best_c = c2;
  double best = value(c2);

  if (kind != NormKind::l2 && k > 0 && k < n) {
    std::size_t rows = kind == NormKind::l1 ? k : k + 1;
    double count = binomial(n, rows) * (kind == NormKind::l1 ? 1.0 : std::ldexp(1.0, static_cast<int>(rows)));
    if (count > static_cast<double>(kMaxVertices))
      throw Unsupported("exact " + std::string(to_string(kind)) + " distance needs " +
                        std::to_string(static_cast<long long>(count)) + " vertex solves");
    auto consider = [&](const Eigen::VectorXd& c) {
      double v = value(c);
      if (v < best) {
        best = v;
        best_c = c;
      }
    };
    for_each_subset(n, rows, [&](const std::vector<std::size_t>& idx) {
      if (kind == NormKind::l1) {
        // k residuals vanish.
        Eigen::MatrixXd m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
        Eigen::VectorXd rhs(static_cast<Eigen::Index>(k));
        for (std::size_t r = 0; r < k; ++r) {
          m.row(static_cast<Eigen::Index>(r)) = q.row(static_cast<Eigen::Index>(idx[r]));
          rhs[static_cast<Eigen::Index>(r)] = -a[static_cast<Eigen::Index>(idx[r])];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        if (lu.isInvertible()) consider(lu.solve(rhs));
        return;
      }
      // linf: k + 1 residuals equal +-t.
      for (std::size_t signs = 0; signs < (std::size_t{1} << rows); ++signs) {
        Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(k + 1));
        Eigen::VectorXd rhs(static_cast<Eigen::Index>(rows));
        for (std::size_t r = 0; r < rows; ++r) {
          double s = (signs >> r) & 1 ? -1.0 : 1.0;
          auto i = static_cast<Eigen::Index>(idx[r]);
          m.block(static_cast<Eigen::Index>(r), 0, 1, static_cast<Eigen::Index>(k)) = s * q.row(i);
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = -1.0;
          rhs[static_cast<Eigen::Index>(r)] = -s * a[i];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        if (!lu.isInvertible()) continue;
        Eigen::VectorXd sol = lu.solve(rhs);
        consider(sol.head(static_cast<Eigen::Index>(k)));
      }
    });
  }
  SubspaceDistance out;
  out.distance = best;
  out.minimizer = from_eigen(q * best_c);
  return out;
}

}  // namespace pns
