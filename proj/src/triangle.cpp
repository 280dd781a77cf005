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

#include "pnspace/triangle.hpp"

#include <algorithm>
#include <limits>

#include "pnspace/error.hpp"

namespace pns {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Piece i of a step function is (edge[i], edge[i+1]] with value level[i];
// piece 0 starts at -inf with value 0, the last piece ends at +inf.
struct Pieces {
  std::vector<double> edge;
  std::vector<double> level;

  explicit Pieces(const DistFn& f) {
    edge.push_back(-kInf);
    level.push_back(0.0);
    for (const auto& s : f.steps()) {
      edge.push_back(s.at);
      level.push_back(s.value);
    }
    edge.push_back(kInf);
  }

  std::size_t size() const { return level.size(); }
};

}  // namespace

DistFn tau_T_conv(const TNorm& t, const DistFn& f, const DistFn& g) {
  // T(F(u), G(v)) >= T(f_i, g_j) as soon as u > a_i and v > b_j, so the value
  // T(f_i, g_j) is reached exactly for x > a_i + b_j.
  std::vector<Step> candidates;
  candidates.reserve(f.steps().size() * g.steps().size());
  for (const auto& a : f.steps())
    for (const auto& b : g.steps()) candidates.push_back({a.at + b.at, t(a.value, b.value)});
  std::sort(candidates.begin(), candidates.end(), [](const Step& x, const Step& y) {
    return x.at < y.at || (x.at == y.at && x.value < y.value);
  });
  return DistFn::from_sorted_unchecked(std::move(candidates));
}

DistFn tau_Tstar_conv(const TNorm& t, const DistFn& f, const DistFn& g) {
  const TConorm s(t);
  const Pieces fp(f);
  const Pieces gp(g);

  std::vector<double> cuts;
  for (const auto& a : f.steps())
    for (const auto& b : g.steps()) cuts.push_back(a.at + b.at);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Pair (i, j) is reachable by some u + v = x iff
  // edge_f[i] + edge_g[j] < x <= edge_f[i+1] + edge_g[j+1]. On the open piece
  // (lo, hi) between consecutive cuts that reads sum_lo <= lo, sum_hi >= hi.
  // Taking the infimum on open pieces and assigning it to the left-open
  // plateau is the left-limit regularization.
  auto inf_on_piece = [&](double lo, double hi) {
    double best = 1.0;
    for (std::size_t i = 0; i < fp.size(); ++i) {
      for (std::size_t j = 0; j < gp.size(); ++j) {
        if (fp.edge[i] + gp.edge[j] > lo) continue;
        if (fp.edge[i + 1] + gp.edge[j + 1] < hi) continue;
        best = std::min(best, s(fp.level[i], gp.level[j]));
      }
    }
    return best;
  };

  std::vector<Step> out;
  out.reserve(cuts.size());
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const double hi = k + 1 < cuts.size() ? cuts[k + 1] : kInf;
    out.push_back({cuts[k], inf_on_piece(cuts[k], hi)});
  }
  return DistFn::from_sorted_unchecked(std::move(out));
}

TriangleFn TriangleFn::from_name(const std::string& name) {
  if (name == "tau_M") return tau_M();
  if (name == "tau_M*") return tau_Mstar();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const auto head = name.substr(0, colon);
    const auto tail = name.substr(colon + 1);
    if (head == "tau_T") return tau_T(TNorm::from_name(tail));
    if (head == "tau_T*") return tau_Tstar(TNorm::from_name(tail));
  }
  throw InvalidArgument("unknown triangle function '" + name +
                        "' (expected tau_T:<tnorm>, tau_T*:<tnorm>, tau_M or tau_M*)");
}

std::string TriangleFn::name() const {
  return (kind_ == TriangleKind::sup_convolution ? "tau_T:" : "tau_T*:") + t_.name();
}

DistFn tau_iterate(const TriangleFn& tau, std::span<const DistFn> fs, std::size_t n) {
  if (n < 1) throw InvalidArgument("tau_iterate needs n >= 1");
  if (fs.size() != n + 1)
    throw InvalidArgument("tau_iterate needs exactly n + 1 arguments, got " +
                          std::to_string(fs.size()) + " for n = " + std::to_string(n));
  DistFn acc = fs[0];
  for (std::size_t k = 1; k < fs.size(); ++k) acc = tau(acc, fs[k]);
  return acc;
}

}  // namespace pns
