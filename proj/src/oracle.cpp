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

#include "pnspace/oracle.hpp"

#include <cmath>
#include <vector>

#include "pnspace/error.hpp"

namespace pns::oracle {

namespace {

constexpr double kNudge = 1e-9;

// F(x - h) - h <= G(x) <= F(x + h) + h on the probes inside (-1/h, 1/h).
bool condition(const DistFn& f, const DistFn& g, double h, const std::vector<double>& probes) {
  const double edge = 1.0 / h;
  for (double x : probes) {
    if (!(x > -edge && x < edge)) continue;
    const double gx = g.eval(x);
    if (f.eval(x - h) - h > gx + 1e-15) return false;
    if (gx > f.eval(x + h) + h + 1e-15) return false;
  }
  return true;
}

}  // namespace

double sibley_grid(const DistFn& f, const DistFn& g, double step) {
  if (!(step > 0.0 && step <= 1.0)) throw InvalidArgument("oracle step must lie in (0, 1]");
  std::vector<double> breaks;
  for (const Step& s : f.steps()) breaks.push_back(s.at);
  for (const Step& s : g.steps()) breaks.push_back(s.at);
  const auto steps = static_cast<long>(std::ceil(1.0 / step - 1e-9));
  for (long k = 1; k <= steps; ++k) {
    const double h = std::min(1.0, static_cast<double>(k) * step);
    std::vector<double> probes;
    for (double b : breaks)
      for (double c : {b - h, b, b + h})
        for (double d : {-kNudge, 0.0, kNudge}) probes.push_back(c + d);
    for (double d : {kNudge, 2 * kNudge}) {
      probes.push_back(-1.0 / h + d);
      probes.push_back(1.0 / h - d);
    }
    probes.push_back(0.0);
    if (condition(f, g, h, probes) && condition(g, f, h, probes)) return h;
  }
  return 1.0;
}

}  // namespace pns::oracle
