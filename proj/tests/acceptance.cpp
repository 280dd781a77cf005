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


// Acceptance gate. Each criterion prints one PASS/FAIL line with its wall
// time; a criterion that overruns its time limit fails. Exit status is the
// number of failed criteria (capped at 1).

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pnspace/complete.hpp"
#include "pnspace/error.hpp"
#include "pnspace/formats.hpp"
#include "pnspace/quotient.hpp"
#include "pnspace/space.hpp"
#include "pnspace/triangle.hpp"

using namespace pns;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& why) {
    if (!cond && pass) {
      pass = false;
      note = why;
    }
  }
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

PNSpace simple(std::size_t dim, NormKind n) {
  return PNSpace::simple(dim, n, TriangleFn::tau_M(), TriangleFn::tau_Mstar());
}

Vector random_vector(Rng& rng, std::size_t dim, double r) {
  std::vector<double> c(dim);
  for (auto& x : c) x = rng.uniform(-r, r);
  return Vector(c);
}

// Random subspace of dimension 1 .. dim-1 with a well-conditioned basis.
std::vector<Vector> random_basis(Rng& rng, std::size_t dim) {
  const std::size_t k = 1 + rng.index(dim - 1);
  while (true) {
    std::vector<Vector> b;
    for (std::size_t j = 0; j < k; ++j) b.push_back(random_vector(rng, dim, 1.0));
    bool ok = true;
    for (const auto& v : b) ok = ok && norm(v, NormKind::l2) > 0.2;
    if (ok && k == 2) ok = oracle::l2_residual(b[1], {b[0]}) > 0.2;
    if (ok) return b;
  }
}

// --- criteria -------------------------------------------------------------

Outcome eps_calculus() {
  Outcome o;
  Rng rng(kSeed);
  for (const TNorm& t : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()}) {
    for (int i = 0; i < 200; ++i) {
      double a = 10.0 * (1.0 - rng.uniform());  // (0, 10]
      double b = 10.0 * (1.0 - rng.uniform());
      const DistFn got = tau_T_conv(t, DistFn::unit_step(a), DistFn::unit_step(b));
      o.require(got == DistFn::unit_step(a + b),
                t.name() + ": tau(eps_" + num(a) + ", eps_" + num(b) + ") = " + got.describe());
    }
  }
  return o;
}

Outcome sibley_oracle() {
  Outcome o;
  Rng rng(kSeed + 1);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DistFn f = random_distfn(rng, {.max_steps = 4, .max_abscissa = 2.0});
    const DistFn g = random_distfn(rng, {.max_steps = 4, .max_abscissa = 2.0});
    const double gap = std::abs(sibley(f, g).value - oracle::sibley_h_grid(f, g, 1e-4));
    worst = std::max(worst, gap);
    o.require(gap <= 2e-4, "pair " + std::to_string(i) + ": gap " + num(gap));
  }
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.0, 3.0);
    const double d = sibley(DistFn::unit_step(a), DistFn::eps0()).value;
    o.require(std::abs(d - std::min(a, 1.0)) <= 1e-9,
              "d_S(eps_" + num(a) + ", eps0) = " + num(d));
  }
  if (o.pass) o.note = "max grid gap " + num(worst);
  return o;
}

Outcome axiom_certification() {
  Outcome o;
  int spaces = 0;
  for (std::size_t dim : {2u, 3u}) {
    for (NormKind n : {NormKind::l1, NormKind::l2, NormKind::linf}) {
      const auto r = check_axioms(simple(dim, n).view(), {.samples = 500, .seed = kSeed});
      o.require(r.passed() && r.worst_margin >= 0.0,
                "R^" + std::to_string(dim) + " " + to_string(n) + ": " + r.witness);
      ++spaces;
    }
  }
  const auto sq = PNSpace::squared(2, NormKind::l2, TriangleFn::tau_M(), TriangleFn::tau_Mstar());
  const auto r = check_axioms(sq.view(), {.samples = 500, .seed = kSeed});
  const bool n3_fails = r.details.contains("N3") && r.details["N3"]["pass"] == false;
  o.require(!r.passed() && n3_fails && !r.witness.empty(),
            "squared rule was not caught failing N3");
  if (o.pass) o.note = std::to_string(spaces) + " spaces certified; squared rule: " +
                       r.witness.substr(0, 60) + "...";
  return o;
}

Outcome quotient_coincidence() {
  Outcome o;
  Rng rng(kSeed + 3);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t dim = 2 + rng.index(2);
    const auto n = static_cast<NormKind>(rng.index(3));
    const auto basis = random_basis(rng, dim);
    const Subspace w = Subspace::span(basis, dim);
    const Vector p = random_vector(rng, dim, 2.0);
    const QuotientSpace exact(simple(dim, n), w);
    const QuotientSpace sampled(simple(dim, n), w, QuotientStrategy::sampled);
    const double d = sibley(exact.norm(p), sampled.norm(p)).value;
    worst = std::max(worst, d);
    o.require(d <= 2e-2, "case " + std::to_string(i) + ": d_S = " + num(d));
    // The exact value is eps at the true distance.
    const double want = oracle::dist_search(p, basis, n);
    o.require(std::abs(exact.norm(p).steps()[0].at - want) <= 1e-6 || want < 1e-9,
              "case " + std::to_string(i) + ": exact distance off the oracle");
  }
  if (o.pass) o.note = "max d_S " + num(worst);
  return o;
}

Outcome dichotomy() {
  Outcome o;
  Rng rng(kSeed + 4);
  int probes = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 2 + rng.index(2);
    const auto n = static_cast<NormKind>(rng.index(3));
    const auto basis = random_basis(rng, dim);
    const QuotientSpace q(simple(dim, n), Subspace::span(basis, dim));
    const Vector p = random_vector(rng, dim, 2.0);
    if (oracle::l2_residual(p, basis) < 1e-6) continue;
    const double d = oracle::dist_search(p, basis, n);
    const double got = sibley_to_eps0(q.norm(p)).value;
    o.require(got >= std::min(d, 1.0) - 1e-6,
              "finite probe " + p.describe() + ": " + num(got) + " < " + num(std::min(d, 1.0)));
    ++probes;
  }
  const auto spec = load_space_spec(std::string(PNS_DATA_DIR) + "/c00-linf.json");
  const QuotientSpace c00(spec.space, *spec.subspace, QuotientStrategy::sampled);
  const auto r = closedness_probe(c00, {Vector{1.0}, Vector{0.5, 0.5}, Vector{-2.0, 1.0, 3.0}}, 100);
  double worst = 0.0;
  for (const auto& row : r.details["probes"]) worst = std::max(worst, row["estimate"].get<double>());
  o.require(worst < 0.01, "c00 probe estimate " + num(worst) + " not below 1/100");
  o.require(r.details["n1_fails"] == true && !r.passed(), "c00 testbed did not flag N1 failure");
  if (o.pass)
    o.note = std::to_string(probes) + " finite probes hold; c00 estimate " + num(worst) +
             ", N1 fails";
  return o;
}

Outcome lift_representative_check() {
  Outcome o;
  Rng rng(kSeed + 5);
  double least = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const std::size_t dim = 2 + rng.index(2);
    const auto n = static_cast<NormKind>(rng.index(3));
    const auto basis = random_basis(rng, dim);
    const QuotientSpace q(simple(dim, n), Subspace::span(basis, dim));
    const Vector p = random_vector(rng, dim, 3.0);
    const double eps = i % 2 ? 0.1 : 0.01;
    const Vector lifted = lift_representative(q, p, eps);
    const double residual = oracle::l2_residual(lifted - p, basis);
    o.require(residual <= 1e-9 * std::max(1.0, norm(p, NormKind::l2)),
              "case " + std::to_string(i) + ": p' - p leaves W by " + num(residual));
    const double lhs = std::min(norm(lifted, n), 1.0);
    const double rhs = std::min(oracle::dist_search(p, basis, n), 1.0) + eps;
    least = std::min(least, rhs - lhs);
    o.require(rhs - lhs > 0.0, "case " + std::to_string(i) + ": margin " + num(rhs - lhs));
  }
  if (o.pass) o.note = "least margin " + num(least);
  return o;
}

Outcome completeness_machinery() {
  Outcome o;
  const QuotientSpace q(simple(2, NormKind::l2), Subspace::span({Vector{1.0, 0.0}}, 2));
  const PointSequence seq{"(10n, 1/n)",
                          [](std::size_t n) {
                            const double x = static_cast<double>(n);
                            return Vector{10.0 * x, 1.0 / x};
                          },
                          50};
  const DeltaSchedule s = build_delta_schedule(q.ambient().tau(), 5, 200, kSeed);
  const auto v = validate_delta_schedule(q.ambient().tau(), s, 1000, kSeed + 1);
  o.require(v.passed(), "schedule validation: " + v.witness);
  const LiftedSequence lifted = lift_cauchy_sequence(q, seq, s);
  o.require(lifted.report.passed(), "lift report: " + lifted.report.witness);
  const auto& d = s.deltas;
  const auto& idx = lifted.indices;
  const auto& x = lifted.points;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    // Subsequence: quotient gap |1/n_i - 1/n_{i+1}| below delta_{i+1}.
    const double gap = std::min(
        std::abs(1.0 / static_cast<double>(idx[i]) - 1.0 / static_cast<double>(idx[i + 1])), 1.0);
    o.require(gap < d[i + 1], "subsequence gap at " + std::to_string(i + 1));
    const double step = std::min(norm(x[i] - x[i + 1], NormKind::l2), 1.0);
    o.require(step < d[i + 1], "lift step at " + std::to_string(i + 1) + ": " + num(step));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    o.require(std::abs(x[i][1] - 1.0 / static_cast<double>(idx[i])) < 1e-12,
              "x_" + std::to_string(i + 1) + " left its coset");
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double ds = std::min(norm(x[j] - x[i], NormKind::l2), 1.0);
      o.require(ds < 1.0 / static_cast<double>(i + 1),
                "d_S(x_" + std::to_string(j + 1) + " - x_" + std::to_string(i + 1) + ") = " +
                    num(ds));
    }
  }
  if (o.pass) {
    std::string list;
    for (double delta : d) list += (list.empty() ? "" : ",") + num(delta);
    o.note = "deltas {" + list + "}";
  }
  return o;
}

Outcome two_of_three() {
  Outcome o;
  const QuotientSpace q(simple(3, NormKind::l2), Subspace::span({Vector{1.0, 0.0, 0.0}}, 3));
  for (Scenario sc : {Scenario::quotient, Scenario::subspace, Scenario::ambient}) {
    const auto seq = default_scenario_sequence(q, sc, 200);
    const auto r = two_of_three_experiment(
        q, sc, seq, {.lambda_grid = {0.2, 0.1, 0.05}, .seed = kSeed});
    o.require(r.passed(), std::string(to_string(sc)) + ": " + r.witness);
  }
  return o;
}

Outcome sigma_product_check() {
  Outcome o;
  const PNSpace line = simple(1, NormKind::l2);
  const PNSpace prod = sigma_product(line, line, TriangleFn::tau_M(), 100, 500, kSeed);
  o.require(prod.certificate() && prod.certificate()->passed(),
            "certificate: " + (prod.certificate() ? prod.certificate()->witness : "missing"));
  const auto& cert = prod.certificate()->details;
  o.require(cert["tau* >> sigma"]["samples"] == 100 && cert["sigma >> tau"]["samples"] == 100,
            "dominance evidence not on 100 quadruples");
  o.require(cert["axioms"]["samples"] == 500, "axioms not on 500 samples");

  // Factor kinds: 0 reciprocal and 1 geometric(1/2) are Cauchy,
  // 2 alternating and 3 geometric(3/2) are not.
  const auto part = [](int kind, double c, std::size_t n) {
    const double x = static_cast<double>(n);
    switch (kind) {
      case 0: return c + 0.5 / x;
      case 1: return c + std::pow(0.5, x);
      case 2: return n % 2 ? -1.0 : 1.0;
      default: return std::pow(1.5, x);
    }
  };
  std::vector<PointSequence> seqs;
  std::vector<bool> expected;
  Rng rng(kSeed + 9);
  for (int s = 0; s < 20; ++s) {
    const int lk = static_cast<int>(rng.index(4)), rk = static_cast<int>(rng.index(4));
    const double lc = rng.uniform(-1, 1), rc = rng.uniform(-1, 1);
    seqs.push_back({"seq" + std::to_string(s),
                    [=](std::size_t n) { return Vector{part(lk, lc, n), part(rk, rc, n)}; }, 100});
    expected.push_back(lk < 2 && rk < 2);
  }
  const auto r = check_product_cauchy_factorization(prod, seqs, {0.2, 0.1, 0.05});
  o.require(r.passed(), "factorization: " + r.witness);
  for (std::size_t s = 0; s < seqs.size(); ++s)
    o.require(r.details["sequences"][s]["product"] == expected[s],
              seqs[s].name + " Cauchy verdict differs from its construction");
  return o;
}

Outcome continuity_probes() {
  Outcome o;
  const QuotientSpace q(simple(2, NormKind::l2), Subspace::span({Vector{1.0, 0.0}}, 2));
  Rng rng(kSeed + 10);
  std::vector<std::pair<Vector, Vector>> pairs;
  for (int i = 0; i < 8; ++i) pairs.emplace_back(random_vector(rng, 2, 2.0), random_vector(rng, 2, 2.0));
  const auto u = uniform_continuity_probe(q, pairs, {0.2, 0.1, 0.05, 0.025},
                                          {.perturbations = 16, .seed = kSeed, .final_bound = 0.1});
  o.require(u.passed(), "modulus: " + u.witness);
  const auto& table = u.details["modulus"];
  for (std::size_t k = 1; k < table.size(); ++k)
    o.require(table[k]["h"].get<double>() <= table[k - 1]["h"].get<double>(),
              "modulus table increases");
  const double h_last = table.back()["h"].get<double>();
  o.require(h_last <= 0.1, "h(0.025) = " + num(h_last));

  const Vector p{0.7, 0.4};
  const auto s = scalar_continuity_probe(
      q, p, {{1.0, 1.0}, {1.0, 0.95}, {0.5, 0.475}, {2.0, 1.9875}, {3.0, -1.0}, {0.1, 0.0875}});
  o.require(s.passed(), "scalar: " + s.witness);
  o.require(s.details["proportional"] == true, "scalar distances not proportional to |a - b|");
  // Independent: below saturation the quotient distance is |a - b| * 0.4.
  for (const auto& row : s.details["table"]) {
    const double gap = row["gap"].get<double>();
    if (gap * 0.4 < 1.0)
      o.require(std::abs(row["quotient"].get<double>() - 0.4 * gap) < 1e-9,
                "quotient distance at gap " + num(gap));
  }
  if (o.pass) o.note = "h(0.025) = " + num(h_last);
  return o;
}

struct Proc {
  int code = -1;
  std::string out;
};

Proc run_cli(const std::string& args) {
  Proc r;
  const std::string cmd = std::string("\"") + PNS_CLI + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 8192> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli_end_to_end() {
  Outcome o;
  const std::string args =
      std::string("run --space \"") + PNS_DATA_DIR + "/simple-r3.json\" --seed 7";
  const Proc a = run_cli(args);
  const Proc b = run_cli(args);
  o.require(a.code == 0, "first run exited " + std::to_string(a.code));
  o.require(b.code == 0, "second run exited " + std::to_string(b.code));
  o.require(!a.out.empty() && a.out == b.out, "reports differ between identical runs");
  if (o.pass) o.note = std::to_string(a.out.size()) + " byte report reproduced";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "eps-calculus exactness", 1.0, eps_calculus},
      {2, "Sibley oracle agreement", 10.0, sibley_oracle},
      {3, "axiom certification", 30.0, axiom_certification},
      {4, "quotient exact vs sampled", 30.0, quotient_coincidence},
      {5, "closedness dichotomy", 10.0, dichotomy},
      {6, "representative lift", 10.0, lift_representative_check},
      {7, "Cauchy lifting machinery", 30.0, completeness_machinery},
      {8, "two-of-three stages", 30.0, two_of_three},
      {9, "sigma-product", 30.0, sigma_product_check},
      {10, "continuity probes", 10.0, continuity_probes},
      {11, "CLI end-to-end determinism", 60.0, cli_end_to_end},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note = std::string("error: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && secs > c.limit_s) {
      out.pass = false;
      out.note = "over the " + num(c.limit_s) + " s limit";
    }
    if (!out.pass) ++failed;
    std::printf("%s %2d %-28s %7.3fs / %gs  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_s, out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
