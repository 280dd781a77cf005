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

#include "pnspace/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "pnspace/complete.hpp"
#include "pnspace/error.hpp"
#include "pnspace/formats.hpp"
#include "pnspace/oracle.hpp"
#include "pnspace/quotient.hpp"

namespace pns {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

struct Context {
  const SuiteConfig& config;
  SpaceSpec spec;

  const PNSpace& space() const { return spec.space; }

  const Subspace& subspace(const std::string& suite) const {
    if (!spec.subspace)
      throw InvalidArgument("suite '" + suite + "' needs a subspace (--subspace or the space file)");
    return *spec.subspace;
  }

  bool exact_possible() const {
    return space().rule() == RuleKind::unit_step && spec.subspace &&
           !spec.subspace->is_c00_sum_kernel();
  }

  QuotientSpace quotient(const std::string& suite) const {
    SupSchedule schedule;
    schedule.tol = config.tol;
    return QuotientSpace(space(), subspace(suite),
                         exact_possible() ? QuotientStrategy::exact : QuotientStrategy::sampled,
                         schedule);
  }
};

using Reports = std::vector<VerificationReport>;

VerificationReport named(VerificationReport r, std::string check, std::uint64_t seed) {
  r.check = std::move(check);
  r.seed = seed;
  return r;
}

// Runs `body`; an Inconclusive escaping it becomes an inconclusive report.
template <typename Body>
VerificationReport guarded(const std::string& check, std::uint64_t seed, Body&& body) {
  try {
    return named(body(), check, seed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::inconclusive) throw;
    VerificationReport r;
    r.inconclusive(e.what());
    return named(std::move(r), check, seed);
  }
}

// Probes well away from W: canonical part of l2 size >= 0.25 (finite) or
// coordinate sum >= 0.25 in magnitude (c00).
std::vector<Vector> closedness_probes(const Context& ctx, const Subspace& w, std::size_t count) {
  std::vector<Vector> out;
  if (w.is_c00_sum_kernel()) {
    out = {Vector{1.0}, Vector{1.0, 1.0}, Vector{2.0, 0.0, -0.5}, Vector{0.0, 0.0, 0.0, 3.0}};
  }
  Rng rng(ctx.config.seed);
  for (std::size_t attempts = 0; out.size() < count && attempts < 100 * count; ++attempts) {
    const Vector p = ctx.space().sample(rng);
    double size;
    if (w.is_c00_sum_kernel()) {
      size = 0.0;
      for (double x : p.coords()) size += x;
      size = std::abs(size);
    } else {
      size = norm(w.canonical(p), NormKind::l2);
    }
    if (size >= 0.25) out.push_back(p);
  }
  return out;
}

bool expected_closed(const Context& ctx, const Subspace& w) {
  if (ctx.spec.expect_closed) return *ctx.spec.expect_closed;
  // The sum kernel is dense in c00 under l2 and linf; |sum p| <= |p|_1 keeps
  // it closed under l1. Finite-dimensional subspaces are always closed.
  if (w.is_c00_sum_kernel()) return ctx.space().norm_kind() == NormKind::l1;
  return true;
}

Reports axioms_suite(const Context& ctx) {
  const auto& c = ctx.config;
  const NormedView view = ctx.space().view();
  Reports out;
  out.push_back(named(check_axioms(view, {.samples = c.samples, .seed = c.seed}), "axioms", c.seed));
  out.push_back(named(check_lemma_alpha(view, c.samples, c.seed), "lemma_alpha", c.seed));
  out.push_back(named(check_triangle_order(ctx.space().tau(), ctx.space().tau_star(),
                                           std::min<std::size_t>(c.samples, 200), c.seed),
                      "triangle_order", c.seed));
  if (ctx.space().rule() == RuleKind::serstnev)
    out.push_back(named(check_serstnev(view, c.samples, c.seed), "serstnev", c.seed));
  return out;
}

Reports quotient_suite(const Context& ctx) {
  const auto& c = ctx.config;
  const Subspace& w = ctx.subspace("quotient");
  const QuotientSpace q = ctx.quotient("quotient");
  Reports out;

  if (w.is_c00_sum_kernel()) {
    const double resolution = 1.0 / static_cast<double>(c.horizon);
    const NormedView view = c00_witness_view(q, c.horizon);
    std::vector<Vector> candidates = {Vector{}, Vector{1.0}, Vector{1.0, -1.0},
                                      Vector{2.0, 0.0, 1.0}, Vector{0.0, -3.0}};
    Rng rng(c.seed);
    for (int i = 0; i < 8; ++i) candidates.push_back(ctx.space().sample(rng));
    KernelResult kernel = kernel_C(view, candidates, resolution, c.seed);
    kernel.report.details["nonzero_members"] =
        std::count_if(kernel.members.begin(), kernel.members.end(),
                      [](const Vector& p) { return !p.is_zero(); });
    out.push_back(named(kernel.report, "kernel_C", c.seed));
    out.push_back(named(remark_coincidence_check(view, kernel.members,
                                                 std::min<std::size_t>(c.samples, 100), c.seed,
                                                 resolution),
                        "remark_coincidence", c.seed));
    return out;
  }

  Rng rng(c.seed);
  if (q.exact()) {
    out.push_back(named(check_axioms(q.view(), {.samples = c.samples, .seed = c.seed}),
                        "quotient_axioms", c.seed));
    out.push_back(named(projection_check(q, c.samples, c.seed), "projection", c.seed));
    out.push_back(guarded("subspace_axioms", c.seed, [&] {
      NormedView restricted = ctx.space().view();
      const auto sub = std::make_shared<const Subspace>(w);
      restricted.name = "restriction to " + sub->describe();
      restricted.sample = [sub](Rng& r) { return sub->sample(r, 2.0); };
      return check_axioms(restricted, {.samples = c.samples, .seed = c.seed});
    }));

    VerificationReport agree;
    SupSchedule schedule;
    schedule.tol = c.tol;
    const QuotientSpace sampled(ctx.space(), w, QuotientStrategy::sampled, schedule);
    MarginTracker gap;
    const std::size_t n = std::min<std::size_t>(c.samples, 20);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector p = ctx.space().sample(rng);
      const double d = sibley(q.norm(p), sampled.norm(p)).value;
      gap.observe(2e-2 - d, k, [&] { return "p = " + p.describe() + ", d_S = " + fmt(d); });
      ++agree.samples;
    }
    gap.finish(agree, "exact and sampled quotient norms disagree");
    out.push_back(guarded("exact_vs_sampled", c.seed, [&] { return agree; }));

    std::vector<std::pair<Vector, Vector>> pairs;
    for (int i = 0; i < 4; ++i) pairs.emplace_back(ctx.space().sample(rng), ctx.space().sample(rng));
    out.push_back(named(uniform_continuity_probe(q, pairs, {0.2, 0.1, 0.05, 0.025},
                                                 {.perturbations = 16, .seed = c.seed}),
                        "uniform_continuity", c.seed));
    std::vector<std::pair<double, double>> ab = {{1.0, 1.0}, {1.0, 0.95}, {0.5, 0.475},
                                                 {2.0, 1.9875}, {3.0, -1.0}, {0.1, 0.0875}};
    out.push_back(named(scalar_continuity_probe(q, ctx.space().sample(rng), ab),
                        "scalar_continuity", c.seed));
  }

  out.push_back(guarded("coset_constancy", c.seed, [&] {
    VerificationReport r;
    MarginTracker t;
    const std::size_t n = q.exact() ? c.samples : std::min<std::size_t>(c.samples, 20);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector p = ctx.space().sample(rng);
      const Vector other = p + w.sample(rng, 1.0);
      const DistFn a = q.norm(p), b = q.norm(other);
      const double margin =
          q.exact() ? std::min(leq_margin(a, b), leq_margin(b, a)) : 2.0 * c.tol - sibley(a, b).value;
      t.observe(margin, k, [&] { return p.describe() + " vs " + other.describe(); });
      ++r.samples;
    }
    t.finish(r, "quotient norm differs on one coset");
    return r;
  }));
  out.push_back(guarded("dominates_ambient", c.seed, [&] {
    VerificationReport r;
    MarginTracker t;
    const std::size_t n = q.exact() ? c.samples : std::min<std::size_t>(c.samples, 20);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector p = ctx.space().sample(rng);
      t.observe(leq_margin(ctx.space().norm(p), q.norm(p)), k, [&] { return p.describe(); });
      ++r.samples;
    }
    t.finish(r, "nu-bar below nu");
    return r;
  }));
  return out;
}

Reports closedness_suite(const Context& ctx) {
  const auto& c = ctx.config;
  const Subspace& w = ctx.subspace("closedness");
  const QuotientSpace q = ctx.quotient("closedness");
  const std::vector<Vector> probes =
      closedness_probes(ctx, w, std::min<std::size_t>(c.samples, 50));
  const bool closed = expected_closed(ctx, w);
  return {guarded("closedness_probe", c.seed, [&] {
    VerificationReport probe = closedness_probe(q, probes, c.horizon);
    const bool n1_fails = probe.details["n1_fails"].get<bool>();
    VerificationReport r = probe;
    r.verdict = Verdict::pass;
    r.witness.clear();
    r.details["expected_closed"] = closed;
    if (closed) {
      if (n1_fails) r.fail("N1 fails on a subspace expected to be closed: " + probe.witness);
    } else {
      r.worst_margin = -probe.worst_margin;
      if (n1_fails)
        r.details["finding"] = "N1 fails: W is not closed, the quotient is PPN but not PN";
      else
        r.fail("expected N1 to fail by horizon " + std::to_string(c.horizon) +
               " but every probe stayed above 1/horizon");
    }
    return r;
  })};
}

Reports lifting_suite(const Context& ctx) {
  const auto& c = ctx.config;
  const Subspace& w = ctx.subspace("lifting");
  const QuotientSpace q = ctx.quotient("lifting");
  const PNSpace& v = ctx.space();
  Reports out;
  Rng rng(c.seed);
  std::vector<Vector> points;
  if (w.is_c00_sum_kernel()) {
    points = {Vector{1.0}, Vector{0.5, 0.5}, Vector{-2.0, 0.0, 1.0}};
  } else {
    for (std::size_t k = 0; k < std::min<std::size_t>(c.samples, 50); ++k)
      points.push_back(v.sample(rng));
  }

  out.push_back(guarded("lift_representative", c.seed, [&] {
    VerificationReport r;
    MarginTracker strict(std::numeric_limits<double>::min());
    for (std::size_t k = 0; k < points.size(); ++k) {
      const double eps = k % 2 ? 0.01 : 0.1;
      const Vector lifted = lift_representative(q, points[k], eps);
      if (!coset_equal(lifted, points[k], w)) r.fail("lift left the coset of " + points[k].describe());
      const double target = sibley_to_eps0(q.norm(points[k])).value + eps;
      const double d = sibley_to_eps0(v.norm(lifted)).value;
      strict.observe(target - d, k, [&] { return points[k].describe(); });
      ++r.samples;
    }
    strict.finish(r, "lifted representative misses the bound");
    return r;
  }));
  out.push_back(guarded("lift_with_floor", c.seed, [&] {
    VerificationReport r;
    MarginTracker lower;
    for (std::size_t k = 0; k < points.size(); ++k) {
      const DistFn nu_bar = q.norm(points[k]);
      const DistFn g = nu_bar.shifted(0.5);
      const Vector lifted = lift_with_floor(q, points[k], g);
      if (!coset_equal(lifted, points[k], w)) r.fail("lift left the coset of " + points[k].describe());
      lower.observe(leq_margin(v.tau()(nu_bar, g), v.norm(lifted)), k,
                    [&] { return points[k].describe(); });
      ++r.samples;
    }
    lower.finish(r, "lifted representative below the floor");
    return r;
  }));

  DeltaSchedule schedule;
  out.push_back(guarded("delta_schedule", c.seed, [&] {
    schedule = build_delta_schedule(v.tau(), 5, 200, c.seed);
    VerificationReport r = schedule.evidence;
    r.absorb(validate_delta_schedule(v.tau(), schedule, 1000, c.seed + 1));
    Json deltas = Json::array();
    for (double d : schedule.deltas) deltas.push_back(d);
    r.details["deltas"] = deltas;
    return r;
  }));
  if (q.exact() && !schedule.deltas.empty()) {
    const Vector along = w.dim() ? w.basis().front() : v.zero();
    const Vector across = w.canonical(Vector(std::vector<double>(v.dim(), 1.0)));
    const PointSequence seq{"10 n w + c/n",
                            [along, across](std::size_t n) {
                              const double x = static_cast<double>(n);
                              return (10.0 * x) * along + (1.0 / x) * across;
                            },
                            c.horizon};
    out.push_back(guarded("lift_cauchy_sequence", c.seed,
                          [&] { return lift_cauchy_sequence(q, seq, schedule).report; }));
  }
  return out;
}

Reports two_of_three_suite(const Context& ctx) {
  const auto& c = ctx.config;
  const QuotientSpace q = ctx.quotient("two-of-three");
  if (!q.exact())
    throw InvalidArgument("suite 'two-of-three' needs a unit-step space and a basis subspace");
  Reports out;
  for (Scenario s : {Scenario::quotient, Scenario::subspace, Scenario::ambient}) {
    const PointSequence seq = default_scenario_sequence(q, s, c.horizon);
    out.push_back(guarded(std::string("scenario_") + to_string(s), c.seed, [&] {
      return two_of_three_experiment(q, s, seq, {.seed = c.seed});
    }));
  }
  return out;
}

// Per-factor sequence part: kind 0 reciprocal, 1 geometric(1/2), 2 alternating,
// 3 geometric(3/2). Kinds 0 and 1 are Cauchy well inside the horizon.
Vector factor_term(int kind, const Vector& v, std::size_t n) {
  const double x = static_cast<double>(n);
  switch (kind) {
    case 0: return (0.5 / x) * v;
    case 1: return std::pow(0.5, x) * v;
    case 2: return (n % 2 ? -1.0 : 1.0) * v;
    default: return std::pow(1.5, x) * v;
  }
}

Reports sigma_product_suite(const Context& ctx) {
  const auto& c = ctx.config;
  const PNSpace& v = ctx.space();
  if (v.kind() != SpaceKind::finite || v.rule() != RuleKind::unit_step)
    throw InvalidArgument("suite 'sigma-product' needs a finite unit-step space");
  const PNSpace product = sigma_product(v, v, v.tau(), 100, c.samples, c.seed);
  Reports out;
  out.push_back(named(*product.certificate(), "sigma_product", c.seed));

  const std::size_t d = v.dim();
  Rng rng(c.seed);
  std::vector<PointSequence> seqs;
  for (int k = 0; k < 20; ++k) {
    const int lk = k % 4, rk = (k / 4) % 4;
    Vector lv = v.sample(rng), rv = v.sample(rng);
    lv *= 1.0 / std::max(1.0, norm(lv, v.norm_kind()));
    rv *= 1.0 / std::max(1.0, norm(rv, v.norm_kind()));
    if (lk == 2) lv *= 1.0 / norm(lv, v.norm_kind());
    if (rk == 2) rv *= 1.0 / norm(rv, v.norm_kind());
    std::ostringstream name;
    name << "seq" << k << "[" << lk << "," << rk << "]";
    seqs.push_back({name.str(),
                    [=](std::size_t n) {
                      const Vector a = factor_term(lk, lv, n).resized(d);
                      const Vector b = factor_term(rk, rv, n).resized(d);
                      std::vector<double> coords(2 * d);
                      for (std::size_t i = 0; i < d; ++i) {
                        coords[i] = a[i];
                        coords[d + i] = b[i];
                      }
                      return Vector(std::move(coords));
                    },
                    c.horizon});
  }
  out.push_back(named(check_product_cauchy_factorization(product, seqs, {0.2, 0.1, 0.05}),
                      "cauchy_factorization", c.seed));
  return out;
}

Reports metric_oracle_suite(const Context& ctx) {
  const auto& c = ctx.config;
  Rng rng(c.seed);
  VerificationReport pairs;
  MarginTracker t;
  const std::size_t n = std::min<std::size_t>(c.samples, 200);
  for (std::size_t k = 0; k < n; ++k) {
    const DistFn f = random_distfn(rng), g = random_distfn(rng);
    const double fast = sibley(f, g).value, slow = oracle::sibley_grid(f, g);
    t.observe(2e-4 - std::abs(fast - slow), k, [&] {
      return "F = " + f.describe() + ", G = " + g.describe() + ": " + fmt(fast) + " vs " + fmt(slow);
    });
    ++pairs.samples;
  }
  t.finish(pairs, "sibley disagrees with the grid oracle");

  VerificationReport steps;
  MarginTracker s;
  for (std::size_t k = 0; k < 50; ++k) {
    const double a = rng.uniform(0.0, 2.0);
    const double expected = std::min(a, 1.0);
    const DistFn f = DistFn::unit_step(a);
    const double err = std::max(std::abs(sibley_to_eps0(f).value - expected),
                                std::abs(sibley(f, DistFn::eps0()).value - expected));
    s.observe(1e-9 - err, k, [&] { return "a = " + fmt(a); });
    ++steps.samples;
  }
  s.finish(steps, "d_S(eps_a, eps0) != min(a, 1)");
  return {named(pairs, "sibley_vs_grid", c.seed), named(steps, "unit_step_distance", c.seed)};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms",       "quotient",      "closedness",
                                                 "lifting",      "two-of-three",  "sigma-product",
                                                 "metric-oracle"};
  return names;
}

int ReportDocument::exit_code() const {
  switch (verdict) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 1;
}

ReportDocument run_suite(const SuiteConfig& config) {
  if (config.suites.empty()) throw InvalidArgument("no suite selected");
  for (const auto& s : config.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw InvalidArgument("unknown suite '" + s + "'");
  if (config.samples < 1) throw InvalidArgument("samples must be >= 1");
  if (config.horizon < 2) throw InvalidArgument("horizon must be >= 2");
  if (!(config.tol > 0.0)) throw InvalidArgument("tolerance must be > 0");
  if (config.space_path.empty()) throw InvalidArgument("a space file is required");

  Context ctx{config, load_space_spec(config.space_path)};
  if (!config.subspace.empty()) ctx.spec.subspace = parse_subspace(config.subspace, ctx.space());

  std::vector<std::string> suites = config.suites;
  std::sort(suites.begin(), suites.end());
  suites.erase(std::unique(suites.begin(), suites.end()), suites.end());

  struct Entry {
    std::string suite;
    VerificationReport report;
    long long elapsed_ms;
  };
  std::vector<Entry> entries;
  for (const auto& suite : suites) {
    const auto start = std::chrono::steady_clock::now();
    Reports reports;
    if (suite == "axioms") reports = axioms_suite(ctx);
    else if (suite == "quotient") reports = quotient_suite(ctx);
    else if (suite == "closedness") reports = closedness_suite(ctx);
    else if (suite == "lifting") reports = lifting_suite(ctx);
    else if (suite == "two-of-three") reports = two_of_three_suite(ctx);
    else if (suite == "sigma-product") reports = sigma_product_suite(ctx);
    else reports = metric_oracle_suite(ctx);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    for (auto& r : reports) entries.push_back({suite, std::move(r), config.timing ? ms : 0});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.suite, a.report.check) < std::tie(b.suite, b.report.check);
  });

  ReportDocument doc;
  Json& j = doc.json;
  j["report_version"] = kReportVersion;
  j["tool"] = "pnspace";
  j["tool_version"] = kToolVersion;
  Json cfg;
  cfg["space"] = config.space_path;
  cfg["subspace"] = config.subspace;
  cfg["suites"] = suites;
  cfg["samples"] = config.samples;
  cfg["seed"] = config.seed;
  cfg["horizon"] = config.horizon;
  cfg["tol"] = config.tol;
  j["config"] = cfg;
  Json reports = Json::array();
  bool any_fail = false, any_inconclusive = false;
  for (const Entry& e : entries) {
    const VerificationReport& r = e.report;
    Json row;
    row["suite"] = e.suite;
    row["check"] = r.check;
    row["pass"] = r.passed();
    row["verdict"] = to_string(r.verdict);
    row["margin"] = json_number(r.worst_margin);
    row["witness"] = r.witness;
    row["samples"] = r.samples;
    row["seed"] = r.seed;
    row["elapsed_ms"] = e.elapsed_ms;
    if (!r.details.empty()) row["details"] = r.details;
    reports.push_back(std::move(row));
    any_fail = any_fail || r.verdict == Verdict::fail;
    any_inconclusive = any_inconclusive || r.verdict == Verdict::inconclusive;
  }
  j["reports"] = reports;
  doc.verdict = any_fail ? Verdict::fail : any_inconclusive ? Verdict::inconclusive : Verdict::pass;
  j["verdict"] = to_string(doc.verdict);
  return doc;
}

}  // namespace pns
