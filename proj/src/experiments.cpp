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

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "pnspace/complete.hpp"
#include "pnspace/error.hpp"

namespace pns {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// W with the ambient norm restricted to it.
NormedView restricted_view(const QuotientSpace& q) {
  NormedView v = q.ambient().view();
  const auto w = std::make_shared<const Subspace>(q.subspace());
  v.name = "restriction to " + w->describe();
  v.sample = [w](Rng& rng) { return w->sample(rng, 2.0); };
  return v;
}

// Runs one named stage; library errors become an inconclusive stage.
template <typename Body>
bool run_stage(VerificationReport& report, const std::string& name, Body&& body) {
  VerificationReport stage;
  try {
    stage = body();
  } catch (const Error& e) {
    stage = VerificationReport{};
    stage.inconclusive(e.what());
  }
  stage.check = name;
  report.absorb(stage);
  return stage.passed();
}

VerificationReport rename(VerificationReport r, std::string name) {
  r.check = std::move(name);
  return r;
}

VerificationReport membership(const Subspace& w, const std::vector<Vector>& terms,
                              const std::string& label) {
  VerificationReport r;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    ++r.samples;
    if (!w.contains(terms[n]))
      r.fail(label + "_" + std::to_string(n + 1) + " = " + terms[n].describe() + " is not in W");
  }
  return r;
}

VerificationReport quotient_scenario(const QuotientSpace& q, const PointSequence& seq,
                                     const ExperimentOptions& o) {
  VerificationReport report;
  const NormedView quotient = q.view();
  if (!run_stage(report, "quotient_cauchy",
                 [&] { return is_strong_cauchy(quotient, seq, o.lambda_grid); }))
    return report;
  DeltaSchedule schedule;
  if (!run_stage(report, "delta_schedule", [&] {
        schedule = build_delta_schedule(q.ambient().tau(), o.schedule_depth,
                                        o.samples_per_ball, o.seed);
        VerificationReport r = schedule.evidence;
        r.absorb(validate_delta_schedule(q.ambient().tau(), schedule, o.samples_per_ball,
                                         o.seed + 1));
        return r;
      }))
    return report;
  LiftedSequence lifted;
  if (!run_stage(report, "lift", [&] {
        lifted = lift_cauchy_sequence(q, seq, schedule);
        return lifted.report;
      }))
    return report;
  run_stage(report, "quotient_limit", [&] {
    VerificationReport r = strong_limit_check(quotient, seq, lifted.points.back(), o.lambda_grid);
    r.details["limit"] = lifted.points.back().describe();
    return r;
  });
  return report;
}

VerificationReport subspace_scenario(const QuotientSpace& q, const PointSequence& seq,
                                     const ExperimentOptions& o) {
  VerificationReport report;
  const std::vector<Vector> w = seq.terms();
  if (!run_stage(report, "membership", [&] { return membership(q.subspace(), w, "w"); }))
    return report;
  if (!run_stage(report, "subspace_cauchy",
                 [&] { return is_strong_cauchy(restricted_view(q), seq, o.lambda_grid); }))
    return report;
  const Vector limit = w.back();
  run_stage(report, "ambient_limit", [&] {
    return strong_limit_check(q.ambient().view(), seq, limit, o.lambda_grid);
  });
  run_stage(report, "limit_in_subspace", [&] {
    VerificationReport r;
    r.samples = 1;
    if (!q.subspace().contains(limit)) r.fail("limit " + limit.describe() + " is not in W");
    if (!q.norm(limit).is_eps0()) r.fail("pi(limit) is not the zero coset");
    r.details["limit"] = limit.describe();
    return r;
  });
  return report;
}

VerificationReport ambient_scenario(const QuotientSpace& q, const PointSequence& seq,
                                    const ExperimentOptions& o) {
  VerificationReport report;
  const PNSpace& v = q.ambient();
  const NormedView ambient = v.view();
  const NormedView quotient = q.view();
  const std::vector<Vector> p = seq.terms();
  const std::size_t h = p.size();

  if (!run_stage(report, "ambient_cauchy",
                 [&] { return is_strong_cauchy(ambient, seq, o.lambda_grid); }))
    return report;
  if (!run_stage(report, "projection_cauchy", [&] {
        VerificationReport r;
        MarginTracker dominated;
        for (std::size_t m = 0; m < h; ++m)
          for (std::size_t n = m + 1; n < h; ++n) {
            const Vector d = p[m] - p[n];
            dominated.observe(leq_margin(v.norm(d), q.norm(d)), m * h + n, [&] {
              return "nu-bar below nu at p_" + std::to_string(m + 1) + " - p_" +
                     std::to_string(n + 1);
            });
            ++r.samples;
          }
        dominated.finish(r, "projection lowers the norm");
        r.absorb(is_strong_cauchy(quotient, seq, o.lambda_grid));
        return r;
      }))
    return report;

  const Vector qv = q.project(p.back());
  if (!run_stage(report, "quotient_limit", [&] {
        VerificationReport r = strong_limit_check(quotient, seq, qv, o.lambda_grid);
        r.details["q"] = qv.describe();
        return r;
      }))
    return report;

  // H_n = eps_{d_n + 1/n}, d_n the distance of p_n - q to W.
  std::vector<DistFn> hn(h);
  if (!run_stage(report, "floor", [&] {
        VerificationReport r;
        MarginTracker strict(std::numeric_limits<double>::min());
        std::vector<Vector> h_points;
        for (std::size_t n = 0; n < h; ++n) {
          const double dn = dist_to_subspace(p[n] - qv, q.subspace(), v.norm_kind());
          hn[n] = DistFn::unit_step(dn + 1.0 / static_cast<double>(n + 1));
          strict.observe(leq_margin(hn[n], q.norm(p[n] - qv)), n, [&] {
            return "nu-bar_{(p_" + std::to_string(n + 1) + " - q) + W} does not dominate H_n";
          });
          ++r.samples;
        }
        strict.finish(r, "H_n floor violated");
        // H_n -> eps0 in d_S, with the same entry rule as sequences.
        std::size_t limit = h / 2;
        Json table = Json::array();
        for (double lambda : o.lambda_grid) {
          std::size_t entry = 1;
          for (std::size_t n = 0; n < h; ++n)
            if (!(sibley_to_eps0(hn[n]).value < lambda)) entry = n + 2;
          table.push_back({{"lambda", lambda}, {"N", entry}});
          if (entry > limit) r.fail("H_n has not entered the " + fmt(lambda) + "-ball by " +
                                    std::to_string(limit));
        }
        r.details["N"] = table;
        return r;
      }))
    return report;

  std::vector<Vector> corrections(h);
  if (!run_stage(report, "correction", [&] {
        VerificationReport r;
        MarginTracker lower;
        for (std::size_t n = 0; n < h; ++n) {
          const Vector target = p[n] - qv;
          corrections[n] = lift_with_floor(q, target, hn[n]);
          if (!coset_equal(corrections[n], target, q.subspace()))
            r.fail("q_" + std::to_string(n + 1) + " left the coset of p_n - q");
          const DistFn bound = v.tau()(q.norm(target), hn[n]);
          lower.observe(leq_margin(bound, v.norm(corrections[n])), n, [&] {
            return "nu_{q_" + std::to_string(n + 1) + "} below tau(nu-bar, H_n)";
          });
          ++r.samples;
        }
        lower.finish(r, "correction floor violated");
        r.absorb(rename(strong_limit_check(ambient, explicit_sequence("q_n", corrections),
                                           v.zero(), o.lambda_grid),
                        "q_n_to_theta"));
        return r;
      }))
    return report;

  std::vector<Vector> r_terms(h);
  for (std::size_t n = 0; n < h; ++n) r_terms[n] = p[n] - corrections[n] - qv;
  const PointSequence rseq = explicit_sequence("r_n", r_terms);
  if (!run_stage(report, "subspace_cauchy", [&] {
        VerificationReport r = membership(q.subspace(), r_terms, "r");
        r.absorb(is_strong_cauchy(restricted_view(q), rseq, o.lambda_grid));
        return r;
      }))
    return report;
  run_stage(report, "recombination", [&] {
    const Vector limit = r_terms.back() + qv;
    VerificationReport r = strong_limit_check(ambient, seq, limit, o.lambda_grid);
    r.details["limit"] = limit.describe();
    return r;
  });
  return report;
}

}  // namespace

Scenario scenario_from_name(const std::string& name) {
  if (name == "quotient") return Scenario::quotient;
  if (name == "subspace") return Scenario::subspace;
  if (name == "ambient") return Scenario::ambient;
  throw InvalidArgument("unknown scenario '" + name + "' (quotient, subspace, ambient)");
}

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::quotient: return "quotient";
    case Scenario::subspace: return "subspace";
    case Scenario::ambient: return "ambient";
  }
  return "unknown";
}

VerificationReport two_of_three_experiment(const QuotientSpace& q, Scenario scenario,
                                           const PointSequence& seq,
                                           const ExperimentOptions& options) {
  if (!q.exact()) throw Unsupported("two_of_three_experiment needs the exact quotient strategy");
  VerificationReport report;
  switch (scenario) {
    case Scenario::quotient: report = quotient_scenario(q, seq, options); break;
    case Scenario::subspace: report = subspace_scenario(q, seq, options); break;
    case Scenario::ambient: report = ambient_scenario(q, seq, options); break;
  }
  report.check = std::string("two_of_three:") + to_string(scenario);
  report.seed = options.seed;
  report.details["sequence"] = seq.name;
  report.details["horizon"] = seq.horizon;
  return report;
}

PointSequence default_scenario_sequence(const QuotientSpace& q, Scenario scenario,
                                        std::size_t horizon) {
  const Subspace& w = q.subspace();
  if (w.is_c00_sum_kernel()) throw Unsupported("default scenario sequences need a finite W");
  const std::size_t dim = q.ambient().dim();
  const Vector along = w.dim() ? w.basis().front() : Vector::zero(dim);
  Vector across = w.canonical(Vector(std::vector<double>(dim, 1.0)));
  switch (scenario) {
    case Scenario::quotient:
      // Divergent W-component, convergent coset.
      return {"sin(n) w + c/n",
              [along, across](std::size_t n) {
                const double x = static_cast<double>(n);
                return std::sin(x) * along + (1.0 / x) * across;
              },
              horizon};
    case Scenario::subspace:
      return {"(1 + 1/n) w",
              [along](std::size_t n) { return (1.0 + 1.0 / static_cast<double>(n)) * along; },
              horizon};
    case Scenario::ambient:
      return {"(2 + sin(n)/n) w + c/n",
              [along, across](std::size_t n) {
                const double x = static_cast<double>(n);
                return (2.0 + std::sin(x) / x) * along + (1.0 / x) * across;
              },
              horizon};
  }
  throw InvalidArgument("unknown scenario");
}

PNSpace sigma_product(const PNSpace& left, const PNSpace& right, const TriangleFn& sigma,
                      std::size_t dominance_samples, std::size_t axiom_samples,
                      std::uint64_t seed) {
  if (!(left.tau() == right.tau()) || !(left.tau_star() == right.tau_star()))
    throw InvalidArgument("sigma_product: factors must share (tau, tau*)");
  const VerificationReport upper =
      rename(check_dominates(left.tau_star(), sigma, dominance_samples, seed), "tau* >> sigma");
  if (!upper.passed())
    throw InvalidArgument("sigma_product refused, tau* >> sigma fails: " + upper.witness);
  const VerificationReport lower =
      rename(check_dominates(sigma, left.tau(), dominance_samples, seed + 1), "sigma >> tau");
  if (!lower.passed())
    throw InvalidArgument("sigma_product refused, sigma >> tau fails: " + lower.witness);

  PNSpace product = PNSpace::product_unchecked(left, right, sigma);
  VerificationReport certificate{.check = "sigma_product"};
  certificate.seed = seed;
  certificate.absorb(upper);
  certificate.absorb(lower);
  certificate.absorb(check_axioms(product.view(), {.samples = axiom_samples, .seed = seed}));
  product.attach_certificate(std::move(certificate));
  return product;
}

VerificationReport check_product_cauchy_factorization(const PNSpace& product,
                                                      const std::vector<PointSequence>& seqs,
                                                      const std::vector<double>& lambda_grid) {
  if (product.kind() != SpaceKind::product)
    throw InvalidArgument("Cauchy factorization needs a sigma-product");
  const std::size_t d1 = product.left()->dim();
  const std::size_t d2 = product.right()->dim();
  VerificationReport report{.check = "cauchy_factorization"};
  Json rows = Json::array();
  const NormedView pv = product.view(), lv = product.left()->view(), rv = product.right()->view();
  for (const PointSequence& s : seqs) {
    const PointSequence ls{s.name + " (left)",
                           [s, d1](std::size_t n) { return s.at(n).resized(d1); }, s.horizon};
    const PointSequence rs{s.name + " (right)",
                           [s, d1, d2](std::size_t n) {
                             const Vector p = s.at(n);
                             std::vector<double> c(d2);
                             for (std::size_t i = 0; i < d2; ++i) c[i] = p[d1 + i];
                             return Vector(std::move(c));
                           },
                           s.horizon};
    const bool whole = is_strong_cauchy(pv, s, lambda_grid).passed();
    const bool l = is_strong_cauchy(lv, ls, lambda_grid).passed();
    const bool r = is_strong_cauchy(rv, rs, lambda_grid).passed();
    rows.push_back({{"sequence", s.name}, {"product", whole}, {"left", l}, {"right", r}});
    ++report.samples;
    if (whole != (l && r))
      report.fail(s.name + ": product Cauchy = " + (whole ? "true" : "false") +
                  " but factors give " + (l ? "true" : "false") + "/" + (r ? "true" : "false"));
  }
  report.details["sequences"] = rows;
  return report;
}

VerificationReport uniform_continuity_probe(const QuotientSpace& q,
                                            const std::vector<std::pair<Vector, Vector>>& pairs,
                                            const std::vector<double>& eta_grid,
                                            const ContinuityOptions& options) {
  if (eta_grid.empty()) throw InvalidArgument("eta grid is empty");
  for (double eta : eta_grid)
    if (!(eta > 0.0)) throw InvalidArgument("eta values must be positive");
  std::vector<double> etas = eta_grid;
  std::sort(etas.begin(), etas.end());  // ascending: pools grow with eta
  const PNSpace& v = q.ambient();
  const NormedView ambient = v.view();
  Rng rng(options.seed);

  const auto perturbation = [&](double eta) {
    Vector e = v.sample(rng);
    double s = 1.0;
    while (!in_strong_neighborhood(ambient, v.zero(), eta, s * e)) s /= 2.0;
    return (s * (1.0 - rng.uniform())) * e;
  };

  VerificationReport report{.check = "uniform_continuity"};
  report.seed = options.seed;
  std::vector<std::pair<Vector, Vector>> pool;
  std::vector<double> h(etas.size(), 0.0);
  for (std::size_t k = 0; k < etas.size(); ++k) {
    for (std::size_t i = 0; i < options.perturbations; ++i)
      pool.emplace_back(perturbation(etas[k]), perturbation(etas[k]));
    for (const auto& [p, r] : pairs) {
      const DistFn base = q.norm(p - r);
      for (const auto& [ep, er] : pool) {
        h[k] = std::max(h[k], sibley(base, q.norm((p + ep) - (r + er))).value);
        ++report.samples;
      }
    }
  }
  Json table = Json::array();
  for (std::size_t k = etas.size(); k-- > 0;) table.push_back({{"eta", etas[k]}, {"h", h[k]}});
  report.details["modulus"] = table;
  for (std::size_t k = 1; k < etas.size(); ++k)
    if (h[k - 1] > h[k])
      report.fail("h(" + fmt(etas[k - 1]) + ") = " + fmt(h[k - 1]) + " exceeds h(" +
                  fmt(etas[k]) + ") = " + fmt(h[k]));
  report.worst_margin = options.final_bound - h.front();
  if (h.front() > options.final_bound)
    report.fail("h(" + fmt(etas.front()) + ") = " + fmt(h.front()) + " above " +
                fmt(options.final_bound));
  return report;
}

VerificationReport scalar_continuity_probe(const QuotientSpace& q, const Vector& p,
                                           const std::vector<std::pair<double, double>>& pairs) {
  VerificationReport report{.check = "scalar_continuity"};
  struct Row {
    double gap, ambient, quotient;
  };
  std::vector<Row> rows;
  MarginTracker dominated;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    const Vector x = (a - b) * p;
    const Row row{std::abs(a - b), sibley_to_eps0(q.ambient().norm(x)).value,
                  sibley_to_eps0(q.norm(x)).value};
    dominated.observe(row.ambient - row.quotient + 1e-12, i, [&] {
      return "alpha = " + fmt(a) + ", beta = " + fmt(b) + ": quotient distance " +
             fmt(row.quotient) + " > ambient " + fmt(row.ambient);
    });
    rows.push_back(row);
    ++report.samples;
  }
  dominated.finish(report, "quotient scalar gap exceeds the ambient one");
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.gap < y.gap; });
  Json table = Json::array();
  double ratio = std::numeric_limits<double>::quiet_NaN();
  bool proportional = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json row{{"gap", rows[i].gap}, {"ambient", rows[i].ambient}, {"quotient", rows[i].quotient}};
    if (rows[i].gap > 0.0 && rows[i].ambient < 1.0) {
      const double r = rows[i].ambient / rows[i].gap;
      row["ratio"] = r;
      if (std::isnan(ratio)) ratio = r;
      else if (std::abs(r - ratio) > 1e-9 * std::max(1.0, ratio)) proportional = false;
    }
    table.push_back(row);
    if (i > 0 && rows[i].ambient < rows[i - 1].ambient)
      report.fail("ambient distance grows as |alpha - beta| shrinks at gap " + fmt(rows[i].gap));
  }
  report.details["table"] = table;
  report.details["proportional"] = proportional;
  return report;
}

}  // namespace pns
