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

// Command-line front end over the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pnspace/pnspace.h"

namespace {

struct Failure {
  pns_status status;
};

void check(pns_status s) {
  if (s != PNS_OK) throw Failure{s};
}

int exit_code_for(pns_status s) { return s == PNS_ERR_INCONCLUSIVE ? 2 : 1; }

std::vector<double> parse_coords(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream is(s);
  std::vector<double> out;
  for (std::string tok; is >> tok;) {
    char* end = nullptr;
    const double x = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      throw CLI::ValidationError("vector", "bad coordinate '" + tok + "'");
    out.push_back(x);
  }
  if (out.empty()) throw CLI::ValidationError("vector", "empty vector");
  return out;
}

// Owns a pns_df.
struct Df {
  pns_df* p = nullptr;
  Df() = default;
  Df(const Df&) = delete;
  Df& operator=(const Df&) = delete;
  ~Df() { pns_df_free(p); }
};

void print_df(const pns_df* f) {
  char* text = nullptr;
  check(pns_df_to_text(f, &text));
  std::fputs(text, stdout);
  pns_string_free(text);
}

std::string format_number(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic normed spaces: metrics, convolutions, quotients and suites"};
  app.set_version_flag("--version", std::string(pns_version()));
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run verification suites and write a JSON report");
  std::string space, subspace, out;
  std::vector<std::string> suites;
  std::size_t samples = 500, horizon = 100;
  std::uint64_t seed = 0;
  double tol = 1e-3;
  bool timing = false;
  run->add_option("--space", space, "Space file (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--subspace", subspace, "\"c00-sum-kernel\" or basis rows \"1 0 0; 0 1 0\"");
  run->add_option("--suite", suites,
                  "axioms | quotient | closedness | lifting | two-of-three | sigma-product | "
                  "metric-oracle (repeatable, comma separated; default all)")
      ->delimiter(',');
  run->add_option("--samples", samples, "Samples per check")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Random seed")->required();
  run->add_option("--horizon", horizon, "Sequence and probe horizon")->check(CLI::Range(2, 100000));
  run->add_option("--tol", tol, "Sampled quotient-norm tolerance")->check(CLI::PositiveNumber);
  run->add_option("--out", out, "Report path (default: stdout)");
  run->add_flag("--timing", timing, "Record elapsed_ms (reports are no longer byte-identical)");

  // sibley
  auto* sib = app.add_subcommand("sibley", "Sibley distance between two DF files");
  std::string f_path, g_path;
  sib->add_option("F", f_path)->required()->check(CLI::ExistingFile);
  sib->add_option("G", g_path)->required()->check(CLI::ExistingFile);

  // tau
  auto* tau = app.add_subcommand("tau", "Triangle function of two DF files, printed as DF text");
  std::string tnorm = "min";
  bool star = false;
  tau->add_option("--tnorm", tnorm, "min | prod | luk")->required();
  tau->add_flag("--star", star, "Use tau_{T*} instead of tau_T");
  tau->add_option("A", f_path)->required()->check(CLI::ExistingFile);
  tau->add_option("B", g_path)->required()->check(CLI::ExistingFile);

  // dist
  auto* dist = app.add_subcommand("dist", "Distance from a point to span(basis)");
  std::string norm = "l2", point;
  std::vector<std::string> basis;
  dist->add_option("--norm", norm, "l1 | l2 | linf");
  dist->add_option("--basis", basis, "Basis vector (repeatable)");
  dist->add_option("--point", point, "Point, e.g. \"3 4\"")->required();

  // quotient-norm
  auto* qn = app.add_subcommand("quotient-norm", "Quotient norm of a point, printed as DF text");
  qn->add_option("--space", space, "Space file (JSON)")->required()->check(CLI::ExistingFile);
  qn->add_option("--subspace", subspace, "Overrides the space file's subspace");
  qn->add_option("--point", point, "Point, e.g. \"3 4\"")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      std::vector<const char*> names;
      for (const auto& s : suites) names.push_back(s.c_str());
      pns_suite_config cfg{space.c_str(), subspace.c_str(), names.data(), names.size(),
                           samples,       seed,             horizon,      tol,
                           timing ? 1 : 0};
      char* report = nullptr;
      int code = 0;
      check(pns_run_suite(&cfg, &report, &code));
      if (out.empty()) {
        std::fputs(report, stdout);
      } else {
        std::ofstream file(out, std::ios::binary);
        file << report;
        if (!file) {
          pns_string_free(report);
          std::cerr << "pnspace: error: cannot write " << out << "\n";
          return 1;
        }
      }
      pns_string_free(report);
      return code;
    }
    if (*sib) {
      Df f, g;
      check(pns_df_load(f_path.c_str(), &f.p));
      check(pns_df_load(g_path.c_str(), &g.p));
      double d = 0.0;
      check(pns_sibley(f.p, g.p, &d));
      std::cout << format_number(d, 8) << "\n";
      return 0;
    }
    if (*tau) {
      Df f, g, r;
      check(pns_df_load(f_path.c_str(), &f.p));
      check(pns_df_load(g_path.c_str(), &g.p));
      const std::string name = std::string(star ? "tau_T*:" : "tau_T:") + tnorm;
      check(pns_tau(name.c_str(), f.p, g.p, &r.p));
      print_df(r.p);
      return 0;
    }
    if (*dist) {
      const std::vector<double> p = parse_coords(point);
      std::vector<double> b;
      for (const auto& row : basis) {
        const std::vector<double> v = parse_coords(row);
        if (v.size() != p.size())
          throw CLI::ValidationError("--basis", "basis vector length differs from the point");
        b.insert(b.end(), v.begin(), v.end());
      }
      double d = 0.0;
      check(pns_dist_to_subspace(norm.c_str(), p.data(), p.size(), b.data(), basis.size(), &d));
      std::cout << format_number(d, 15) << "\n";
      return 0;
    }
    if (*qn) {
      pns_space* s = nullptr;
      check(pns_space_load(space.c_str(), &s));
      pns_status st = subspace.empty() ? PNS_OK : pns_space_set_subspace(s, subspace.c_str());
      Df r;
      const std::vector<double> p = parse_coords(point);
      if (st == PNS_OK) st = pns_quotient_norm(s, p.data(), p.size(), &r.p);
      pns_space_free(s);
      check(st);
      print_df(r.p);
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "pnspace: error: " << pns_last_error_message() << "\n";
    return exit_code_for(f.status);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  return 1;
}
