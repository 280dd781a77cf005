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

#include "pnspace/pnspace.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "pnspace/distfn.hpp"
#include "pnspace/error.hpp"
#include "pnspace/formats.hpp"
#include "pnspace/quotient.hpp"
#include "pnspace/subspace.hpp"
#include "pnspace/suite.hpp"

struct pns_df {
  pns::DistFn value;
};

struct pns_space {
  pns::SpaceSpec spec;
};

namespace {

thread_local std::string last_error;

pns_status status_of(pns::ErrorCode code) {
  switch (code) {
    case pns::ErrorCode::invalid_argument: return PNS_ERR_INVALID_ARGUMENT;
    case pns::ErrorCode::parse: return PNS_ERR_PARSE;
    case pns::ErrorCode::unsupported: return PNS_ERR_UNSUPPORTED;
    case pns::ErrorCode::inconclusive: return PNS_ERR_INCONCLUSIVE;
    case pns::ErrorCode::io: return PNS_ERR_IO;
  }
  return PNS_ERR_INTERNAL;
}

template <typename Body>
pns_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return PNS_OK;
  } catch (const pns::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PNS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PNS_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw pns::InvalidArgument(what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pns::Vector vector_of(const double* p, size_t n) {
  require(p != nullptr || n == 0, "null coordinates");
  return pns::Vector(std::vector<double>(p, p + n));
}

}  // namespace

extern "C" {

const char* pns_version(void) { return pns::kToolVersion; }

const char* pns_last_error_message(void) { return last_error.c_str(); }

void pns_string_free(char* s) { std::free(s); }

pns_status pns_df_parse(const char* text, pns_df** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new pns_df{pns::parse_distfn(text)};
  });
}

pns_status pns_df_load(const char* path, pns_df** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new pns_df{pns::load_distfn(path)};
  });
}

pns_status pns_df_unit_step(double a, pns_df** out) {
  return guard([&] {
    require(out, "null argument");
    *out = new pns_df{pns::DistFn::unit_step(a)};
  });
}

pns_status pns_df_from_steps(const double* at, const double* values, size_t n, pns_df** out) {
  return guard([&] {
    require(out && ((at && values) || n == 0), "null argument");
    std::vector<pns::Step> steps;
    for (size_t i = 0; i < n; ++i) steps.push_back({at[i], values[i]});
    *out = new pns_df{pns::DistFn::from_steps(std::move(steps))};
  });
}

void pns_df_free(pns_df* f) { delete f; }

pns_status pns_df_eval(const pns_df* f, double x, double* out) {
  return guard([&] {
    require(f && out, "null argument");
    *out = f->value.eval(x);
  });
}

pns_status pns_df_to_text(const pns_df* f, char** out) {
  return guard([&] {
    require(f && out, "null argument");
    *out = copy_string(pns::format_distfn(f->value));
  });
}

pns_status pns_df_equal(const pns_df* f, const pns_df* g, int* out) {
  return guard([&] {
    require(f && g && out, "null argument");
    *out = f->value == g->value;
  });
}

pns_status pns_sibley(const pns_df* f, const pns_df* g, double* out) {
  return guard([&] {
    require(f && g && out, "null argument");
    *out = pns::sibley(f->value, g->value).value;
  });
}

pns_status pns_sibley_to_eps0(const pns_df* f, double* out) {
  return guard([&] {
    require(f && out, "null argument");
    *out = pns::sibley_to_eps0(f->value).value;
  });
}

pns_status pns_tau(const char* triangle, const pns_df* f, const pns_df* g, pns_df** out) {
  return guard([&] {
    require(triangle && f && g && out, "null argument");
    *out = new pns_df{pns::TriangleFn::from_name(triangle)(f->value, g->value)};
  });
}

pns_status pns_dist_to_subspace(const char* norm, const double* point, size_t dim,
                                const double* basis, size_t nbasis, double* out) {
  return guard([&] {
    require(norm && point && out && (basis || nbasis == 0), "null argument");
    std::vector<pns::Vector> b;
    for (size_t i = 0; i < nbasis; ++i) b.push_back(vector_of(basis + i * dim, dim));
    const pns::Subspace w = pns::Subspace::span(std::move(b), dim);
    *out = pns::dist_to_subspace(vector_of(point, dim), w, pns::norm_kind_from_name(norm));
  });
}

pns_status pns_space_load(const char* path, pns_space** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new pns_space{pns::load_space_spec(path)};
  });
}

void pns_space_free(pns_space* s) { delete s; }

pns_status pns_space_set_subspace(pns_space* s, const char* subspace) {
  return guard([&] {
    require(s && subspace, "null argument");
    s->spec.subspace = pns::parse_subspace(subspace, s->spec.space);
  });
}

pns_status pns_space_dim(const pns_space* s, size_t* out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = s->spec.space.dim();
  });
}

pns_status pns_space_norm(const pns_space* s, const double* p, size_t n, pns_df** out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = new pns_df{s->spec.space.norm(vector_of(p, n))};
  });
}

pns_status pns_quotient_norm(const pns_space* s, const double* p, size_t n, pns_df** out) {
  return guard([&] {
    require(s && out, "null argument");
    if (!s->spec.subspace) throw pns::InvalidArgument("space has no subspace");
    const bool exact = s->spec.space.rule() == pns::RuleKind::unit_step &&
                       !s->spec.subspace->is_c00_sum_kernel();
    const pns::QuotientSpace q(s->spec.space, *s->spec.subspace,
                               exact ? pns::QuotientStrategy::exact
                                     : pns::QuotientStrategy::sampled);
    *out = new pns_df{q.norm(vector_of(p, n))};
  });
}

pns_status pns_run_suite(const pns_suite_config* config, char** report_json, int* exit_code) {
  return guard([&] {
    require(config && report_json && exit_code, "null argument");
    require(config->space_path != nullptr, "space_path is required");
    require(config->suites != nullptr || config->n_suites == 0, "null suites");
    pns::SuiteConfig c;
    c.space_path = config->space_path;
    if (config->subspace) c.subspace = config->subspace;
    for (size_t i = 0; i < config->n_suites; ++i) {
      require(config->suites[i] != nullptr, "null suite name");
      c.suites.emplace_back(config->suites[i]);
    }
    if (c.suites.empty()) c.suites = pns::suite_names();
    c.samples = config->samples;
    c.seed = config->seed;
    c.horizon = config->horizon;
    c.tol = config->tol;
    c.timing = config->timing != 0;
    const pns::ReportDocument doc = pns::run_suite(c);
    *report_json = copy_string(doc.dump());
    *exit_code = doc.exit_code();
  });
}

}  // extern "C"
