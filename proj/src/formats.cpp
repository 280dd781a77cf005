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

#include "pnspace/formats.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pnspace/error.hpp"

namespace pns {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

// Non-blank, comment-stripped lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    Line l{number, {}};
    for (std::string f; is >> f;) l.fields.push_back(f);
    if (!l.fields.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

double parse_number(const std::string& s, std::size_t line, const char* what) {
  if (s == "inf" || s == "+inf") return INFINITY;
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE || std::isnan(x))
    throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  return x;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

DistFn parse_distfn(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty DF text");
  if (lines[0].fields != std::vector<std::string>{"DF", "v1"})
    throw ParseError(lines[0].number, "expected header 'DF v1'");
  std::vector<Step> steps;
  double last_x = -1.0, last_v = 0.0;
  bool closed = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (closed) throw ParseError(l.number, "data after the final 'inf' line");
    if (l.fields.size() != 2) throw ParseError(l.number, "expected 'x v'");
    const double x = parse_number(l.fields[0], l.number, "abscissa");
    const double v = parse_number(l.fields[1], l.number, "value");
    if (!(v >= 0.0 && v <= 1.0)) throw ParseError(l.number, "value outside [0, 1]");
    if (v < last_v) throw ParseError(l.number, "values must be non-decreasing");
    if (std::isinf(x)) {
      if (x < 0.0) throw ParseError(l.number, "abscissa -inf is not allowed");
      if (v != 1.0) throw ParseError(l.number, "value at +inf must be 1 in Delta+");
      closed = true;
      continue;
    }
    if (x < 0.0) throw ParseError(l.number, "abscissa must be >= 0 (F vanishes on x <= 0)");
    if (!(x > last_x)) throw ParseError(l.number, "abscissae must be strictly ascending");
    last_x = x;
    last_v = v;
    steps.push_back({x, v});
  }
  if (!closed) throw ParseError(lines.back().number, "missing final 'inf 1' line");
  return DistFn::from_sorted_unchecked(std::move(steps));
}

DistFn load_distfn(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_distfn(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

std::string format_distfn(const DistFn& f) {
  std::string out = "DF v1\n";
  for (const Step& s : f.steps()) out += fmt17(s.at) + " " + fmt17(s.value) + "\n";
  out += "inf 1\n";
  return out;
}

TNorm parse_tnorm_table(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty TN text");
  if (lines[0].fields != std::vector<std::string>{"TN", "v1"})
    throw ParseError(lines[0].number, "expected header 'TN v1'");
  std::map<std::pair<double, double>, std::pair<double, std::size_t>> cells;
  std::map<double, int> axis;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.fields.size() != 3) throw ParseError(l.number, "expected 'a b v'");
    const double a = parse_number(l.fields[0], l.number, "grid point");
    const double b = parse_number(l.fields[1], l.number, "grid point");
    const double v = parse_number(l.fields[2], l.number, "value");
    for (double x : {a, b, v})
      if (!(x >= 0.0 && x <= 1.0)) throw ParseError(l.number, "entries must lie in [0, 1]");
    if (!cells.emplace(std::pair{a, b}, std::pair{v, l.number}).second)
      throw ParseError(l.number, "duplicate grid cell");
    axis[a];
    axis[b];
  }
  const std::size_t n = axis.size();
  if (n < 2) throw ParseError(lines.back().number, "grid needs at least two points per axis");
  std::size_t k = 0;
  for (auto& [x, index] : axis) {
    const double expected = static_cast<double>(k) / static_cast<double>(n - 1);
    if (std::abs(x - expected) > 1e-12)
      throw ParseError(0, "grid points must be evenly spaced on [0, 1]; got " + fmt17(x));
    index = static_cast<int>(k++);
  }
  if (cells.size() != n * n)
    throw ParseError(lines.back().number, "grid is incomplete: " + std::to_string(cells.size()) +
                                              " of " + std::to_string(n * n) + " cells");
  TNormTable table;
  table.n = n;
  table.values.assign(n * n, 0.0);
  for (const auto& [ab, cell] : cells)
    table.values[static_cast<std::size_t>(axis[ab.first]) * n +
                 static_cast<std::size_t>(axis[ab.second])] = cell.first;
  try {
    return TNorm::from_table(std::move(table));
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

TNorm load_tnorm_table(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_tnorm_table(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

Vector parse_vector(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream is(s);
  std::vector<double> c;
  for (std::string f; is >> f;) c.push_back(parse_number(f, 0, "coordinate"));
  for (double x : c)
    if (!std::isfinite(x)) throw ParseError(0, "non-finite coordinate");
  if (c.empty()) throw ParseError(0, "empty vector");
  return Vector(std::move(c));
}

Subspace parse_subspace(std::string_view text, const PNSpace& ambient) {
  std::string s(text);
  if (s == "c00-sum-kernel") return Subspace::c00_sum_kernel();
  if (ambient.kind() != SpaceKind::finite)
    throw InvalidArgument("basis subspaces need a finite-dimensional ambient space");
  std::vector<Vector> basis;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    const std::string part = s.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string::npos) basis.push_back(parse_vector(part));
    start = end + 1;
  }
  return Subspace::span(std::move(basis), ambient.dim());
}

namespace {

using nlohmann::json;

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(0, std::string("field '") + name + "': missing");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw ParseError(0, std::string("field '") + name + "': wrong type");
  }
}

template <typename F>
auto in_field(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

SpaceSpec parse_space_spec(std::string_view text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (!j.is_object()) throw ParseError(0, "space file must hold a JSON object");
  static const char* const known[] = {"kind", "dimension", "norm", "rule", "tau",
                                      "tau_star", "f0", "subspace", "expect_closed"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError(0, "field '" + key + "': unknown");
  }

  const std::string kind = field<std::string>(j, "kind");
  if (kind != "finite" && kind != "c00")
    throw ParseError(0, "field 'kind': expected \"finite\" or \"c00\", got \"" + kind + "\"");
  const NormKind norm =
      in_field("norm", [&] { return norm_kind_from_name(field<std::string>(j, "norm")); });
  const std::string rule = j.contains("rule") ? field<std::string>(j, "rule") : "unit-step";
  const TriangleFn tau = in_field("tau", [&] {
    return TriangleFn::from_name(j.contains("tau") ? field<std::string>(j, "tau") : "tau_M");
  });
  const TriangleFn tau_star = in_field("tau_star", [&] {
    return TriangleFn::from_name(j.contains("tau_star") ? field<std::string>(j, "tau_star")
                                                        : "tau_M*");
  });

  std::size_t dim = 0;
  if (kind == "finite") {
    const long d = field<long>(j, "dimension");
    if (d < 1) throw ParseError(0, "field 'dimension': must be >= 1");
    dim = static_cast<std::size_t>(d);
  } else if (j.contains("dimension")) {
    throw ParseError(0, "field 'dimension': not allowed for c00");
  }

  std::optional<PNSpace> space;
  if (rule == "unit-step" || rule == "simple") {
    space = in_field("rule", [&] {
      return kind == "c00" ? PNSpace::c00(norm, tau, tau_star)
                           : PNSpace::simple(dim, norm, tau, tau_star);
    });
  } else if (rule == "serstnev") {
    if (kind == "c00") throw ParseError(0, "field 'rule': serstnev needs a finite space");
    const std::string f0_path = field<std::string>(j, "f0");
    const DistFn f0 = in_field("f0", [&] { return load_distfn(base_dir / f0_path); });
    space = in_field("rule", [&] { return PNSpace::serstnev(dim, norm, f0, tau, tau_star); });
  } else if (rule == "squared") {
    if (kind == "c00") throw ParseError(0, "field 'rule': squared needs a finite space");
    space = PNSpace::squared(dim, norm, tau, tau_star);
  } else {
    throw ParseError(0, "field 'rule': unknown rule \"" + rule + "\"");
  }
  if (rule != "serstnev" && j.contains("f0"))
    throw ParseError(0, "field 'f0': only used by the serstnev rule");

  SpaceSpec spec{*space, std::nullopt, std::nullopt};
  if (j.contains("subspace")) {
    const json& w = j.at("subspace");
    spec.subspace = in_field("subspace", [&]() -> Subspace {
      if (w.is_string()) {
        if (w.get<std::string>() != "c00-sum-kernel")
          throw ParseError(0, "field 'subspace': unknown named subspace");
        if (kind != "c00") throw ParseError(0, "field 'subspace': c00-sum-kernel needs kind c00");
        return Subspace::c00_sum_kernel();
      }
      if (!w.is_object() || !w.contains("basis") || !w.at("basis").is_array())
        throw ParseError(0, "field 'subspace': expected {\"basis\": [[...], ...]}");
      if (kind != "finite") throw ParseError(0, "field 'subspace': basis needs kind finite");
      std::vector<Vector> basis;
      for (const json& v : w.at("basis")) {
        try {
          basis.emplace_back(v.get<std::vector<double>>());
        } catch (const json::exception&) {
          throw ParseError(0, "field 'subspace': basis vectors must be number arrays");
        }
      }
      return Subspace::span(std::move(basis), dim);
    });
  }
  if (j.contains("expect_closed")) spec.expect_closed = field<bool>(j, "expect_closed");
  return spec;
}

SpaceSpec load_space_spec(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_space_spec(text, path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

}  // namespace pns
