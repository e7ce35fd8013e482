// Copyright 2026 The kaoncp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kaoncp::cli {

using nlohmann::json;

ConfigError::ConfigError(std::string source, int line, std::string field,
                         const std::string& msg)
    : std::runtime_error(msg),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

std::vector<double> SweepAxis::values() const {
  if (count == 1) return {start};
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[i] = start + (stop - start) * i / (count - 1);
  v.back() = stop;
  return v;
}

std::vector<double> ScenarioConfig::times() const {
  std::vector<double> t(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) t[i] = t_start + (t_end - t_start) * i / steps;
  t.back() = t_end;
  return t;
}

namespace {

// Character iterator that remembers how far the parser has read, so that
// parse callbacks can be attributed to a line.
class TrackingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator() = default;
  TrackingIterator(const char* base, const char* p, std::size_t* mark)
      : base_(base), p_(p), mark_(mark) {}

  reference operator*() const {
    *mark_ = static_cast<std::size_t>(p_ - base_);
    return *p_;
  }
  TrackingIterator& operator++() {
    ++p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++p_;
    return old;
  }
  bool operator==(const TrackingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const TrackingIterator& o) const { return p_ != o.p_; }

 private:
  const char* base_ = nullptr;
  const char* p_ = nullptr;
  std::size_t* mark_ = nullptr;
};

int line_at(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

struct Frame {
  bool array = false;
  std::string key;
  int index = 0;
};

std::string path_of(const std::vector<Frame>& stack) {
  std::string out;
  for (const Frame& f : stack) {
    if (f.array) {
      out += "[" + std::to_string(f.index) + "]";
    } else if (!f.key.empty()) {
      if (!out.empty()) out += ".";
      out += f.key;
    }
  }
  return out;
}

class Reader {
 public:
  Reader(std::string source, std::map<std::string, int> lines)
      : source_(std::move(source)), lines_(std::move(lines)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
    throw ConfigError(source_, line_of(field), field, msg);
  }

  int line_of(std::string field) const {
    while (!field.empty()) {
      const auto it = lines_.find(field);
      if (it != lines_.end()) return it->second;
      const auto cut = field.find_last_of(".[");
      if (cut == std::string::npos) break;
      field.resize(cut);
    }
    return 0;
  }

  void only_keys(const json& j, const std::string& field,
                 std::initializer_list<const char*> allowed) const {
    if (!j.is_object()) fail(field, "must be an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items()) {
      if (!ok.count(k)) fail(join(field, k), "unknown field '" + k + "'");
    }
  }

  double number(const json& j, const std::string& field) const {
    if (!j.is_number()) fail(field, "must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(field, "must be finite");
    return v;
  }

  double number_or(const json& obj, const std::string& field, const char* key,
                   double fallback) const {
    return obj.contains(key) ? number(obj.at(key), join(field, key)) : fallback;
  }

  long integer(const json& j, const std::string& field, long lo, long hi) const {
    if (!j.is_number_integer()) fail(field, "must be an integer");
    const long v = j.get<long>();
    if (v < lo || v > hi) {
      fail(field, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
  }

  std::string string(const json& j, const std::string& field) const {
    if (!j.is_string()) fail(field, "must be a string");
    return j.get<std::string>();
  }

  const json& required(const json& obj, const std::string& field, const char* key) const {
    if (!obj.contains(key)) fail(field, std::string("missing required field '") + key + "'");
    return obj.at(key);
  }

  static std::string join(const std::string& field, const std::string& key) {
    return field.empty() ? key : field + "." + key;
  }

 private:
  std::string source_;
  std::map<std::string, int> lines_;
};

void read_matrix(const Reader& r, const json& j, const std::string& field,
                 kcp_complex out[4]) {
  r.only_keys(j, field, {"re", "im"});
  const auto part = [&](const char* key, bool imag) {
    if (!j.contains(key)) {
      if (!imag) r.fail(field, "missing required field 're'");
      return;
    }
    const std::string f = Reader::join(field, key);
    const json& m = j.at(key);
    if (!m.is_array() || m.size() != 2) r.fail(f, "must be a 2x2 array");
    for (int i = 0; i < 2; ++i) {
      const std::string row = f + "[" + std::to_string(i) + "]";
      if (!m[i].is_array() || m[i].size() != 2) r.fail(row, "must be a 2x2 array");
      for (int k = 0; k < 2; ++k) {
        const double v = r.number(m[i][k], row + "[" + std::to_string(k) + "]");
        (imag ? out[2 * i + k].im : out[2 * i + k].re) = v;
      }
    }
  };
  for (int i = 0; i < 4; ++i) out[i] = {0.0, 0.0};
  part("re", false);
  part("im", true);
}

void named_projector(const std::string& name, kcp_complex out[4]) {
  const double h = 0.5;
  if (name == "K1") {
    out[0] = {1, 0}, out[1] = {0, 0}, out[2] = {0, 0}, out[3] = {0, 0};
  } else if (name == "K2") {
    out[0] = {0, 0}, out[1] = {0, 0}, out[2] = {0, 0}, out[3] = {1, 0};
  } else if (name == "K") {
    out[0] = {h, 0}, out[1] = {h, 0}, out[2] = {h, 0}, out[3] = {h, 0};
  } else {
    out[0] = {h, 0}, out[1] = {-h, 0}, out[2] = {-h, 0}, out[3] = {h, 0};
  }
}

bool is_state_name(const std::string& s) {
  return s == "K1" || s == "K2" || s == "K" || s == "Kbar";
}

void read_operator(const Reader& r, const json& j, const std::string& field,
                   kcp_complex out[4]) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!is_state_name(s)) r.fail(field, "unknown operator '" + s + "'");
    named_projector(s, out);
  } else {
    read_matrix(r, j, field, out);
  }
  double scale = 0.0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::hypot(out[i].re, out[i].im));
  if (scale == 0.0) r.fail(field, "operator must be non-zero");
  const double defect = std::abs(out[0].im) + std::abs(out[3].im) +
                        std::hypot(out[1].re - out[2].re, out[1].im + out[2].im);
  if (defect > 1e-12 * scale) r.fail(field, "operator must be Hermitian");
  double bloch[4];
  operator_bloch(out, bloch);
  double min_eig = 0.0;
  if (kcp_state_spectrum(bloch, 4, &min_eig, nullptr) != KCP_OK) {
    r.fail(field, kcp_last_error());
  }
  if (min_eig < -1e-10 * scale) r.fail(field, "operator must be positive semidefinite");
}

void read_hamiltonian(const Reader& r, const json& j, ScenarioConfig& c) {
  const std::string f = "hamiltonian";
  if (!j.is_object()) r.fail(f, "must be an object");
  if (j.contains("matrix")) {
    r.only_keys(j, f, {"matrix"});
    c.hamiltonian_from_matrix = true;
    read_matrix(r, j.at("matrix"), "hamiltonian.matrix", c.hamiltonian);
    return;
  }
  r.only_keys(j, f, {"m_s", "m_l", "gamma_s", "gamma_l"});
  c.m_s = r.number(r.required(j, f, "m_s"), "hamiltonian.m_s");
  c.m_l = r.number(r.required(j, f, "m_l"), "hamiltonian.m_l");
  c.gamma_s = r.number(r.required(j, f, "gamma_s"), "hamiltonian.gamma_s");
  c.gamma_l = r.number(r.required(j, f, "gamma_l"), "hamiltonian.gamma_l");
  if (c.gamma_s < 0) r.fail("hamiltonian.gamma_s", "width must be non-negative");
  if (c.gamma_l < 0) r.fail("hamiltonian.gamma_l", "width must be non-negative");
}

void read_dissipative(const Reader& r, const json& j, ScenarioConfig& c) {
  const std::string f = "dissipative";
  r.only_keys(j, f, {"a", "b", "c", "alpha", "beta", "gamma"});
  kcp_params& p = c.params;
  p.a = r.number_or(j, f, "a", 0.0);
  p.b = r.number_or(j, f, "b", 0.0);
  p.c = r.number_or(j, f, "c", 0.0);
  p.alpha = r.number_or(j, f, "alpha", 0.0);
  p.beta = r.number_or(j, f, "beta", 0.0);
  p.gamma = r.number_or(j, f, "gamma", 0.0);
  if (p.a < 0) r.fail("dissipative.a", "must be non-negative");
  if (p.alpha < 0) r.fail("dissipative.alpha", "must be non-negative");
  if (p.gamma < 0) r.fail("dissipative.gamma", "must be non-negative");
}

void read_time_grid(const Reader& r, const json& j, ScenarioConfig& c) {
  const std::string f = "time_grid";
  r.only_keys(j, f, {"start", "end", "steps"});
  c.t_start = r.number_or(j, f, "start", 0.0);
  c.t_end = r.number(r.required(j, f, "end"), "time_grid.end");
  c.steps = static_cast<int>(r.integer(r.required(j, f, "steps"), "time_grid.steps", 1, kMaxSteps));
  if (c.t_start < 0) r.fail("time_grid.start", "must be non-negative");
  if (!(c.t_end > c.t_start)) r.fail("time_grid.end", "must be greater than start");
}

void read_initial_state(const Reader& r, const json& j, ScenarioConfig& c) {
  const std::string f = "initial_state";
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!is_state_name(s)) r.fail(f, "unknown state '" + s + "'");
    kcp_complex m[4];
    named_projector(s, m);
    operator_bloch(m, c.rho0);
    return;
  }
  r.only_keys(j, f, {"bloch"});
  const json& b = r.required(j, f, "bloch");
  if (!b.is_array() || b.size() != 4) r.fail("initial_state.bloch", "must hold 4 numbers");
  for (int i = 0; i < 4; ++i) {
    c.rho0[i] = r.number(b[i], "initial_state.bloch[" + std::to_string(i) + "]");
  }
  double min_eig = 0.0;
  kcp_state_spectrum(c.rho0, 4, &min_eig, nullptr);
  if (!(c.rho0[0] > 0.0) || min_eig < -1e-12) {
    r.fail("initial_state.bloch", "must describe a positive state with non-zero trace");
  }
}

void read_observables(const Reader& r, const json& j, ScenarioConfig& c) {
  if (!j.is_array()) r.fail("observables", "must be an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = "observables[" + std::to_string(i) + "]";
    r.only_keys(j[i], f, {"name", "operator"});
    NamedOperator o;
    o.name = r.string(r.required(j[i], f, "name"), f + ".name");
    if (o.name.empty() || o.name.find_first_of(",\"\r\n") != std::string::npos) {
      r.fail(f + ".name", "must be non-empty and free of commas, quotes and newlines");
    }
    if (!seen.insert(o.name).second) r.fail(f + ".name", "duplicate observable '" + o.name + "'");
    read_operator(r, r.required(j[i], f, "operator"), f + ".operator", o.op);
    c.observables.push_back(o);
  }
}

void read_sweep(const Reader& r, const json& j, ScenarioConfig& c) {
  r.only_keys(j, "sweep", {"axes"});
  const json& axes = r.required(j, "sweep", "axes");
  if (!axes.is_array() || axes.empty()) r.fail("sweep.axes", "must be a non-empty array");
  static const std::set<std::string> params = {"a", "b", "c", "alpha", "beta", "gamma"};
  std::set<std::string> seen;
  long total = 1;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const std::string f = "sweep.axes[" + std::to_string(i) + "]";
    r.only_keys(axes[i], f, {"param", "start", "stop", "count"});
    SweepAxis a;
    a.param = r.string(r.required(axes[i], f, "param"), f + ".param");
    if (!params.count(a.param)) r.fail(f + ".param", "unknown parameter '" + a.param + "'");
    if (!seen.insert(a.param).second) r.fail(f + ".param", "parameter swept twice");
    a.start = r.number(r.required(axes[i], f, "start"), f + ".start");
    a.stop = r.number(r.required(axes[i], f, "stop"), f + ".stop");
    a.count = static_cast<int>(r.integer(r.required(axes[i], f, "count"), f + ".count", 1, 100000));
    total *= a.count;
    if (total > kMaxSweepPoints) r.fail(f + ".count", "sweep grid exceeds " + std::to_string(kMaxSweepPoints) + " points");
    c.axes.push_back(a);
  }
}

}  // namespace

void operator_bloch(const kcp_complex m[4], double out[4]) {
  out[0] = 0.5 * (m[0].re + m[3].re);
  out[1] = 0.5 * (m[1].re + m[2].re);
  out[2] = 0.5 * (m[1].im - m[2].im);
  out[3] = 0.5 * (m[0].re - m[3].re);
}

ScenarioConfig parse_config(const std::string& text, const std::string& source) {
  std::size_t mark = 0;
  std::vector<Frame> stack;
  std::map<std::string, int> lines;
  const auto here = [&] { return line_at(text, mark); };
  const auto element = [&] {
    if (!stack.empty() && stack.back().array) lines.emplace(path_of(stack), here());
  };

  json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    switch (ev) {
      case json::parse_event_t::key:
        stack.back().key = parsed.get<std::string>();
        lines.emplace(path_of(stack), here());
        break;
      case json::parse_event_t::object_start:
      case json::parse_event_t::array_start:
        element();
        stack.push_back({ev == json::parse_event_t::array_start, "", 0});
        break;
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        stack.pop_back();
        if (!stack.empty() && stack.back().array) ++stack.back().index;
        break;
      case json::parse_event_t::value:
        element();
        if (!stack.empty() && stack.back().array) ++stack.back().index;
        break;
    }
    return true;
  };

  json doc;
  try {
    const char* base = text.data();
    doc = json::parse(TrackingIterator(base, base, &mark),
                      TrackingIterator(base, base + text.size(), &mark), cb);
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    const auto colon = msg.find(": ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ConfigError(source, line_at(text, at), "", "syntax error: " + msg);
  } catch (const json::exception& e) {
    std::string msg = e.what();
    const auto bracket = msg.find("] ");
    if (bracket != std::string::npos) msg = msg.substr(bracket + 2);
    throw ConfigError(source, line_at(text, mark), path_of(stack), msg);
  }

  const Reader r(source, std::move(lines));
  if (!doc.is_object()) r.fail("", "top level must be an object");
  r.only_keys(doc, "", {"description", "system", "hamiltonian", "dissipative", "time_grid", "trotter_n",
                        "initial_state", "observables", "sweep", "expect", "output"});

  ScenarioConfig c;
  if (doc.contains("description")) r.string(doc.at("description"), "description");
  if (doc.contains("system")) {
    const std::string s = r.string(doc.at("system"), "system");
    if (s == "single") {
      c.system = System::Single;
    } else if (s == "two-kaon") {
      c.system = System::TwoKaon;
    } else {
      r.fail("system", "must be 'single' or 'two-kaon'");
    }
  }
  read_hamiltonian(r, r.required(doc, "", "hamiltonian"), c);
  if (doc.contains("dissipative")) read_dissipative(r, doc.at("dissipative"), c);
  read_time_grid(r, r.required(doc, "", "time_grid"), c);
  if (doc.contains("trotter_n")) {
    c.trotter_n = static_cast<int>(r.integer(doc.at("trotter_n"), "trotter_n", 1, kMaxTrotterSteps));
  }
  if (doc.contains("initial_state")) read_initial_state(r, doc.at("initial_state"), c);
  if (doc.contains("observables")) {
    read_observables(r, doc.at("observables"), c);
  } else {
    NamedOperator two{"2pi", {}}, three{"3pi", {}};
    named_projector("K1", two.op);
    named_projector("K2", three.op);
    c.observables = {two, three};
  }
  if (doc.contains("sweep")) read_sweep(r, doc.at("sweep"), c);
  if (doc.contains("expect")) {
    const json& e = doc.at("expect");
    r.only_keys(e, "expect", {"verdict"});
    if (e.contains("verdict")) {
      const std::string v = r.string(e.at("verdict"), "expect.verdict");
      if (v != "CP" && v != "simply-positive" && v != "not-positive") {
        r.fail("expect.verdict", "must be 'CP', 'simply-positive' or 'not-positive'");
      }
      c.expect_verdict = v;
    }
  }
  if (doc.contains("output")) c.output = r.string(doc.at("output"), "output");
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "", "cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

}  // namespace kaoncp::cli
