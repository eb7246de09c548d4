// Copyright 2026 The shutterlab Authors. All rights reserved.
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

#include "shutterlab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "shutterlab/errors.hpp"

namespace shutterlab::cli {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::MapConcurrence:
      return "map";
    case Mode::TraceTime:
      return "trace";
    case Mode::ScanDx:
      return "scan";
    case Mode::Activation:
      return "activation";
    case Mode::Verify:
      return "verify";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(std::string_view text) {
  for (Mode m : {Mode::MapConcurrence, Mode::TraceTime, Mode::ScanDx, Mode::Activation, Mode::Verify}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

RunConfig preset_config(std::string_view preset) {
  presets::FigurePreset p;
  if (preset == "fig1") {
    p = presets::fig1();
  } else if (preset == "fig2") {
    p = presets::fig2();
  } else {
    throw ConfigError("unknown preset '" + std::string(preset) + "' (expected fig1 or fig2)", 0, "preset");
  }
  const MediumConstants electron = MediumConstants::electron();
  RunConfig c;
  c.preset = std::string(p.name);
  c.hbar = electron.hbar();
  c.mass = electron.mass();
  c.pair = p.pair;
  c.x1 = p.x1;
  c.x2 = p.x2;
  c.t_fixed = p.t_fixed;
  c.t_grid = p.t_grid;
  c.xi_grid = p.xi_grid;
  c.dx_grid = p.dx_grid;
  c.threshold_frac = p.threshold_frac;
  return c;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line;
};

double to_double(const std::string& key, const Entry& e) {
  double v = 0.0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("line " + std::to_string(e.line) + ": '" + key + "' expects a number, got '" + e.value + "'",
                      e.line, key);
  }
  return v;
}

std::size_t to_count(const std::string& key, const Entry& e) {
  unsigned long long v = 0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("line " + std::to_string(e.line) + ": '" + key + "' expects a non-negative integer, got '" +
                          e.value + "'",
                      e.line, key);
  }
  return static_cast<std::size_t>(v);
}

using Setter = std::function<void(RunConfig&, const std::string&, const Entry&)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"mode",
       [](RunConfig& c, const std::string& k, const Entry& e) {
         auto m = parse_mode(e.value);
         if (!m) throw ConfigError("line " + std::to_string(e.line) + ": unknown mode '" + e.value + "'", e.line, k);
         c.mode = *m;
       }},
      {"hbar", [](RunConfig& c, const std::string& k, const Entry& e) { c.hbar = to_double(k, e); }},
      {"mass", [](RunConfig& c, const std::string& k, const Entry& e) { c.mass = to_double(k, e); }},
      {"alpha", [](RunConfig& c, const std::string& k, const Entry& e) { c.pair.alpha = to_double(k, e); }},
      {"beta", [](RunConfig& c, const std::string& k, const Entry& e) { c.pair.beta = to_double(k, e); }},
      {"xi_mag", [](RunConfig& c, const std::string& k, const Entry& e) { c.pair.xi_mag = to_double(k, e); }},
      {"delta_theta",
       [](RunConfig& c, const std::string& k, const Entry& e) { c.pair.delta_theta = to_double(k, e); }},
      {"statistics",
       [](RunConfig& c, const std::string& k, const Entry& e) {
         if (e.value == "boson") {
           c.pair.statistics = Statistics::Boson;
         } else if (e.value == "fermion") {
           c.pair.statistics = Statistics::Fermion;
         } else {
           throw ConfigError("line " + std::to_string(e.line) + ": statistics must be boson or fermion", e.line, k);
         }
       }},
      {"x1", [](RunConfig& c, const std::string& k, const Entry& e) { c.x1 = to_double(k, e); }},
      {"x2", [](RunConfig& c, const std::string& k, const Entry& e) { c.x2 = to_double(k, e); }},
      {"t", [](RunConfig& c, const std::string& k, const Entry& e) { c.t_fixed = to_double(k, e); }},
      {"t_start", [](RunConfig& c, const std::string& k, const Entry& e) { c.t_grid.start = to_double(k, e); }},
      {"t_stop", [](RunConfig& c, const std::string& k, const Entry& e) { c.t_grid.stop = to_double(k, e); }},
      {"t_points", [](RunConfig& c, const std::string& k, const Entry& e) { c.t_grid.n_points = to_count(k, e); }},
      {"xi_start", [](RunConfig& c, const std::string& k, const Entry& e) { c.xi_grid.start = to_double(k, e); }},
      {"xi_stop", [](RunConfig& c, const std::string& k, const Entry& e) { c.xi_grid.stop = to_double(k, e); }},
      {"xi_points",
       [](RunConfig& c, const std::string& k, const Entry& e) { c.xi_grid.n_points = to_count(k, e); }},
      {"dx_start", [](RunConfig& c, const std::string& k, const Entry& e) { c.dx_grid.start = to_double(k, e); }},
      {"dx_stop", [](RunConfig& c, const std::string& k, const Entry& e) { c.dx_grid.stop = to_double(k, e); }},
      {"dx_points",
       [](RunConfig& c, const std::string& k, const Entry& e) { c.dx_grid.n_points = to_count(k, e); }},
      {"threshold_frac",
       [](RunConfig& c, const std::string& k, const Entry& e) { c.threshold_frac = to_double(k, e); }},
      {"threads",
       [](RunConfig& c, const std::string& k, const Entry& e) { c.threads = static_cast<unsigned>(to_count(k, e)); }},
      {"nonbunching_tol",
       [](RunConfig& c, const std::string& k, const Entry& e) {
         c.nonbunching_tol = e.value == "auto" ? -1.0 : to_double(k, e);
         if (e.value != "auto" && !(c.nonbunching_tol >= 0.0)) {
           throw ConfigError("nonbunching_tol must be >= 0 or 'auto'", e.line, k);
         }
       }},
      {"out", [](RunConfig& c, const std::string&, const Entry& e) { c.output_path = e.value; }},
  };
  return table;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require(bool ok, const std::string& key, const std::string& constraint) {
  if (!ok) throw ConfigError("invalid '" + key + "': " + constraint, 0, key);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": missing key", line_no);
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": missing value for '" + key + "'", line_no, key);
    }
    const bool known = key == "preset" || std::any_of(setters().begin(), setters().end(),
                                                      [&](const auto& s) { return s.first == key; });
    if (!known) throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", line_no, key);
    if (entries.count(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", line_no, key);
    }
    entries.emplace(key, Entry{value, line_no});
  }

  RunConfig config;
  if (auto it = entries.find("preset"); it != entries.end()) {
    try {
      config = preset_config(it->second.value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(it->second.line) + ": " + e.what(), it->second.line, "preset");
    }
  } else {
    config = preset_config("fig2");
  }
  for (const auto& [key, setter] : setters()) {
    if (auto it = entries.find(key); it != entries.end()) setter(config, key, it->second);
  }
  validate(config);
  return config;
}

void validate(const RunConfig& c) {
  require(std::isfinite(c.hbar) && c.hbar > 0.0, "hbar", "must be finite and > 0");
  require(std::isfinite(c.mass) && c.mass > 0.0, "mass", "must be finite and > 0");
  require(std::isfinite(c.hbar / c.mass) && c.hbar / c.mass > 0.0, "mass", "hbar/mass must be finite and > 0");
  require(std::isfinite(c.pair.alpha) && c.pair.alpha > 0.0, "alpha", "must be finite and > 0");
  require(std::isfinite(c.pair.beta) && c.pair.beta > 0.0, "beta", "must be finite and > 0");
  require(c.pair.alpha != c.pair.beta, "beta", "must differ from alpha");
  require(c.pair.xi_mag >= 0.0 && c.pair.xi_mag <= 1.0, "xi_mag", "must lie in [0, 1]");
  require(std::isfinite(c.pair.delta_theta), "delta_theta", "must be finite");
  require(std::isfinite(c.x1), "x1", "must be finite");
  require(std::isfinite(c.x2), "x2", "must be finite");
  require(std::isfinite(c.t_fixed) && c.t_fixed >= 0.0, "t", "must be finite and >= 0");
  require(c.threshold_frac > 0.0 && c.threshold_frac < 1.0, "threshold_frac", "must lie in (0, 1)");

  const auto check_grid = [](const sweep::GridSpec& g, const std::string& prefix) {
    require(std::isfinite(g.start), prefix + "_start", "must be finite");
    require(std::isfinite(g.stop), prefix + "_stop", "must be finite");
    require(g.start < g.stop, prefix + "_stop", "must be greater than " + prefix + "_start");
    require(g.n_points >= 2, prefix + "_points", "must be >= 2");
  };
  check_grid(c.t_grid, "t");
  require(c.t_grid.start > 0.0, "t_start", "must be > 0");
  check_grid(c.xi_grid, "xi");
  require(c.xi_grid.start >= 0.0, "xi_start", "must be >= 0");
  require(c.xi_grid.stop <= 1.0, "xi_stop", "must be <= 1");
  check_grid(c.dx_grid, "dx");
  require(c.t_grid.axis == sweep::Axis::Time && c.xi_grid.axis == sweep::Axis::XiCoefficient &&
              c.dx_grid.axis == sweep::Axis::DeltaX,
          "grid", "axis mismatch");
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "# shutterlab run configuration\n";
  os << "preset = " << c.preset << "\n";
  os << "mode = " << to_string(c.mode) << "\n";
  os << "hbar = " << format_double(c.hbar) << "\n";
  os << "mass = " << format_double(c.mass) << "\n";
  os << "alpha = " << format_double(c.pair.alpha) << "\n";
  os << "beta = " << format_double(c.pair.beta) << "\n";
  os << "xi_mag = " << format_double(c.pair.xi_mag) << "\n";
  os << "delta_theta = " << format_double(c.pair.delta_theta) << "\n";
  os << "statistics = " << to_string(c.pair.statistics) << "\n";
  os << "x1 = " << format_double(c.x1) << "\n";
  os << "x2 = " << format_double(c.x2) << "\n";
  os << "t = " << format_double(c.t_fixed) << "\n";
  os << "t_start = " << format_double(c.t_grid.start) << "\n";
  os << "t_stop = " << format_double(c.t_grid.stop) << "\n";
  os << "t_points = " << c.t_grid.n_points << "\n";
  os << "xi_start = " << format_double(c.xi_grid.start) << "\n";
  os << "xi_stop = " << format_double(c.xi_grid.stop) << "\n";
  os << "xi_points = " << c.xi_grid.n_points << "\n";
  os << "dx_start = " << format_double(c.dx_grid.start) << "\n";
  os << "dx_stop = " << format_double(c.dx_grid.stop) << "\n";
  os << "dx_points = " << c.dx_grid.n_points << "\n";
  os << "threshold_frac = " << format_double(c.threshold_frac) << "\n";
  os << "threads = " << c.threads << "\n";
  os << "nonbunching_tol = " << (c.nonbunching_tol < 0.0 ? std::string("auto") : format_double(c.nonbunching_tol))
     << "\n";
  if (!c.output_path.empty()) os << "out = " << c.output_path << "\n";
  return os.str();
}

}  // namespace shutterlab::cli
