// Copyright 2026 The qpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpt/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "qpt/multi_pair.hpp"

namespace qpt {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>> kSchema = {
    {"source", {"state"}},
    {"device", {"plates", "channel", "gate"}},
    {"plan", {"coincidences", "seed", "eta", "exact", "allocation"}},
    {"estimator", {"kind", "reference", "reference_floor", "project_psd"}},
    {"bootstrap", {"resamples", "seed"}},
    {"outputs", {"events", "result", "plot"}},
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) {
    out.push_back(w);
  }
  return out;
}

bool parse_real(std::string_view s, double &out) {
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

class Fields {
 public:
  explicit Fields(const pt::ptree &tree) : tree_(tree) {}

  std::optional<std::string> text(const std::string &field) const {
    const auto v = tree_.get_optional<std::string>(pt::ptree::path_type(field, '.'));
    if (!v) {
      return std::nullopt;
    }
    return trim(*v);
  }

  std::optional<double> real(const std::string &field) const {
    const auto t = text(field);
    if (!t) {
      return std::nullopt;
    }
    double v = 0.0;
    if (!parse_real(*t, v)) {
      throw ConfigError(field + ": '" + *t + "' is not a number", field);
    }
    return v;
  }

  std::optional<std::uint64_t> count(const std::string &field) const {
    const auto t = text(field);
    if (!t) {
      return std::nullopt;
    }
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t->data(), t->data() + t->size(), v);
    if (t->empty() || ec != std::errc() || ptr != t->data() + t->size()) {
      throw ConfigError(field + ": '" + *t + "' is not a non-negative integer", field);
    }
    return v;
  }

  std::optional<bool> flag(const std::string &field) const {
    const auto t = text(field);
    if (!t) {
      return std::nullopt;
    }
    if (*t == "true" || *t == "yes" || *t == "1") return true;
    if (*t == "false" || *t == "no" || *t == "0") return false;
    throw ConfigError(field + ": expected true or false, got '" + *t + "'", field);
  }

 private:
  const pt::ptree &tree_;
};

void check_schema(const pt::ptree &tree) {
  for (const auto &[section, body] : tree) {
    if (body.empty()) {
      if (section == "name") {
        continue;
      }
      throw ConfigError("key '" + section + "' must sit inside a section", section);
    }
    const auto it = kSchema.find(section);
    if (it == kSchema.end()) {
      throw ConfigError("unknown section [" + section + "]", section);
    }
    for (const auto &[key, value] : body) {
      if (!it->second.count(key)) {
        throw ConfigError("unknown key '" + key + "' in [" + section + "]", section + "." + key);
      }
    }
  }
}

BipartiteState parse_source(const std::string &text) {
  const std::string field = "source.state";
  const auto w = words(text);
  if (w.empty()) {
    throw ConfigError("source.state is empty", field);
  }
  try {
    if (w[0] == "triplet" && w.size() == 1) {
      return triplet_state();
    }
    if (w[0] == "bell" && w.size() == 2) {
      double j = 0.0;
      if (!parse_real(w[1], j) || j != std::floor(j) || j < 0 || j > 3) {
        throw ConfigError("bell index must be 0, 1, 2 or 3", field);
      }
      return bell_state(PauliIndex(static_cast<int>(j)));
    }
    if (w[0] == "diag" && w.size() == 2) {
      double eps = 0.0;
      if (!parse_real(w[1], eps)) {
        throw ConfigError("diag needs an angle in radians", field);
      }
      ComplexMatrix psi = ComplexMatrix::Zero(2, 2);
      psi(0, 0) = std::cos(eps);
      psi(1, 1) = std::sin(eps);
      return BipartiteState::pure_normalized(psi);
    }
    if (w[0] == "coeffs") {
      const std::string rest = text.substr(text.find("coeffs") + 6);
      return BipartiteState::pure_normalized(parse_complex_matrix(rest));
    }
  } catch (const std::invalid_argument &e) {
    throw ConfigError(field + ": " + e.what(), field);
  }
  throw ConfigError("source.state must be 'triplet', 'bell J', 'diag EPS' or 'coeffs a b c d'",
                    field);
}

DeviceConfig parse_device(const Fields &f) {
  const auto plates = f.text("device.plates");
  const auto channel = f.text("device.channel");
  const auto gate = f.text("device.gate");
  const int given = (plates ? 1 : 0) + (channel ? 1 : 0) + (gate ? 1 : 0);
  if (given != 1) {
    throw ConfigError("[device] needs exactly one of plates, channel, gate", "device");
  }
  DeviceConfig d;
  if (plates) {
    try {
      d.plates = parse_plates(*plates);
    } catch (const std::invalid_argument &e) {
      throw ConfigError(std::string("device.plates: ") + e.what(), "device.plates");
    }
    d.channel = compile_device(*d.plates);
    d.description = "plates " + format_plates(*d.plates);
    return d;
  }
  if (gate) {
    try {
      d.channel = QuantumChannel::unitary(two_qubit_gate(*gate));
    } catch (const std::invalid_argument &e) {
      throw ConfigError(std::string("device.gate: ") + e.what(), "device.gate");
    }
    d.gate = *gate;
    d.description = "gate " + *gate;
    return d;
  }
  const std::string field = "device.channel";
  const auto w = words(*channel);
  try {
    if (w.size() == 1 && w[0] == "identity") {
      d.channel = QuantumChannel::identity();
    } else if (w.size() == 2 && (w[0] == "depolarizing" || w[0] == "amplitude_damping")) {
      double x = 0.0;
      if (!parse_real(w[1], x)) {
        throw ConfigError(field + ": '" + w[1] + "' is not a number", field);
      }
      d.channel = w[0] == "depolarizing" ? QuantumChannel::depolarizing(x)
                                         : QuantumChannel::amplitude_damping(x);
    } else if (!w.empty() && w[0] == "kraus") {
      std::vector<ComplexMatrix> ops;
      std::string rest = channel->substr(channel->find("kraus") + 5);
      std::istringstream parts(rest);
      std::string part;
      while (std::getline(parts, part, ';')) {
        ops.push_back(parse_complex_matrix(part));
      }
      d.channel = QuantumChannel::from_kraus(ops);
    } else {
      throw ConfigError(
          "device.channel must be identity, depolarizing P, amplitude_damping G or "
          "kraus K1 ; K2 ...",
          field);
    }
  } catch (const std::invalid_argument &e) {
    throw ConfigError(field + ": " + e.what(), field);
  }
  if (d.channel.dim() != 2) {
    throw ConfigError(field + ": channel must act on one qubit", field);
  }
  d.description = trim(*channel);
  return d;
}

std::optional<BasisPair> parse_reference(const std::string &text) {
  if (text == "auto") {
    return std::nullopt;
  }
  if (text.size() == 2 && (text[0] == '0' || text[0] == '1') && (text[1] == '0' || text[1] == '1')) {
    return BasisPair{text[0] - '0', text[1] - '0'};
  }
  throw ConfigError("estimator.reference must be auto, 00, 01, 10 or 11", "estimator.reference");
}

}  // namespace

ConfigError::ConfigError(const std::string &what, std::string field, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      field_(std::move(field)),
      line_(line) {}

std::string to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kUnitary:
      return "unitary";
    case EstimatorKind::kChoi:
      return "choi";
    case EstimatorKind::kStateOnly:
      return "state_only";
  }
  return "unknown";
}

void PipelineConfig::override_seed(std::uint64_t seed) {
  plan.seed = seed;
  if (!bootstrap_seed_explicit) {
    bootstrap.seed = seed;
  }
}

Complex parse_complex(std::string_view text) {
  const std::string s = trim(text);
  const auto bad = [&] { return std::invalid_argument("'" + s + "' is not a complex number"); };
  if (s.empty()) {
    throw bad();
  }
  if (s.back() != 'i') {
    double re = 0.0;
    if (!parse_real(s, re)) throw bad();
    return {re, 0.0};
  }
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_part = [&](const std::string &t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    double v = 0.0;
    if (!parse_real(t, v)) throw bad();
    return v;
  };
  if (split == std::string::npos) {
    return {0.0, imag_part(body)};
  }
  double re = 0.0;
  if (!parse_real(body.substr(0, split), re)) throw bad();
  return {re, imag_part(body.substr(split))};
}

ComplexMatrix parse_complex_matrix(std::string_view text) {
  const auto w = words(text);
  const auto d = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(w.size()))));
  if (w.empty() || static_cast<std::size_t>(d * d) != w.size()) {
    throw std::invalid_argument("matrix needs d*d entries, got " + std::to_string(w.size()));
  }
  ComplexMatrix m(d, d);
  for (Eigen::Index k = 0; k < d * d; ++k) {
    m(k / d, k % d) = parse_complex(w[static_cast<std::size_t>(k)]);
  }
  return m;
}

PipelineConfig parse_config(std::istream &in, std::string name) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error &e) {
    throw ConfigError(e.message(), "", e.line());
  }
  check_schema(tree);
  const Fields f(tree);

  PipelineConfig c;
  c.name = f.text("name").value_or(std::move(name));

  c.source_description = f.text("source.state").value_or("triplet");
  c.input = parse_source(c.source_description);

  if (tree.get_child_optional("device")) {
    c.device = parse_device(f);
  }

  // Estimator.
  const std::string kind = f.text("estimator.kind").value_or("unitary");
  if (kind == "unitary") {
    c.estimator = EstimatorKind::kUnitary;
  } else if (kind == "choi") {
    c.estimator = EstimatorKind::kChoi;
  } else if (kind == "state_only") {
    c.estimator = EstimatorKind::kStateOnly;
  } else {
    throw ConfigError("estimator.kind must be unitary, choi or state_only", "estimator.kind");
  }
  if (const auto r = f.text("estimator.reference")) {
    c.reconstruction.reference = parse_reference(*r);
  }
  if (const auto floor = f.real("estimator.reference_floor")) {
    if (!(*floor >= 0.0 && *floor < 1.0)) {
      throw ConfigError("estimator.reference_floor must lie in [0, 1)", "estimator.reference_floor");
    }
    c.reconstruction.reference_floor = *floor;
  }
  c.reconstruction.project_psd = f.flag("estimator.project_psd").value_or(false);

  // Plan.
  c.exact = f.flag("plan.exact").value_or(false);
  c.plan.seed = f.count("plan.seed").value_or(0);
  const double eta = f.real("plan.eta").value_or(1.0);
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw ConfigError("plan.eta must lie in (0, 1]", "plan.eta");
  }
  if (eta < 1.0) {
    c.plan.loss = LossModel(eta);
  }
  const auto coincidences = f.count("plan.coincidences");
  if (const auto alloc = f.text("plan.allocation")) {
    const auto w = words(*alloc);
    if (w.size() != MeasurementSetting::kCount) {
      throw ConfigError("plan.allocation needs 9 counts (xx xy xz yx yy yz zx zy zz)",
                        "plan.allocation");
    }
    for (int k = 0; k < MeasurementSetting::kCount; ++k) {
      const auto [ptr, ec] = std::from_chars(w[k].data(), w[k].data() + w[k].size(), c.plan.allocation[k]);
      if (ec != std::errc() || ptr != w[k].data() + w[k].size()) {
        throw ConfigError("plan.allocation: '" + w[k] + "' is not a count", "plan.allocation");
      }
    }
    c.coincidences = c.plan.total();
    if (coincidences && *coincidences != c.coincidences) {
      throw ConfigError("plan.allocation sums to " + std::to_string(c.coincidences) +
                            " but plan.coincidences is " + std::to_string(*coincidences),
                        "plan.allocation");
    }
  } else if (coincidences) {
    c.coincidences = *coincidences;
    const auto loss = c.plan.loss;
    const auto seed = c.plan.seed;
    c.plan = ExperimentPlan::uniform(c.coincidences, seed, loss);
  }
  if (!c.exact && c.coincidences == 0) {
    throw ConfigError("plan.coincidences must be positive (or set plan.exact = true)",
                      "plan.coincidences");
  }

  // Bootstrap.
  c.bootstrap.resamples = static_cast<int>(f.count("bootstrap.resamples").value_or(1000));
  if (c.bootstrap.resamples < kMinResamples) {
    throw ConfigError("bootstrap.resamples must be at least " + std::to_string(kMinResamples),
                      "bootstrap.resamples");
  }
  if (const auto s = f.count("bootstrap.seed")) {
    c.bootstrap.seed = *s;
    c.bootstrap_seed_explicit = true;
  } else {
    c.bootstrap.seed = c.plan.seed;
  }

  // Outputs.
  if (const auto p = f.text("outputs.events")) c.outputs.events = *p;
  if (const auto p = f.text("outputs.result")) c.outputs.result = *p;
  if (const auto p = f.text("outputs.plot")) c.outputs.plot = *p;

  // Cross-field checks.
  if (c.estimator != EstimatorKind::kStateOnly && !faithfulness_check(c.input).full_rank) {
    throw ConfigError("source.state is not full rank, so the device cannot be reconstructed",
                      "source.state");
  }
  if (c.pairs() == 2) {
    if (c.estimator != EstimatorKind::kChoi) {
      throw ConfigError("two-qubit gates need estimator.kind = choi", "estimator.kind");
    }
    if (f.text("plan.allocation")) {
      throw ConfigError("plan.allocation applies to single-pair runs only", "plan.allocation");
    }
    if (c.plan.loss) {
      throw ConfigError("plan.eta < 1 is not simulated for two-pair runs", "plan.eta");
    }
  }
  if (c.device && !c.device->channel.is_unitary()) {
    if (c.estimator == EstimatorKind::kUnitary) {
      c.warnings.push_back("device '" + c.device->description +
                           "' is not unitary; the unitary estimator will misreport it, use "
                           "estimator.kind = choi");
    } else if (c.estimator == EstimatorKind::kStateOnly) {
      c.warnings.push_back("device '" + c.device->description +
                           "' is not unitary; the output state is mixed and the pure-state "
                           "estimate is only indicative");
    }
  }
  return c;
}

PipelineConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'", "--config");
  }
  return parse_config(in, path.stem().string());
}

std::filesystem::path preset_directory() {
  if (const char *env = std::getenv("QPT_PRESET_DIR")) {
    return env;
  }
  return QPT_PRESET_DIR;
}

PipelineConfig load_preset(std::string_view name) {
  const bool ok = !name.empty() && std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
  });
  const std::filesystem::path path = preset_directory() / (std::string(name) + ".ini");
  if (!ok || !std::filesystem::exists(path)) {
    std::string known;
    if (std::filesystem::is_directory(preset_directory())) {
      std::vector<std::string> names;
      for (const auto &entry : std::filesystem::directory_iterator(preset_directory())) {
        if (entry.path().extension() == ".ini") {
          names.push_back(entry.path().stem().string());
        }
      }
      std::sort(names.begin(), names.end());
      for (const auto &n : names) {
        known += (known.empty() ? "" : ", ") + n;
      }
    }
    throw ConfigError("unknown preset '" + std::string(name) + "' (available: " + known + ")",
                      "--preset");
  }
  std::ifstream in(path);
  return parse_config(in, std::string(name));
}

}  // namespace qpt
