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

#include "qpt/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qpt/bootstrap.hpp"
#include "qpt/errors.hpp"
#include "qpt/multi_pair.hpp"
#include "qpt/multi_party.hpp"

namespace qpt {

namespace {

const DeviceConfig &require_device(const PipelineConfig &config) {
  if (!config.device) {
    throw ConfigError("this command needs a [device] section", "device");
  }
  return *config.device;
}

ReconstructionResult estimate(const PipelineConfig &config, const CorrelationTable &table) {
  switch (config.estimator) {
    case EstimatorKind::kUnitary:
      return reconstruct_unitary(table, config.input, config.reconstruction);
    case EstimatorKind::kChoi:
      return reconstruct_choi(table, config.input, config.reconstruction);
    case EstimatorKind::kStateOnly:
      return reconstruct_state(table, config.reconstruction);
  }
  throw std::logic_error("unknown estimator");
}

std::string join(const RealVector &v) {
  std::string out;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    out += (k ? " " : "") + format_number(v(k));
  }
  return out;
}

ResultDocument make_document(const PipelineConfig &config, const ReconstructionResult &result,
                             const std::string &statistics, std::uint64_t coincidences,
                             double eta) {
  ResultDocument doc;
  doc.set("name", config.name);
  doc.set("kind", to_string(result.kind));
  doc.set("estimator", to_string(config.estimator));
  doc.set("source", config.source_description);
  if (config.device) {
    doc.set("device", config.device->description);
  }
  doc.set("statistics", statistics);
  if (statistics != "exact") {
    doc.set("coincidences", std::to_string(coincidences));
    doc.set("seed", std::to_string(config.plan.seed));
    doc.set("eta", format_number(eta));
  }
  doc.set("gauge", result.gauge);
  if (result.reference) doc.set("reference", result.reference->label());
  if (result.p) doc.set("p", format_number(*result.p));
  if (result.state_norm) doc.set("state_norm", format_number(*result.state_norm));
  if (result.condition_number) doc.set("condition_number", format_number(*result.condition_number));
  if (result.unitarity_deviation) {
    doc.set("unitarity_deviation", format_number(*result.unitarity_deviation));
  }
  if (result.choi_eigenvalues) doc.set("choi_eigenvalues", join(*result.choi_eigenvalues));
  if (result.negativity) doc.set("negativity", format_number(*result.negativity));
  if (result.kind == ReconstructionKind::kDeviceChoi) {
    doc.set("occurrence_probability", "unrecoverable from coincidence-normalized data");
  } else if (result.occurrence_probability) {
    doc.set("occurrence_probability", format_number(*result.occurrence_probability));
  }
  return doc;
}

void add_truth(const PipelineConfig &config, ReconstructionResult &result, ResultDocument &doc) {
  const std::optional<ComplexMatrix> truth = ground_truth(config, result);
  if (truth) {
    if (result.kind == ReconstructionKind::kDeviceUnitary) {
      result.fidelity = fidelity_unitary(result.matrix, *truth);
      doc.set("fidelity", format_number(*result.fidelity));
    } else if (result.kind == ReconstructionKind::kDeviceChoi) {
      result.choi_distance = distance_choi(result.matrix, *truth);
      doc.set("choi_distance", format_number(*result.choi_distance));
    } else {
      doc.set("state_fidelity",
              format_number(std::norm((truth->adjoint() * result.matrix).trace()) /
                            result.matrix.squaredNorm()));
    }
  }
  for (const auto &w : config.warnings) {
    doc.header.emplace_back("warning", w);
  }
  doc.elements = element_rows(result, truth);
}

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FileError("cannot write '" + path.string() + "'");
  }
  out << text;
  out.flush();
  if (!out) {
    throw FileError("error while writing '" + path.string() + "'");
  }
}

std::ifstream open_input(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileError("cannot read '" + path.string() + "'");
  }
  return in;
}

}  // namespace

std::optional<ComplexMatrix> ground_truth(const PipelineConfig &config,
                                          const ReconstructionResult &result) {
  if (!config.device) {
    return std::nullopt;
  }
  const QuantumChannel &device = config.device->channel;
  switch (result.kind) {
    case ReconstructionKind::kDeviceUnitary: {
      if (!device.is_unitary() || device.dim() != 2) {
        return std::nullopt;
      }
      ComplexMatrix truth = fix_unitary_gauge(device.unitary_matrix());
      // Same sign branch as the estimate.
      if ((truth.adjoint() * result.matrix).trace().real() < 0.0) {
        truth = -truth;
      }
      return truth;
    }
    case ReconstructionKind::kDeviceChoi: {
      const ComplexMatrix choi = device.choi();
      return ComplexMatrix(choi * (static_cast<double>(device.dim()) / choi.trace().real()));
    }
    case ReconstructionKind::kInputState: {
      if (config.pairs() != 1) {
        return std::nullopt;
      }
      const BipartiteState out = propagate(device, config.input);
      if (!out.is_pure() || !result.reference) {
        return std::nullopt;
      }
      ComplexMatrix psi = out.coeffs();
      const Complex r = psi(result.reference->n, result.reference->m);
      if (std::abs(r) < 1e-12) {
        return std::nullopt;
      }
      psi *= std::conj(r) / std::abs(r);
      return psi;
    }
  }
  return std::nullopt;
}

EventLog simulate_events(const PipelineConfig &config, SimulationSummary *summary) {
  const DeviceConfig &device = require_device(config);
  if (config.exact) {
    throw ConfigError("plan.exact = true: exact statistics draw no events", "plan.exact");
  }
  EventLog log;
  log.header = {config.coincidences, config.plan.seed, config.eta(), 2};
  SimulationSummary s;
  if (config.pairs() == 2) {
    const ComplexMatrix rho = two_pair_output_density(device.channel, config.input, config.input);
    log.header.parties = 4;
    log.multi_events = run_multi_party_experiment(rho, config.coincidences, config.plan.seed);
    s.coincidences = log.multi_events.size();
    s.trials = s.coincidences;
    const std::size_t settings = multi_party_setting_count(4);
    std::vector<std::uint64_t> per(settings, 0);
    for (const auto &e : log.multi_events) {
      std::size_t idx = 0;
      for (int a : e.axes) {
        idx = 3 * idx + static_cast<std::size_t>(a - 1);
      }
      ++per[idx];
    }
    for (std::size_t k = 0; k < settings; ++k) {
      std::string label;
      for (int a : multi_party_setting(4, k)) {
        label += PauliIndex(a).letter();
      }
      s.per_setting.emplace_back(label, per[k]);
    }
  } else {
    const BipartiteState out = propagate(device.channel, config.input);
    ExperimentRun run = run_experiment(out, config.plan);
    s.coincidences = run.events.size();
    s.trials = run.trials;
    const OutcomeCounts counts = tally(run.events);
    for (int k = 0; k < MeasurementSetting::kCount; ++k) {
      const auto &c = counts[k];
      s.per_setting.emplace_back(MeasurementSetting::from_index(k).label(), c[0] + c[1] + c[2] + c[3]);
    }
    log.events = std::move(run.events);
  }
  if (summary) {
    *summary = std::move(s);
  }
  return log;
}

ResultDocument reconstruct_exact(const PipelineConfig &config) {
  const DeviceConfig &device = require_device(config);
  ReconstructionResult result;
  if (config.pairs() == 2) {
    const ComplexMatrix rho = two_pair_output_density(device.channel, config.input, config.input);
    result = reconstruct_two_qubit_device(exact_pauli_tensor(rho), config.input, config.input,
                                          config.reconstruction);
  } else {
    result = estimate(config, exact_correlations(propagate(device.channel, config.input)));
  }
  ResultDocument doc = make_document(config, result, "exact", 0, 1.0);
  doc.set("errors", "none (exact statistics)");
  add_truth(config, result, doc);
  return doc;
}

ResultDocument reconstruct_from_log(const PipelineConfig &config, const EventLog &log) {
  ReconstructionResult result;
  ResultDocument doc;
  if (log.header.parties == 4) {
    if (config.estimator != EstimatorKind::kChoi) {
      throw ConfigError("four-party event logs need estimator.kind = choi", "estimator.kind");
    }
    const PauliTensor tensor = pauli_tensor_from_events(4, log.multi_events);
    result = reconstruct_two_qubit_device(tensor, config.input, config.input, config.reconstruction);
    doc = make_document(config, result, "sampled", log.header.coincidences, log.header.eta);
    doc.set("errors", "not computed for two-pair data");
  } else if (log.header.parties == 2) {
    const OutcomeCounts counts = tally(log.events);
    result = estimate(config, correlations_from_counts(counts));
    const BootstrapResult b = bootstrap_errors(
        counts, [&](const CorrelationTable &t) { return estimate(config, t).matrix; },
        config.bootstrap);
    result.error_re = b.std_re;
    result.error_im = b.std_im;
    doc = make_document(config, result, "sampled", log.header.coincidences, log.header.eta);
    doc.set("errors", "bootstrap standard deviation");
    doc.set("bootstrap_resamples", std::to_string(config.bootstrap.resamples));
    doc.set("bootstrap_seed", std::to_string(config.bootstrap.seed));
    doc.set("bootstrap_redraws", std::to_string(b.redraws));
    if (b.redraw_warning) {
      doc.header.emplace_back("warning", "more than 1% of bootstrap resamples were redrawn");
    }
  } else {
    throw DataFormatError("event logs with " + std::to_string(log.header.parties) +
                              " parties are not reconstructed",
                          1);
  }
  add_truth(config, result, doc);
  return doc;
}

SimulationSummary cmd_simulate(const PipelineConfig &config,
                               const std::filesystem::path &events_path, std::ostream &report) {
  SimulationSummary summary;
  const EventLog log = simulate_events(config, &summary);
  std::ostringstream text;
  if (log.header.parties == 2) {
    write_event_log(text, log.header, log.events);
  } else {
    write_event_log(text, log.header, log.multi_events);
  }
  write_file(events_path, text.str());
  for (const auto &[label, n] : summary.per_setting) {
    report << "setting " << label << ": " << n << " events\n";
  }
  report << "wrote " << summary.coincidences << " coincidences (" << summary.trials
         << " trials, eta " << format_number(config.eta()) << ") to " << events_path.string()
         << '\n';
  return summary;
}

ResultDocument cmd_reconstruct(const PipelineConfig &config,
                               const std::filesystem::path &events_path,
                               const std::filesystem::path &result_path, std::ostream &report) {
  ResultDocument doc;
  if (config.exact) {
    doc = reconstruct_exact(config);
  } else {
    std::ifstream in = open_input(events_path);
    doc = reconstruct_from_log(config, read_event_log(in));
  }
  std::ostringstream text;
  write_result_document(text, doc);
  write_file(result_path, text.str());
  for (const char *key : {"kind", "fidelity", "choi_distance", "choi_eigenvalues"}) {
    if (const auto v = doc.get(key)) {
      report << key << ": " << *v << '\n';
    }
  }
  for (const auto &[k, v] : doc.header) {
    if (k == "warning") {
      report << "warning: " << v << '\n';
    }
  }
  report << "wrote result to " << result_path.string() << '\n';
  return doc;
}

void cmd_plotdata(const std::filesystem::path &result_path, const std::filesystem::path &plot_path,
                  std::ostream &report) {
  std::ifstream in = open_input(result_path);
  const ResultDocument doc = read_result_document(in);
  std::ostringstream text;
  write_plot_data(text, doc);
  write_file(plot_path, text.str());
  report << "wrote " << 2 * doc.elements.size() << " plot rows to " << plot_path.string() << '\n';
}

std::filesystem::path resolve_output(const std::filesystem::path &out_dir,
                                     const std::filesystem::path &path) {
  if (path.is_absolute() || out_dir.empty()) {
    return path;
  }
  return out_dir / path;
}

PipelineArtifacts cmd_pipeline(const PipelineConfig &config, const std::filesystem::path &out_dir,
                               std::ostream &report) {
  PipelineArtifacts a;
  const std::filesystem::path events = resolve_output(out_dir, config.outputs.events);
  a.result = resolve_output(out_dir, config.outputs.result);
  a.plot = resolve_output(out_dir, config.outputs.plot);
  if (!config.exact) {
    cmd_simulate(config, events, report);
    a.events = events;
  }
  a.document = cmd_reconstruct(config, events, a.result, report);
  cmd_plotdata(a.result, a.plot, report);
  return a;
}

}  // namespace qpt
