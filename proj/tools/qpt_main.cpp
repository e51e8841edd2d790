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

// qpt: simulate, reconstruct and tabulate tomography runs.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 data or file error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qpt/errors.hpp"
#include "qpt/pipeline.hpp"

namespace {

constexpr int kConfigExit = 2;
constexpr int kDataExit = 3;

struct Options {
  std::string config;
  std::string preset;
  std::string out;
  std::string input;
  std::optional<std::uint64_t> seed;
};

qpt::PipelineConfig load(const Options &o) {
  if (o.config.empty() == o.preset.empty()) {
    throw qpt::ConfigError("give exactly one of --config or --preset", "--config");
  }
  qpt::PipelineConfig c = o.preset.empty() ? qpt::load_config(o.config) : qpt::load_preset(o.preset);
  if (o.seed) {
    c.override_seed(*o.seed);
  }
  return c;
}

void add_common(CLI::App *cmd, Options &o) {
  auto *cfg = cmd->add_option("--config", o.config, "pipeline config file");
  auto *preset = cmd->add_option("--preset", o.preset, "bundled preset (fig3, fig4, cnot, depol)");
  cfg->excludes(preset);
  cmd->add_option("--out", o.out, "output directory for relative output paths");
  cmd->add_option("--seed", o.seed, "experiment seed, overrides the config");
}

int run(const std::string &command, const Options &o) {
  const std::filesystem::path out_dir = o.out;
  if (command == "plotdata" && !o.input.empty()) {
    const std::filesystem::path input = o.input;
    const std::filesystem::path plot =
        input.parent_path() / (input.stem().string() + "_plot.csv");
    qpt::cmd_plotdata(input, plot, std::cout);
    return 0;
  }
  const qpt::PipelineConfig c = load(o);
  for (const auto &w : c.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  const auto events = qpt::resolve_output(out_dir, c.outputs.events);
  const auto result = qpt::resolve_output(out_dir, c.outputs.result);
  const auto plot = qpt::resolve_output(out_dir, c.outputs.plot);
  if (command == "simulate") {
    qpt::cmd_simulate(c, events, std::cout);
  } else if (command == "reconstruct") {
    qpt::cmd_reconstruct(c, o.input.empty() ? events : std::filesystem::path(o.input), result,
                         std::cout);
  } else if (command == "plotdata") {
    qpt::cmd_plotdata(result, plot, std::cout);
  } else {
    qpt::cmd_pipeline(c, out_dir, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Entanglement-assisted process tomography: simulate, reconstruct, tabulate"};
  app.require_subcommand(1);
  Options o;

  auto *simulate = app.add_subcommand("simulate", "draw coincidence events into an event log");
  auto *reconstruct = app.add_subcommand("reconstruct", "reconstruct from an event log");
  auto *plotdata = app.add_subcommand("plotdata", "tabulate a result document for plotting");
  auto *pipeline = app.add_subcommand("pipeline", "simulate, reconstruct and tabulate");
  for (auto *cmd : {simulate, reconstruct, plotdata, pipeline}) {
    add_common(cmd, o);
  }
  reconstruct->add_option("--input", o.input, "event log (default: the config's outputs.events)");
  plotdata->add_option("--input", o.input,
                       "result document; the table is written next to it as <stem>_plot.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kConfigExit;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const qpt::ConfigError &e) {
    std::cerr << "config error";
    if (!e.field().empty()) {
      std::cerr << " [" << e.field() << "]";
    }
    std::cerr << ": " << e.what() << '\n';
    return kConfigExit;
  } catch (const qpt::DataFormatError &e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataExit;
  } catch (const qpt::FileError &e) {
    std::cerr << "file error: " << e.what() << '\n';
    return kDataExit;
  } catch (const std::exception &e) {
    // Estimator failures on the data: incomplete quorum, degenerate
    // reference, unfaithful input, too many failed bootstrap resamples.
    std::cerr << "data error: " << e.what() << '\n';
    return kDataExit;
  }
}
