// tools/main.cpp

// Copyright 2026  gaborfeat authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = gaborfeat::cli;

namespace {

void add_output_options(CLI::App* cmd, cli::OutputOptions* opt) {
  cmd->add_option("inputs", opt->inputs, "input WAV file(s)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", opt->output,
                  "output file (or directory for several inputs)")
      ->required();
  cmd->add_option("--format", opt->format,
                  "output format; default follows the extension (htk|csv)")
      ->check(CLI::IsMember({"htk", "csv"}));
  cmd->add_option("--jobs", opt->jobs,
                  "parallel files to process (default: cores)");
  cmd->add_option("--energy-floor", opt->energy_floor,
                  "mel filterbank energy floor");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabor filterbank speech features and phoneme-similarity "
               "analysis"};
  app.require_subcommand(1);
  app.set_config("--config");

  cli::MelspecOptions melspec_opt;
  CLI::App* melspec =
      app.add_subcommand("melspec", "31-channel log-Mel spectrogram");
  add_output_options(melspec, &melspec_opt);

  cli::GbfbOptions gbfb_opt;
  CLI::App* gbfb =
      app.add_subcommand("gbfb", "Gabor filterbank features");
  add_output_options(gbfb, &gbfb_opt);
  gbfb->add_option("--subgroup", gbfb_opt.subgroup,
                   "filter subgroup: full|ltm|mtm|htm|dc")
      ->check(CLI::IsMember({"full", "ltm", "mtm", "htm", "dc"}));
  gbfb->add_option("--conv", gbfb_opt.conv, "convolution path: direct|fft")
      ->check(CLI::IsMember({"direct", "fft"}));

  cli::CombineOptions combine_opt;
  CLI::App* combine = app.add_subcommand(
      "combine", "concatenated feature sets, e.g. --parts ltm,htm or "
                 "--parts zeros:202,htm");
  add_output_options(combine, &combine_opt);
  combine->add_option("--parts", combine_opt.parts, "comma-separated parts")
      ->required();
  combine->add_option("--seed", combine_opt.seed,
                      "seed for random:<d> parts");
  combine->add_option("--conv", combine_opt.conv,
                      "convolution path: direct|fft")
      ->check(CLI::IsMember({"direct", "fft"}));

  cli::SimilarityOptions sim_opt;
  CLI::App* sim = app.add_subcommand(
      "similarity", "phoneme-class cosine similarity matrix");
  sim->add_option("--features", sim_opt.features, "feature matrix (htk|csv)")
      ->required()
      ->check(CLI::ExistingFile);
  sim->add_option("--labels", sim_opt.labels, "frame label file")
      ->required()
      ->check(CLI::ExistingFile);
  sim->add_option("--phones", sim_opt.phones, "phoneme list file")
      ->required()
      ->check(CLI::ExistingFile);
  sim->add_option("--threshold-deg", sim_opt.threshold_deg,
                  "mask similarities below cos(angle)");
  sim->add_option("--out", sim_opt.out, "similarity matrix CSV")->required();
  sim->add_option("--order-out", sim_opt.order_out,
                  "write the reordering, one '<index> <phoneme>' per line");

  cli::FilterDumpOptions dump_opt;
  CLI::App* dump = app.add_subcommand(
      "filter-dump", "write every kernel and its parameters as CSV");
  dump->add_option("--subgroup", dump_opt.subgroup,
                   "filter subgroup: full|ltm|mtm|htm|dc")
      ->check(CLI::IsMember({"full", "ltm", "mtm", "htm", "dc"}));
  dump->add_option("-o,--output", dump_opt.out_dir, "output directory")
      ->required();

  CLI::App* info = app.add_subcommand(
      "info", "filter counts, feature dimensions and config digest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (melspec->parsed()) return cli::run_melspec(melspec_opt);
    if (gbfb->parsed()) return cli::run_gbfb(gbfb_opt);
    if (combine->parsed()) return cli::run_combine(combine_opt);
    if (sim->parsed()) return cli::run_similarity(sim_opt);
    if (dump->parsed()) return cli::run_filter_dump(dump_opt);
    if (info->parsed()) return cli::run_info();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;  // configuration / usage problem
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;  // data problem
  }
  return 0;
}
