// tools/commands.cpp

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

#include "commands.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gaborfeat/audio.hpp"
#include "gaborfeat/csv_io.hpp"
#include "gaborfeat/extract.hpp"
#include "gaborfeat/gabor.hpp"
#include "gaborfeat/htk_io.hpp"
#include "gaborfeat/labels.hpp"
#include "gaborfeat/mel.hpp"
#include "gaborfeat/similarity.hpp"

namespace fs = std::filesystem;

namespace gaborfeat::cli {

namespace {

std::string resolve_format(const std::string& requested,
                           const std::string& out_path) {
  if (!requested.empty()) {
    if (requested != "htk" && requested != "csv")
      throw std::invalid_argument("unknown format '" + requested +
                                  "' (valid: htk, csv)");
    return requested;
  }
  const std::string ext = fs::path(out_path).extension().string();
  if (ext == ".csv") return "csv";
  return "htk";
}

// Writes through a temp file in the target directory and renames, so an
// interrupted run never leaves a truncated output.
void write_features_atomic(const FeatureMatrix& m, const std::string& path,
                           const std::string& format) {
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  if (format == "csv")
    write_csv_matrix(m.values, {}, m.dim_provenance, tmp.string());
  else
    write_htk(m, tmp.string());
  fs::rename(tmp, target);
}

std::vector<std::string> resolve_outputs(const OutputOptions& opt,
                                         const std::string& default_ext) {
  if (opt.inputs.empty()) throw std::invalid_argument("no input files given");
  if (opt.output.empty()) throw std::invalid_argument("no output path given");
  std::vector<std::string> outs;
  const fs::path out(opt.output);
  const bool multi = opt.inputs.size() > 1;
  if (multi || fs::is_directory(out)) {
    fs::create_directories(out);
    for (const auto& in : opt.inputs) {
      fs::path name = fs::path(in).stem();
      name += default_ext;
      outs.push_back((out / name).string());
    }
  } else {
    outs.push_back(opt.output);
  }
  return outs;
}

// Runs job(i) for every input index on `jobs` threads. Outputs are
// per-file, so execution order cannot change results. The first failure
// wins and is rethrown after all threads finish.
void for_each_input(size_t count, unsigned jobs,
                    const std::function<void(size_t)>& job) {
  unsigned n_threads = jobs ? jobs : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<size_t>(n_threads, count);
  if (n_threads <= 1) {
    for (size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

MelConfig mel_config(const OutputOptions& opt) {
  MelConfig cfg;
  cfg.energy_floor = opt.energy_floor;
  cfg.validate();
  return cfg;
}

ConvMethod parse_conv(const std::string& name) {
  if (name == "direct") return ConvMethod::Direct;
  if (name == "fft") return ConvMethod::Fft;
  throw std::invalid_argument("unknown convolution method '" + name +
                              "' (valid: direct, fft)");
}

uint64_t fnv1a64(const std::string& text) {
  uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string config_digest(const MelConfig& mel, const GfbConfig& gfb) {
  std::ostringstream ss;
  ss.precision(17);
  ss << mel.sample_rate_hz << '|' << mel.n_channels << '|'
     << mel.frame_length_s << '|' << mel.frame_shift_s << '|'
     << mel.preemphasis << '|' << mel.fft_size << '|' << mel.f_low_hz << '|'
     << mel.f_high_hz << '|' << mel.energy_floor << '|' << gfb.oscillations
     << '|' << gfb.max_time_frames << '|' << gfb.max_freq_channels << '|'
     << gfb.center_channel;
  for (double f : gfb.temporal_mods_hz) ss << '|' << f;
  for (double f : gfb.spectral_mods_cpc) ss << '|' << f;
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(ss.str())));
  return buf;
}

}  // namespace

int run_melspec(const MelspecOptions& opt) {
  const MelConfig cfg = mel_config(opt);
  const auto outs = resolve_outputs(
      opt, opt.format == "csv" ? ".csv" : ".htk");
  for_each_input(opt.inputs.size(), opt.jobs, [&](size_t i) {
    const AudioSignal sig = read_wav(opt.inputs[i]);
    const LogMelSpectrogram spec = log_mel_spectrogram(sig, cfg);
    FeatureMatrix m;
    m.values = spec.values;
    m.frame_shift_s = spec.frame_shift_s;
    for (int ch = 0; ch < spec.values.cols(); ++ch)
      m.dim_provenance.push_back("mel" + std::to_string(ch));
    write_features_atomic(m, outs[i], resolve_format(opt.format, outs[i]));
  });
  return 0;
}

int run_gbfb(const GbfbOptions& opt) {
  const MelConfig mel = mel_config(opt);
  const Subgroup subgroup = parse_subgroup(opt.subgroup);
  const ConvMethod method = parse_conv(opt.conv);
  const auto outs = resolve_outputs(
      opt, opt.format == "csv" ? ".csv" : ".htk");
  const FilterbankSpec bank =
      build_filterbank(GfbConfig::defaults(mel), subgroup);
  for_each_input(opt.inputs.size(), opt.jobs, [&](size_t i) {
    const AudioSignal sig = read_wav(opt.inputs[i]);
    const LogMelSpectrogram spec = log_mel_spectrogram(sig, mel);
    const FeatureMatrix m = extract_features(spec, bank, method);
    write_features_atomic(m, outs[i], resolve_format(opt.format, outs[i]));
  });
  return 0;
}

int run_combine(const CombineOptions& opt) {
  const MelConfig mel = mel_config(opt);
  const ConvMethod method = parse_conv(opt.conv);
  const CombinationSpec spec = parse_combination(opt.parts, opt.seed);
  const auto outs = resolve_outputs(
      opt, opt.format == "csv" ? ".csv" : ".htk");

  std::vector<Subgroup> needed;
  for (const auto& part : spec.parts)
    if (part.kind == CombinationPart::Kind::FeatureSet)
      needed.push_back(part.subgroup);

  std::map<Subgroup, FilterbankSpec> banks;
  for (Subgroup g : needed)
    if (!banks.count(g))
      banks.emplace(g, build_filterbank(GfbConfig::defaults(mel), g));

  for_each_input(opt.inputs.size(), opt.jobs, [&](size_t i) {
    const AudioSignal sig = read_wav(opt.inputs[i]);
    const LogMelSpectrogram melspec = log_mel_spectrogram(sig, mel);
    std::map<Subgroup, FeatureMatrix> inputs;
    for (const auto& [g, bank] : banks)
      inputs.emplace(g, extract_features(melspec, bank, method));
    FeatureMatrix m =
        combine_features(melspec.values.rows(), spec, inputs);
    m.frame_shift_s = melspec.frame_shift_s;
    write_features_atomic(m, outs[i], resolve_format(opt.format, outs[i]));
  });
  return 0;
}

int run_similarity(const SimilarityOptions& opt) {
  if (opt.features.empty() || opt.labels.empty() || opt.phones.empty() ||
      opt.out.empty())
    throw std::invalid_argument(
        "similarity needs --features, --labels, --phones and --out");

  FeatureMatrix feats;
  if (fs::path(opt.features).extension() == ".csv") {
    const CsvMatrix csv = read_csv_matrix(opt.features);
    feats.values = csv.values;
    feats.dim_provenance = csv.col_names.empty()
                               ? default_provenance(csv.values.cols())
                               : csv.col_names;
  } else {
    feats = read_htk(opt.features);
  }
  const LabelTrack labels = read_labels(opt.labels);
  const auto phones = read_phoneme_list(opt.phones);
  if (phones.empty())
    throw std::runtime_error(opt.phones + ": empty phoneme list");

  const FeatureMatrix normalized = normalize_features(feats);
  const CentroidSet centroids = class_centroids(normalized, labels, phones);
  for (const auto& name : centroids.dropped)
    std::cerr << "note: phoneme " << name
              << " has no labeled frames; dropped\n";

  const SimilarityMatrix sim = similarity_matrix(centroids);
  const SimilarityMatrix masked = threshold_matrix(sim, opt.threshold_deg);
  const std::vector<int> order = rcm_order(masked, opt.threshold_deg);
  const SimilarityMatrix ordered = apply_ordering(masked, order);

  {
    fs::path tmp(opt.out);
    tmp += ".tmp";
    write_csv_matrix(ordered.values, ordered.phonemes, ordered.phonemes,
                     tmp.string());
    fs::rename(tmp, opt.out);
  }
  if (!opt.order_out.empty()) {
    fs::path tmp(opt.order_out);
    tmp += ".tmp";
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error(opt.order_out + ": cannot open for writing");
    for (int orig : ordered.ordering)
      out << orig << ' ' << sim.phonemes[orig] << '\n';
    out.close();
    fs::rename(tmp, opt.order_out);
  }
  return 0;
}

int run_filter_dump(const FilterDumpOptions& opt) {
  if (opt.out_dir.empty()) throw std::invalid_argument("no output directory");
  const Subgroup subgroup = parse_subgroup(opt.subgroup);
  const FilterbankSpec bank =
      build_filterbank(GfbConfig::defaults(), subgroup);
  fs::create_directories(opt.out_dir);

  std::ostringstream manifest;
  manifest << "id,f_n_hz,f_k_cpc,orientation,w_n,w_k,n_channels,channels\n";
  manifest.precision(17);
  for (size_t i = 0; i < bank.filters.size(); ++i) {
    const FilterParams& p = bank.filters[i].params;
    manifest << i << ',' << p.f_n_hz << ',' << p.f_k_cpc << ','
             << p.orientation << ',' << p.w_n << ',' << p.w_k << ','
             << bank.sampling[i].size() << ',';
    for (size_t j = 0; j < bank.sampling[i].size(); ++j) {
      if (j) manifest << ' ';
      manifest << bank.sampling[i][j];
    }
    manifest << '\n';

    char name[32];
    std::snprintf(name, sizeof(name), "kernel_%03zu.csv", i);
    write_csv_matrix(bank.filters[i].kernel, {}, {},
                     (fs::path(opt.out_dir) / name).string());
  }
  std::ofstream out(fs::path(opt.out_dir) / "filters.csv",
                    std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error(opt.out_dir + "/filters.csv: cannot write");
  out << manifest.str();
  return 0;
}

int run_info() {
  const MelConfig mel;
  const GfbConfig gfb = GfbConfig::defaults(mel);
  const auto grid = modulation_grid(gfb);

  auto dims_of = [&](Subgroup g) {
    int d = 0;
    for (const auto& p : select_subgroup(grid, g))
      d += static_cast<int>(critical_channels(p, gfb).size());
    return d;
  };

  std::cout << "filters: " << grid.size() << " (full), "
            << select_subgroup(grid, Subgroup::Ltm).size() << " per subgroup, "
            << select_subgroup(grid, Subgroup::Dc).size() << " dc\n";
  std::cout << "dims: full=" << dims_of(Subgroup::Full)
            << " ltm=" << dims_of(Subgroup::Ltm)
            << " mtm=" << dims_of(Subgroup::Mtm)
            << " htm=" << dims_of(Subgroup::Htm)
            << " dc=" << dims_of(Subgroup::Dc) << '\n';
  std::cout << "mel: " << mel.n_channels << " channels, " << mel.f_low_hz
            << "-" << mel.f_high_hz << " Hz, frame "
            << mel.frame_length_s * 1e3 << " ms / shift "
            << mel.frame_shift_s * 1e3 << " ms\n";
  std::cout << "temporal modulations (Hz):";
  for (double f : gfb.temporal_mods_hz) std::cout << ' ' << f;
  std::cout << "\nspectral modulations (cyc/channel):";
  for (double f : gfb.spectral_mods_cpc) std::cout << ' ' << f;
  std::cout << "\nconfig digest: " << config_digest(mel, gfb) << '\n';
  return 0;
}

}  // namespace gaborfeat::cli
