// Copyright 2026 The Lemotif Authors
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

#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <csignal>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <pthread.h>

#include "lemotif/compose.hpp"
#include "lemotif/config.hpp"
#include "lemotif/error.hpp"
#include "lemotif/eval.hpp"
#include "lemotif/iconproc.hpp"
#include "lemotif/image_io.hpp"
#include "lemotif/schema.hpp"
#include "lemotif/service.hpp"

namespace lemotif::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_code(Errc code) {
  switch (code) {
    case Errc::timeout:
    case Errc::remote_error:
    case Errc::malformed_response:
      return kRemoteFailure;
    case Errc::shape_missing:
      return kShapesMissing;
    case Errc::address_in_use:
      return kPortBusy;
    default:
      return kBadInput;
  }
}

std::string read_text(const fs::path& path) {
  const Bytes bytes = read_file(path);
  return {bytes.begin(), bytes.end()};
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, what + ": " + e.what(), what);
  }
}

// A labels document, an entry document, or raw text.
struct Input {
  std::optional<Entry> entry;
  std::optional<std::vector<LabelSet>> label_sets;
};

Input read_input(const std::string& file, const std::optional<std::string>& text) {
  if (text) return {entry_from_text(*text), std::nullopt};
  if (file.empty()) throw Error(Errc::invalid_argument, "an input file or --text is required", "input");
  const std::string content = read_text(file);
  const std::string_view body = trim(content);
  if (body.empty()) throw Error(Errc::empty_input, file + ": input is empty", "input");
  if (body.front() != '{' && body.front() != '[') return {entry_from_text(content, fs::path(file).stem()), {}};

  const json doc = parse_json(content, file);
  if (doc.is_array() || (doc.is_object() && doc.contains("label_sets"))) {
    const json& sets = doc.is_array() ? doc : doc["label_sets"];
    if (!sets.is_array() || sets.empty() || sets.size() > kMaxSubEntries) {
      throw Error(Errc::parse_error, "label_sets: expected an array of 1 to 3 label sets", "label_sets");
    }
    std::vector<LabelSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      out.push_back(label_set_from_json(sets[i], "label_sets[" + std::to_string(i) + "]"));
    }
    return {std::nullopt, std::move(out)};
  }
  return {entry_from_json(doc), std::nullopt};
}

json read_params(const std::string& spec) {
  if (spec.empty()) return json::object();
  const std::string text = spec.front() == '@' ? read_text(spec.substr(1)) : spec;
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(Errc::invalid_argument, "params: expected a JSON object", "params");
  }
  return doc;
}

std::uint64_t read_seed(const std::string& spec, std::uint64_t fallback, std::ostream& err) {
  if (spec.empty()) return fallback;
  if (spec == "random") {
    std::random_device rd;
    const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    err << "seed: " << seed << '\n';
    return seed;
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoull(spec, &used);
    if (used == spec.size() && spec.front() != '-') return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::invalid_argument, "seed: expected an unsigned integer or 'random'", "seed");
}

std::vector<double> read_thresholds(const std::string& spec) {
  std::vector<double> out;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::invalid_argument, "thresholds: bad number '" + s + "'", "thresholds");
  };
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) {
      throw Error(Errc::invalid_argument, "thresholds: expected lo:hi:step", "thresholds");
    }
    const double lo = number(parts[0]);
    const double hi = number(parts[1]);
    const double step = number(parts[2]);
    if (!(step > 0.0) || hi < lo) {
      throw Error(Errc::invalid_argument, "thresholds: expected lo <= hi and step > 0", "thresholds");
    }
    const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long long i = 0; i < n; ++i) out.push_back(std::round((lo + i * step) * 1e9) / 1e9);
  } else {
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
  }
  for (double t : out) {
    if (!(t > 0.0 && t < 1.0)) {
      throw Error(Errc::invalid_argument, "thresholds: values must lie in (0, 1)", "thresholds");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Common {
  std::string config;
};

Config load(const Common& c) {
  return resolve_config(c.config.empty() ? std::nullopt : std::optional<fs::path>(c.config));
}

struct AnalyzeArgs {
  std::string input;
  std::optional<std::string> text;
  std::optional<double> threshold;
  bool probs = false;
};

int cmd_analyze(const Common& common, const AnalyzeArgs& a, std::ostream& out) {
  const Config config = load(common);
  const Input input = read_input(a.input, a.text);
  if (!input.entry) throw Error(Errc::invalid_argument, "analyze needs text or an entry", "input");
  const double threshold = a.threshold.value_or(config.threshold);
  const Resources res = load_resources(config, false);
  const auto results = analyze_entry(*input.entry, *res.classifier, threshold);
  json sets = json::array();
  json probs = json::array();
  for (const auto& r : results) {
    sets.push_back(to_json(r.labels));
    probs.push_back(to_json(r.probs));
  }
  json doc = {{"id", input.entry->id},
              {"backend", res.classifier->backend()},
              {"threshold", threshold},
              {"label_sets", sets}};
  if (a.probs) doc["probs"] = probs;
  out << doc.dump(2) << '\n';
  return kOk;
}

struct MotifArgs {
  std::string input;
  std::optional<std::string> text;
  std::string style;
  std::string seed;
  std::string params;
  std::string out;
  std::string sidecar;
  std::optional<double> threshold;
  bool no_captions = false;
};

int cmd_motif(const Common& common, const MotifArgs& a, std::ostream& out, std::ostream& err) {
  const Config config = load(common);
  EntryOptions options;
  options.style = config.style;
  options.params = config.params;
  if (!a.style.empty()) {
    const auto s = parse_style(a.style);
    if (!s) throw Error(Errc::unsupported_style, "style: '" + a.style + "' is not supported", "style");
    if (*s != config.style) options.params = json::object();
    options.style = *s;
  }
  options.params.update(read_params(a.params));
  resolve_params(options.style, options.params);
  options.seed = read_seed(a.seed, config.seed, err);
  options.captions = !a.no_captions;

  const Input input = read_input(a.input, a.text);
  const Resources res = load_resources(config, true);
  const std::vector<LabelSet> label_sets =
      input.label_sets ? *input.label_sets
                       : classify_entry(*input.entry, *res.classifier, a.threshold.value_or(config.threshold));

  const EntryRender render = render_entry(label_sets, options, res.shapes, res.palette);
  const fs::path png_path = a.out.empty() ? config.output_dir / "motif.png" : fs::path(a.out);
  fs::path sidecar_path = a.sidecar.empty() ? fs::path(png_path).replace_extension(".json") : fs::path(a.sidecar);
  if (png_path.has_parent_path()) fs::create_directories(png_path.parent_path());
  write_file(png_path, encode_png(render.image));
  write_file(sidecar_path, sidecar_json(render, label_sets, options).dump(2) + "\n");
  out << png_path.string() << '\n';
  return kOk;
}

struct IconsArgs {
  std::string input;
  std::string out;
  int size = kDefaultCanvasSize;
  int dilate = kDefaultDilationRadius;
};

int cmd_icons(const IconsArgs& a, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(a.input)) {
    throw Error(Errc::io_error, "icon directory " + a.input + " does not exist", "input");
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(a.input)) {
    if (e.is_regular_file() && e.path().extension() == ".png") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    if (!parse_topic(f.stem().string())) {
      throw Error(Errc::invalid_argument, f.filename().string() + ": unknown topic '" + f.stem().string() + "'",
                  f.filename().string());
    }
  }
  ShapeLibrary lib;
  int failures = 0;
  for (const auto& f : files) {
    const Topic topic = *parse_topic(f.stem().string());
    try {
      const GrayImage gray = decode_png_gray(read_file(f));
      lib.put(build_shape(topic, gray, a.size, a.dilate));
    } catch (const Error& e) {
      ++failures;
      err << "error[" << to_string(e.code()) << "]: " << name(topic) << ": " << e.what() << '\n';
    }
  }
  lib.save(a.out);
  out << "wrote " << lib.size() << " shapes to " << a.out << '\n';
  return failures == 0 ? kOk : kBadInput;
}

struct EvalArgs {
  std::string dataset;
  std::string thresholds = "0.2";
  int splits = 5;
  double split_frac = 0.2;
  std::string seed;
  bool macro = false;
  std::string csv;
  std::string preferences;
};

json tally_json(const TallyResult& t) {
  return {{"name", t.name},   {"wins", t.wins},       {"total", t.total},
          {"rate", t.rate},   {"ci95", {t.ci_low, t.ci_high}},
          {"t", std::isfinite(t.t_statistic) ? json(t.t_statistic) : json(nullptr)},
          {"p_value", std::isnan(t.p_value) ? json(nullptr) : json(t.p_value)}};
}

int cmd_preferences(const EvalArgs& a, std::ostream& out) {
  const json doc = parse_json(read_text(a.preferences), a.preferences);
  if (!doc.is_object() || !doc.contains("matrices") || !doc["matrices"].is_array()) {
    throw Error(Errc::parse_error, "matrices: expected an array", "matrices");
  }
  std::vector<PreferenceMatrix> matrices;
  json checks = json::array();
  for (const auto& m : doc["matrices"]) {
    matrices.push_back(PreferenceMatrix::from_json(m));
    const auto r = consistency_check(matrices.back());
    checks.push_back({{"consistent", r.consistent}, {"violations", r.violations}});
  }
  json factors = json::array();
  for (const auto& f : doc.value("factors", json::array())) {
    Factor factor;
    factor.name = f.at("name").get<std::string>();
    for (const auto& p : f.at("pairs")) factor.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    factors.push_back(tally_json(preference_tally(matrices, factor)));
  }
  out << json{{"consistency", checks}, {"factors", factors}}.dump(2) << '\n';
  return kOk;
}

int cmd_eval(const Common& common, const EvalArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.preferences.empty()) return cmd_preferences(a, out);
  if (a.dataset.empty()) throw Error(Errc::invalid_argument, "a dataset file is required", "dataset");
  const Config config = load(common);
  const auto entries = dataset_from_json(parse_json(read_text(a.dataset), a.dataset));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries[i].sub_entries.size(); ++j) {
      if (!entries[i].sub_entries[j].has_labels()) {
        const std::string field =
            "entries[" + std::to_string(i) + "].sub_entries[" + std::to_string(j) + "]";
        throw Error(Errc::parse_error, field + ": missing ground-truth labels", field);
      }
    }
  }
  const auto samples = labeled_samples(entries);
  CvOptions options;
  options.k_splits = a.splits;
  options.split_frac = a.split_frac;
  options.thresholds = read_thresholds(a.thresholds);
  options.seed = read_seed(a.seed, config.seed, err);
  options.averaging = a.macro ? Averaging::macro : Averaging::micro;
  const Resources res = load_resources(config, false);
  const auto metrics = cross_validate(samples, *res.classifier, options);
  if (!a.csv.empty()) write_file(a.csv, metrics_csv(metrics));
  out << metrics_json(metrics).dump(2) << '\n';
  return kOk;
}

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

int cmd_serve(const Common& common, const ServeArgs& a, std::ostream& out) {
  Config config = load(common);
  if (!a.static_dir.empty()) {
    if (!fs::is_directory(a.static_dir)) {
      throw Error(Errc::invalid_argument, "static: not a directory: " + a.static_dir, "static");
    }
    config.static_dir = a.static_dir;
  }
  Resources res = load_resources(config, true);
  const Api api(std::move(config), std::move(res));

  HttpServer server(api);
  const int port = server.bind(a.host, a.port);

  // Route SIGINT/SIGTERM to a watcher thread so shutdown drains cleanly.
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  out << "listening on http://" << a.host << ':' << port << std::endl;

  std::atomic<bool> done{false};
  std::thread watcher([&] {
    const timespec tick{0, 200'000'000};
    while (!done.load()) {
      if (sigtimedwait(&set, nullptr, &tick) > 0) {
        server.stop();
        return;
      }
    }
  });
  server.serve();
  done = true;
  watcher.join();
  pthread_sigmask(SIG_UNBLOCK, &set, nullptr);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Journal text to topic/emotion motifs", "lemotif"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--config", common.config, "Config JSON (falls back to $LEMOTIF_CONFIG)");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Extract per-sub-entry labels as JSON");
  analyze_cmd->add_option("input", analyze.input, "Entry JSON or raw text file");
  analyze_cmd->add_option("--text", analyze.text, "Raw text instead of a file");
  analyze_cmd->add_option("--threshold", analyze.threshold, "Probability threshold in (0, 1)");
  analyze_cmd->add_flag("--probs", analyze.probs, "Include raw label probabilities");

  MotifArgs motif;
  auto* motif_cmd = app.add_subcommand("motif", "Render an entry as a PNG plus sidecar JSON");
  motif_cmd->add_option("input", motif.input, "Labels JSON, entry JSON, or raw text file");
  motif_cmd->add_option("--text", motif.text, "Raw text instead of a file");
  motif_cmd->add_option("--style", motif.style, "Style id (see GET /api/v1/styles)");
  motif_cmd->add_option("--seed", motif.seed, "Unsigned seed, or 'random'");
  motif_cmd->add_option("--params", motif.params, "Style params as JSON, or @file");
  motif_cmd->add_option("--out", motif.out, "Output PNG path");
  motif_cmd->add_option("--sidecar", motif.sidecar, "Sidecar JSON path (default: <out>.json)");
  motif_cmd->add_option("--threshold", motif.threshold, "Probability threshold for text input");
  motif_cmd->add_flag("--no-captions", motif.no_captions, "Omit caption strips");

  IconsArgs icons;
  auto* icons_cmd = app.add_subcommand("icons", "Preprocess <topic>.png icons into shape masks");
  icons_cmd->add_option("input", icons.input, "Directory of <topic>.png icons")->required();
  icons_cmd->add_option("--out", icons.out, "Output shapes directory")->required();
  icons_cmd->add_option("--size", icons.size, "Canvas size in pixels")->check(CLI::Range(16, 4096));
  icons_cmd->add_option("--dilate", icons.dilate, "Outline dilation radius")->check(CLI::Range(1, 64));

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Cross-validated metrics or preference consistency");
  eval_cmd->add_option("dataset", eval.dataset, "Labelled dataset JSON");
  eval_cmd->add_option("--thresholds", eval.thresholds, "Comma list or lo:hi:step");
  eval_cmd->add_option("--splits", eval.splits, "Number of splits")->check(CLI::Range(1, 1000));
  eval_cmd->add_option("--split-frac", eval.split_frac, "Held-out fraction per split");
  eval_cmd->add_option("--seed", eval.seed, "Unsigned seed, or 'random'");
  eval_cmd->add_flag("--macro", eval.macro, "Macro-average over labels");
  eval_cmd->add_option("--csv", eval.csv, "Also write metrics CSV here");
  eval_cmd->add_option("--preferences", eval.preferences, "Preference matrices JSON (consistency mode)");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_option("--port", serve.port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--static", serve.static_dir, "Directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error[usage]: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(common, analyze, out);
    if (*motif_cmd) return cmd_motif(common, motif, out, err);
    if (*icons_cmd) return cmd_icons(icons, out, err);
    if (*eval_cmd) return cmd_eval(common, eval, out, err);
    if (*serve_cmd) return cmd_serve(common, serve, out);
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return kInternal;
  }
  return kBadInput;
}

}  // namespace lemotif::cli
