// Copyright 2026 The procnoise Authors
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

#include "procnoise/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "procnoise/classifier/embedded_classifier.hpp"
#include "procnoise/classifier/protocol.hpp"
#include "procnoise/classifier/subprocess_classifier.hpp"
#include "procnoise/data/dataset.hpp"
#include "procnoise/data/png_io.hpp"
#include "procnoise/defense/defense_eval.hpp"
#include "procnoise/error.hpp"
#include "procnoise/eval/report_io.hpp"
#include "procnoise/noise/generate.hpp"

namespace procnoise::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Raw flag storage. Whether a flag was given is asked of the parser, so
// defaults here never leak into the merged configuration.
struct Flags {
  std::string config;
  std::uint64_t seed = 0;
  std::vector<std::string> noise;
  std::vector<double> eps;
  std::string channel_mode;
  int dim = 0;
  double step = 0;
  std::vector<double> slice;
  double r_squared = 0;
  int gradients = 0;
  std::vector<int> points;
  int octaves = 0;
  double period = 0;
  double sine_freq = 0;
  double noise_mean = 0;
  double noise_std = 0;
  double prob = 0;

  std::string dataset;
  std::string data;
  std::string manifest;
  std::size_t limit = 0;
  int dataset_classes = 0;

  std::string classifier_cmd;
  std::string model_file;
  int class_count = 0;
  std::string input_size;
  bool resize = false;
  std::vector<double> input_mean;
  std::vector<double> input_std;
  std::int64_t handshake_timeout = 0;
  std::int64_t batch_timeout = 0;

  std::string filter;
  int radius = 0;
  double sigma = 0;
  int window = 0;
  int diameter = 0;
  double sigma_color = 0;
  double sigma_space = 0;

  std::string out;
  int jobs = 0;
  std::size_t batch_size = 0;
  bool per_image_seed = false;
  int height = 0;
  int width = 0;
  std::string input;
};

void add_backend_flags(CLI::App& app, Flags& f) {
  app.add_option("--model-file", f.model_file, "ONNX model run in-process");
  app.add_option("--class-count", f.class_count, "Model output classes");
  app.add_option("--input-size", f.input_size, "Model input size HxW, e.g. 32x32");
  app.add_flag("--resize", f.resize, "Bilinear-resize images to the input size");
  app.add_option("--input-mean", f.input_mean, "Per-channel mean on the [0,1] scale")
      ->expected(3);
  app.add_option("--input-std", f.input_std, "Per-channel std on the [0,1] scale")
      ->expected(3);
}

void add_run_flags(CLI::App& app, Flags& f) {
  app.add_option("--config", f.config, "JSON run configuration; flags override it");
  app.add_option("--seed", f.seed, "Noise seed (default: $PROCNOISE_SEED or 0)");
  app.add_option("--noise", f.noise, "simplex|worley|perlin|gaussian|sp (repeatable)")
      ->check(CLI::IsMember({"simplex", "worley", "perlin", "gaussian", "sp"}));
  app.add_option("--eps", f.eps, "l-inf budget on the [0,1] scale (repeatable)");
  app.add_option("--channel-mode", f.channel_mode, "replicate|worley_rgba")
      ->check(CLI::IsMember({"replicate", "worley_rgba"}));
  app.add_option("--dim", f.dim, "Simplex dimension (2-4)");
  app.add_option("--step", f.step, "Simplex pixel stride");
  app.add_option("--slice", f.slice, "Simplex extra coordinates (z w)")->expected(2);
  app.add_option("--r-squared", f.r_squared, "Simplex kernel radius squared");
  app.add_option("--gradients", f.gradients, "Simplex 2D gradient count (8|16)");
  app.add_option("--points", f.points, "Worley feature points (repeatable)");
  app.add_option("--octaves", f.octaves, "Perlin octaves");
  app.add_option("--period", f.period, "Perlin base period in pixels");
  app.add_option("--sine-freq", f.sine_freq, "Perlin sine map frequency");
  app.add_option("--noise-mean", f.noise_mean, "Gaussian noise mean (8-bit units)");
  app.add_option("--noise-std", f.noise_std, "Gaussian noise std (8-bit units)");
  app.add_option("--prob", f.prob, "Salt-and-pepper probability");

  app.add_option("--dataset", f.dataset, "cifar10|dir")
      ->check(CLI::IsMember({"cifar10", "dir"}));
  app.add_option("--data", f.data, "CIFAR-10 batch file or image directory");
  app.add_option("--manifest", f.manifest, "TSV manifest for --dataset dir");
  app.add_option("--limit", f.limit, "Use the first N images");
  app.add_option("--dataset-classes", f.dataset_classes, "Class count of a dir dataset");

  app.add_option("--classifier-cmd", f.classifier_cmd, "JSONL classifier command line");
  add_backend_flags(app, f);
  app.add_option("--handshake-timeout", f.handshake_timeout, "Milliseconds");
  app.add_option("--batch-timeout", f.batch_timeout, "Milliseconds");

  app.add_option("--filter", f.filter, "none|gaussian|median|bilateral")
      ->check(CLI::IsMember({"none", "gaussian", "median", "bilateral"}));
  app.add_option("--radius", f.radius, "Gaussian filter radius");
  app.add_option("--sigma", f.sigma, "Gaussian filter sigma");
  app.add_option("--window", f.window, "Median filter window (odd)");
  app.add_option("--diameter", f.diameter, "Bilateral filter diameter");
  app.add_option("--sigma-color", f.sigma_color, "Bilateral range sigma ([0,1] scale)");
  app.add_option("--sigma-space", f.sigma_space, "Bilateral spatial sigma (pixels)");

  app.add_option("--out", f.out, "Output directory");
  app.add_option("--jobs", f.jobs, "Worker threads / classifier processes");
  app.add_option("--batch-size", f.batch_size, "Images per classifier call");
  app.add_flag("--per-image-seed", f.per_image_seed, "Reseed noise per image");
  app.add_option("--height", f.height, "generate: field height");
  app.add_option("--width", f.width, "generate: field width");
  app.add_option("--input", f.input, "generate: PNG to perturb");
}

std::pair<int, int> parse_size(const std::string& text) {
  int h = 0, w = 0;
  char x = 0, extra = 0;
  std::istringstream s(text);
  if (!(s >> h >> x >> w) || (x != 'x' && x != 'X') || (s >> extra) || h < 1 ||
      w < 1) {
    throw UsageError("--input-size must look like 32x32, got '" + text + "'");
  }
  return {h, w};
}

std::uint64_t env_seed() {
  const char* v = std::getenv("PROCNOISE_SEED");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long s = std::strtoull(v, &end, 10);
  if (errno != 0 || *end != '\0' || *v == '-') {
    throw UsageError(std::string("PROCNOISE_SEED is not an unsigned integer: ") + v);
  }
  return s;
}

json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file " + path + " is not valid JSON: " + e.what());
  }
}

class Merger {
 public:
  Merger(const CLI::App& app, const Flags& f) : app_(app), f_(f) {}

  json merge(json j) const {
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    j["command"] = app_.get_name();
    if (given("--seed")) {
      j["seed"] = f_.seed;
    } else if (!j.contains("seed") || j["seed"].is_null()) {
      j["seed"] = env_seed();
    }
    merge_noise(j);
    if (given("--eps")) j["epsilons"] = f_.eps;
    if (given("--channel-mode")) j["channel_mode"] = f_.channel_mode;

    json& d = object_at(j, "dataset");
    if (given("--dataset")) d["kind"] = f_.dataset;
    if (given("--data")) d["path"] = f_.data;
    if (given("--manifest")) d["manifest"] = f_.manifest;
    if (given("--limit")) d["limit"] = f_.limit;
    if (given("--dataset-classes")) d["class_count"] = f_.dataset_classes;

    json& b = object_at(j, "classifier");
    if (given("--classifier-cmd")) {
      b["command"] = f_.classifier_cmd;
      if (!given("--model-file")) b["model_file"] = "";
    }
    if (given("--model-file")) {
      b["model_file"] = f_.model_file;
      if (!given("--classifier-cmd")) b["command"] = "";
    }
    if (given("--class-count")) b["class_count"] = f_.class_count;
    if (given("--input-size")) {
      const auto [h, w] = parse_size(f_.input_size);
      b["input_height"] = h;
      b["input_width"] = w;
    }
    if (given("--resize")) b["resize"] = f_.resize;
    if (given("--input-mean")) b["mean"] = f_.input_mean;
    if (given("--input-std")) b["std"] = f_.input_std;
    if (given("--handshake-timeout")) b["handshake_timeout_ms"] = f_.handshake_timeout;
    if (given("--batch-timeout")) b["batch_timeout_ms"] = f_.batch_timeout;

    merge_filter(j);

    if (given("--out")) j["out"] = f_.out;
    if (given("--jobs")) j["jobs"] = f_.jobs;
    if (given("--batch-size")) j["batch_size"] = f_.batch_size;
    if (given("--per-image-seed")) j["per_image_seed"] = f_.per_image_seed;
    json& g = object_at(j, "generate");
    if (given("--height")) g["height"] = f_.height;
    if (given("--width")) g["width"] = f_.width;
    if (given("--input")) g["input"] = f_.input;
    return j;
  }

 private:
  bool given(const std::string& name) const { return app_.count(name) > 0; }

  static json& object_at(json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) j[key] = json::object();
    if (!j[key].is_object()) {
      throw UsageError(std::string("'") + key + "' must be an object");
    }
    return j[key];
  }

  // Kind-specific flags applied to one noise entry; Worley entries fan out
  // over repeated --points.
  void apply_noise_flags(const json& base, json& list) const {
    json e = base;
    const auto kind = e.value("noise", std::string());
    if (kind == "simplex") {
      if (given("--dim")) e["dim"] = f_.dim;
      if (given("--step")) e["step"] = f_.step;
      if (given("--slice")) e["slice"] = f_.slice;
      if (given("--r-squared")) e["r_squared"] = f_.r_squared;
      if (given("--gradients")) e["gradients_2d"] = f_.gradients;
    } else if (kind == "worley" && given("--points")) {
      for (int p : f_.points) {
        e["points"] = p;
        list.push_back(e);
      }
      return;
    } else if (kind == "perlin") {
      if (given("--octaves")) e["octaves"] = f_.octaves;
      if (given("--period")) e["period"] = f_.period;
      if (given("--sine-freq")) e["sine_frequency"] = f_.sine_freq;
    } else if (kind == "gaussian") {
      if (given("--noise-mean")) e["mean"] = f_.noise_mean;
      if (given("--noise-std")) e["std"] = f_.noise_std;
    } else if (kind == "sp") {
      if (given("--prob")) e["prob"] = f_.prob;
    }
    list.push_back(std::move(e));
  }

  void merge_noise(json& j) const {
    json existing = json::array();
    if (j.contains("noise") && !j["noise"].is_null()) {
      existing = j["noise"].is_array() ? j["noise"] : json::array({j["noise"]});
    }
    json merged = json::array();
    if (given("--noise")) {
      for (const auto& kind : f_.noise) {
        json base{{"noise", kind}};
        for (const auto& e : existing) {
          if (e.is_object() && e.value("noise", std::string()) == kind) {
            base = e;
            break;
          }
        }
        apply_noise_flags(base, merged);
      }
    } else {
      for (const auto& e : existing) apply_noise_flags(e, merged);
    }
    if (!merged.empty()) j["noise"] = std::move(merged);
  }

  void merge_filter(json& j) const {
    json filter = j.contains("filter") ? j["filter"] : json(nullptr);
    if (given("--filter")) {
      const bool same_kind = filter.is_object() &&
                             filter.value("kind", std::string()) == f_.filter;
      if (!same_kind) filter = {{"kind", f_.filter}};
    }
    const bool any_param = given("--radius") || given("--sigma") ||
                           given("--window") || given("--diameter") ||
                           given("--sigma-color") || given("--sigma-space");
    if (!filter.is_object()) {
      if (any_param) throw UsageError("filter parameters need --filter");
      return;
    }
    const auto kind = filter.value("kind", std::string());
    if (kind == "gaussian") {
      if (given("--radius")) filter["radius"] = f_.radius;
      if (given("--sigma")) filter["sigma"] = f_.sigma;
    } else if (kind == "median") {
      if (given("--window")) filter["window"] = f_.window;
    } else if (kind == "bilateral") {
      if (given("--diameter")) filter["diameter"] = f_.diameter;
      if (given("--sigma-color")) filter["sigma_color"] = f_.sigma_color;
      if (given("--sigma-space")) filter["sigma_space"] = f_.sigma_space;
    }
    j["filter"] = std::move(filter);
  }

  const CLI::App& app_;
  const Flags& f_;
};

void write_file(const fs::path& path, std::string_view content) {
  eval::write_atomic(path, content);
}

void write_png(const fs::path& path, const ImageTensor& image) {
  const auto bytes = data::encode_png(image);
  write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                    bytes.size()));
}

// Grayscale rendering of a field; Worley fields become RGB with pure red
// feature pixels.
ImageTensor render_field(const noise::GeneratedNoise& gen) {
  const auto& f = gen.field;
  const double lo = f.range().lo, hi = f.range().hi;
  const int h = f.height(), w = f.width();
  const int channels = gen.features ? 3 : 1;
  std::vector<double> px(static_cast<std::size_t>(h) * w * channels);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double m = std::clamp((f.at(y, x) - lo) / (hi - lo), 0.0, 1.0);
      for (int c = 0; c < channels; ++c) {
        px[(static_cast<std::size_t>(y) * w + x) * channels + c] = m;
      }
    }
  }
  if (gen.features) {
    for (const auto& p : gen.features->points()) {
      const std::size_t i = (static_cast<std::size_t>(p.y) * w + p.x) * 3;
      px[i] = 1.0;
      px[i + 1] = 0.0;
      px[i + 2] = 0.0;
    }
  }
  return ImageTensor(h, w, channels, std::move(px));
}

ImageTensor render_perturbation(const Perturbation& p) {
  std::vector<double> px(p.delta().size(), 0.5);
  if (p.budget() > 0.0) {
    for (std::size_t i = 0; i < px.size(); ++i) {
      px[i] = std::clamp((p.delta()[i] / p.budget() + 1.0) / 2.0, 0.0, 1.0);
    }
  }
  return ImageTensor(p.height(), p.width(), p.channels(), std::move(px));
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  const auto spec = c.grid().front();
  const fs::path dir = c.out;
  fs::create_directories(dir);
  write_file(dir / "config.json", config_to_json(c).dump(2) + "\n");

  std::optional<ImageTensor> input;
  int h = c.generate.height, w = c.generate.width, channels = 3;
  if (!c.generate.input.empty()) {
    input = data::load_png(c.generate.input);
    h = input->height();
    w = input->width();
    channels = input->channels();
  }
  const auto gen = noise::generate(spec.params, h, w, spec.seed);
  const auto perturbation = field_to_perturbation(
      gen.field, gen.features ? &*gen.features : nullptr, spec, channels);

  json files = json::array({"field.png", "perturbation.png"});
  write_png(dir / "field.png", render_field(gen));
  write_png(dir / "perturbation.png", render_perturbation(perturbation));
  if (input) {
    write_png(dir / "adversarial.png", apply(*input, perturbation));
    files.push_back("adversarial.png");
  }
  json meta{{"fingerprint", spec.fingerprint()},
            {"spec", eval::spec_to_json(spec)},
            {"height", h},
            {"width", w},
            {"channels", channels},
            {"field_range", {gen.field.range().lo, gen.field.range().hi}},
            {"feature_points", gen.features ? json(gen.features->count()) : json(nullptr)},
            {"linf", linf_norm(perturbation)},
            {"input", input ? json(c.generate.input) : json(nullptr)},
            {"files", files}};
  write_file(dir / "metadata.json", meta.dump(2) + "\n");
  out << "wrote " << (dir / "field.png").string() << " (" << spec.fingerprint()
      << ")\n";
  return kExitOk;
}

data::LabeledDataset load_dataset(const DatasetSource& d) {
  if (d.kind == "cifar10") return data::load_cifar10_batch(d.path, d.limit);
  const fs::path manifest =
      d.manifest.empty() ? fs::path(d.path) / "manifest.tsv" : fs::path(d.manifest);
  auto ds = data::load_image_dir(d.path, manifest, d.class_count);
  if (d.limit && *d.limit < ds.size()) {
    std::vector<data::LabeledImage> items(ds.items().begin(),
                                          ds.items().begin() + *d.limit);
    return data::LabeledDataset(std::move(items), ds.class_count());
  }
  return ds;
}

std::vector<std::unique_ptr<classifier::Classifier>> open_handles(const RunConfig& c) {
  std::vector<std::unique_ptr<classifier::Classifier>> handles;
  const auto& b = c.classifier;
  if (!b.model_file.empty()) {
    classifier::EmbeddedConfig e;
    e.model_file = b.model_file;
    e.class_count = b.class_count;
    e.preprocessing.input_height = b.input_height;
    e.preprocessing.input_width = b.input_width;
    e.preprocessing.resize = b.resize;
    e.preprocessing.mean = b.mean;
    e.preprocessing.std = b.std;
    handles.push_back(classifier::open_embedded(e));
    return handles;
  }
  classifier::SubprocessConfig s;
  s.argv = classifier::split_command(b.command);
  s.handshake_timeout = std::chrono::milliseconds(b.handshake_timeout_ms);
  s.batch_timeout = std::chrono::milliseconds(b.batch_timeout_ms);
  for (int i = 0; i < c.jobs; ++i) handles.push_back(classifier::open_subprocess(s));
  return handles;
}

int cmd_eval(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const fs::path dir = c.out;
  fs::create_directories(dir);
  write_file(dir / "config.json", config_to_json(c).dump(2) + "\n");

  const auto dataset = load_dataset(c.dataset);
  const auto owned = open_handles(c);
  std::vector<classifier::Classifier*> handles;
  for (const auto& h : owned) handles.push_back(h.get());

  std::ofstream progress(dir / "progress.jsonl", std::ios::trunc);
  eval::EvalOptions options;
  options.batch_size = c.batch_size;
  options.jobs = c.jobs;
  options.per_image_seed = c.per_image_seed;
  options.on_record = [&progress](const eval::EvalRecord& r) {
    progress << eval::record_to_json(r).dump() << '\n' << std::flush;
  };

  const auto grid = c.grid();
  std::vector<eval::SweepEntry> entries;
  if (c.has_filter()) {
    for (const auto& spec : grid) {
      eval::SweepEntry entry{spec, std::nullopt, {}};
      try {
        entry.report =
            defense::run_defense_eval(dataset, spec, c.filter, handles, options);
      } catch (const std::exception& e) {
        entry.error = e.what();
      }
      entries.push_back(std::move(entry));
    }
  } else {
    entries = eval::sweep(dataset, grid, handles, options);
  }

  write_file(dir / "report.json", eval::sweep_to_json(entries).dump(2) + "\n");
  write_file(dir / "report.csv", eval::sweep_to_csv(entries));

  int status = kExitOk;
  for (const auto& e : entries) {
    if (e.report) {
      out << e.report->fingerprint << "  n=" << e.report->counts.total
          << "  evasion=" << e.report->evasion_rate
          << "  robust=" << e.report->robust_accuracy
          << "  clean=" << e.report->clean_accuracy << "\n";
    } else {
      err << "failed: " << e.spec.fingerprint() << ": " << e.error << "\n";
      status = kExitFailure;
    }
  }
  return status;
}

// Reads protocol requests from `in` and answers with the embedded model's
// scores until EOF.
int cmd_serve(const classifier::EmbeddedConfig& config, std::istream& in,
              std::ostream& out) {
  auto model = classifier::EmbeddedClassifier::open(config);
  out << classifier::encode_handshake(model->class_count()) << "\n" << std::flush;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto request = classifier::parse_request(line);
    const classifier::ImageRef ref{request.id, &request.image};
    const auto predictions = model->classify(std::span(&ref, 1));
    out << classifier::encode_response(predictions.front()) << "\n" << std::flush;
  }
  return kExitOk;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == "generate") return cmd_generate(config, out);
  return cmd_eval(config, out, err);
}

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Procedural-noise adversarial perturbations and evaluation",
               "procnoise"};
  app.require_subcommand(1);
  Flags flags;
  const std::map<std::string, std::string> commands{
      {"generate", "Write a noise field, its perturbation and an optional adversarial PNG"},
      {"attack-eval", "Evaluate perturbations against a classifier"},
      {"defense-eval", "Evaluate perturbations with a denoising filter in front"},
      {"sweep", "Evaluate a grid of noise kinds and budgets"}};
  for (const auto& [name, help] : commands) add_run_flags(*app.add_subcommand(name, help), flags);

  Flags serve_flags;
  auto* serve = app.add_subcommand("serve", "Serve an ONNX model over the JSONL protocol");
  add_backend_flags(*serve, serve_flags);
  serve->get_option("--model-file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (serve->parsed()) {
      classifier::EmbeddedConfig e;
      e.model_file = serve_flags.model_file;
      if (serve->count("--class-count")) e.class_count = serve_flags.class_count;
      if (serve->count("--input-size")) {
        std::tie(e.preprocessing.input_height, e.preprocessing.input_width) =
            parse_size(serve_flags.input_size);
      }
      e.preprocessing.resize = serve_flags.resize;
      if (serve->count("--input-mean")) {
        std::copy_n(serve_flags.input_mean.begin(), 3, e.preprocessing.mean.begin());
      }
      if (serve->count("--input-std")) {
        std::copy_n(serve_flags.input_std.begin(), 3, e.preprocessing.std.begin());
      }
      return cmd_serve(e, in, out);
    }
    const CLI::App* sub = app.get_subcommands().front();
    json base = flags.config.empty() ? json::object() : read_config_file(flags.config);
    const RunConfig config = config_from_json(Merger(*sub, flags).merge(std::move(base)));
    return execute(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace procnoise::cli
