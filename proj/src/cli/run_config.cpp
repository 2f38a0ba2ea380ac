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

#include "procnoise/cli/run_config.hpp"

#include "procnoise/error.hpp"
#include "procnoise/eval/report_io.hpp"

namespace procnoise::cli {
namespace {

using nlohmann::json;

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad value for '") + key + "': " + e.what());
  }
}

const json& section(const json& j, const char* key) {
  static const json kEmpty = json::object();
  if (!j.contains(key) || j.at(key).is_null()) return kEmpty;
  if (!j.at(key).is_object()) {
    throw UsageError(std::string("'") + key + "' must be an object");
  }
  return j.at(key);
}

bool is_eval_command(const std::string& c) {
  return c == "attack-eval" || c == "defense-eval" || c == "sweep";
}

}  // namespace

std::vector<PerturbationSpec> RunConfig::grid() const {
  std::vector<PerturbationSpec> out;
  for (const auto& params : noises) {
    for (double eps : epsilons) {
      auto spec = PerturbationSpec::with_defaults(params, seed, eps);
      if (channel_mode) spec.channel_mode = *channel_mode;
      out.push_back(spec);
    }
  }
  return out;
}

std::string filter_kind(const defense::FilterSpec& spec) {
  switch (spec.index()) {
    case 0: return "gaussian";
    case 1: return "median";
    default: return "bilateral";
  }
}

json filter_to_json(const defense::FilterSpec& spec) {
  json j{{"kind", filter_kind(spec)}};
  if (const auto* g = std::get_if<defense::GaussianFilter>(&spec)) {
    j["radius"] = g->radius;
    j["sigma"] = g->sigma;
  } else if (const auto* m = std::get_if<defense::MedianFilter>(&spec)) {
    j["window"] = m->window;
  } else {
    const auto& b = std::get<defense::BilateralFilter>(spec);
    j["diameter"] = b.diameter;
    j["sigma_color"] = b.sigma_color;
    j["sigma_space"] = b.sigma_space;
  }
  return j;
}

defense::FilterSpec filter_from_json(const json& j) {
  const auto kind = get_or<std::string>(j, "kind", "");
  defense::FilterSpec out;
  if (kind == "gaussian") {
    defense::GaussianFilter g;
    g.radius = get_or(j, "radius", g.radius);
    g.sigma = get_or(j, "sigma", g.sigma);
    out = g;
  } else if (kind == "median") {
    defense::MedianFilter m;
    m.window = get_or(j, "window", m.window);
    out = m;
  } else if (kind == "bilateral") {
    defense::BilateralFilter b;
    b.diameter = get_or(j, "diameter", b.diameter);
    b.sigma_color = get_or(j, "sigma_color", b.sigma_color);
    b.sigma_space = get_or(j, "sigma_space", b.sigma_space);
    out = b;
  } else {
    throw UsageError("unknown filter kind '" + kind + "'");
  }
  try {
    defense::validate(out);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  return out;
}

json config_to_json(const RunConfig& c) {
  json noises = json::array();
  for (const auto& p : c.noises) noises.push_back(eval::params_to_json(p));
  json dataset{{"kind", c.dataset.kind},
               {"path", c.dataset.path},
               {"manifest", c.dataset.manifest},
               {"limit", c.dataset.limit ? json(*c.dataset.limit) : json(nullptr)},
               {"class_count", c.dataset.class_count ? json(*c.dataset.class_count)
                                                     : json(nullptr)}};
  const auto& b = c.classifier;
  json backend{{"command", b.command},
               {"model_file", b.model_file},
               {"class_count", b.class_count},
               {"input_height", b.input_height},
               {"input_width", b.input_width},
               {"resize", b.resize},
               {"mean", b.mean},
               {"std", b.std},
               {"handshake_timeout_ms", b.handshake_timeout_ms},
               {"batch_timeout_ms", b.batch_timeout_ms}};
  json filter = nullptr;
  if (c.filter_kind == "none") {
    filter = {{"kind", "none"}};
  } else if (!c.filter_kind.empty()) {
    filter = filter_to_json(c.filter);
  }
  return {{"command", c.command},
          {"seed", c.seed},
          {"noise", std::move(noises)},
          {"epsilons", c.epsilons},
          {"channel_mode", c.channel_mode ? json(std::string(to_string(*c.channel_mode)))
                                          : json(nullptr)},
          {"dataset", std::move(dataset)},
          {"classifier", std::move(backend)},
          {"filter", std::move(filter)},
          {"out", c.out},
          {"jobs", c.jobs},
          {"batch_size", c.batch_size},
          {"per_image_seed", c.per_image_seed},
          {"generate",
           {{"height", c.generate.height},
            {"width", c.generate.width},
            {"input", c.generate.input}}}};
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("configuration must be a JSON object");
  RunConfig c;
  c.command = get_or<std::string>(j, "command", "");
  if (c.command != "generate" && !is_eval_command(c.command)) {
    throw UsageError("unknown command '" + c.command + "'");
  }
  c.seed = get_or<std::uint64_t>(j, "seed", 0);

  try {
    if (j.contains("noise") && !j.at("noise").is_null()) {
      const json& n = j.at("noise");
      if (n.is_object()) {
        c.noises.push_back(eval::params_from_json(n));
      } else if (n.is_array()) {
        for (const auto& e : n) c.noises.push_back(eval::params_from_json(e));
      } else {
        throw UsageError("'noise' must be an object or an array");
      }
    }
    c.epsilons = get_or<std::vector<double>>(j, "epsilons", {});
    const auto mode = get_or<std::string>(j, "channel_mode", "");
    if (!mode.empty()) c.channel_mode = parse_channel_mode(mode);
    for (const auto& spec : c.grid()) spec.validate();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  if (c.noises.empty()) throw UsageError("no noise kind given (--noise)");
  if (c.epsilons.empty()) throw UsageError("no budget given (--eps)");

  const json& d = section(j, "dataset");
  c.dataset.kind = get_or(d, "kind", c.dataset.kind);
  c.dataset.path = get_or(d, "path", c.dataset.path);
  c.dataset.manifest = get_or(d, "manifest", c.dataset.manifest);
  if (d.contains("limit") && !d.at("limit").is_null()) {
    c.dataset.limit = get_or<std::size_t>(d, "limit", 0);
  }
  if (d.contains("class_count") && !d.at("class_count").is_null()) {
    c.dataset.class_count = get_or<int>(d, "class_count", 0);
  }

  const json& b = section(j, "classifier");
  auto& be = c.classifier;
  be.command = get_or(b, "command", be.command);
  be.model_file = get_or(b, "model_file", be.model_file);
  be.class_count = get_or(b, "class_count", be.class_count);
  be.input_height = get_or(b, "input_height", be.input_height);
  be.input_width = get_or(b, "input_width", be.input_width);
  be.resize = get_or(b, "resize", be.resize);
  be.mean = get_or(b, "mean", be.mean);
  be.std = get_or(b, "std", be.std);
  be.handshake_timeout_ms = get_or(b, "handshake_timeout_ms", be.handshake_timeout_ms);
  be.batch_timeout_ms = get_or(b, "batch_timeout_ms", be.batch_timeout_ms);

  if (j.contains("filter") && !j.at("filter").is_null()) {
    const auto kind = get_or<std::string>(j.at("filter"), "kind", "");
    if (kind == "none") {
      c.filter_kind = "none";
    } else {
      c.filter = filter_from_json(j.at("filter"));
      c.filter_kind = kind;
    }
  }

  c.out = get_or(j, "out", c.out);
  c.jobs = get_or(j, "jobs", c.jobs);
  c.batch_size = get_or(j, "batch_size", c.batch_size);
  c.per_image_seed = get_or(j, "per_image_seed", c.per_image_seed);
  const json& g = section(j, "generate");
  c.generate.height = get_or(g, "height", c.generate.height);
  c.generate.width = get_or(g, "width", c.generate.width);
  c.generate.input = get_or(g, "input", c.generate.input);

  // Per-command checks.
  if (c.out.empty()) throw UsageError("--out must not be empty");
  if (c.jobs < 1) throw UsageError("--jobs must be >= 1");
  if (c.batch_size < 1) throw UsageError("--batch-size must be >= 1");
  if (c.command == "generate") {
    if (c.noises.size() != 1 || c.epsilons.size() != 1) {
      throw UsageError("generate takes exactly one noise kind and one --eps");
    }
    if (c.generate.input.empty() &&
        (c.generate.height < 1 || c.generate.width < 1)) {
      throw UsageError("--height and --width must be positive");
    }
    return c;
  }
  if (c.dataset.kind != "cifar10" && c.dataset.kind != "dir") {
    throw UsageError("--dataset must be cifar10 or dir");
  }
  if (c.dataset.path.empty()) throw UsageError("no dataset given (--data)");
  if (be.command.empty() == be.model_file.empty()) {
    throw UsageError("give exactly one of --classifier-cmd and --model-file");
  }
  if (be.class_count < 2) throw UsageError("--class-count must be >= 2");
  if (be.handshake_timeout_ms <= 0 || be.batch_timeout_ms <= 0) {
    throw UsageError("timeouts must be positive");
  }
  if (c.command == "defense-eval" && c.filter_kind.empty()) {
    throw UsageError("defense-eval needs --filter (use 'none' for no filter)");
  }
  if (c.command == "attack-eval" && c.has_filter()) {
    throw UsageError("attack-eval takes no filter; use defense-eval");
  }
  return c;
}

}  // namespace procnoise::cli
