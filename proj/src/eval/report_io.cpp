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

#include "procnoise/eval/report_io.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>

#include "procnoise/error.hpp"

namespace procnoise::eval {
namespace {

using nlohmann::json;

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("bad value for '") + key + "': " + e.what());
  }
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json params_to_json(const noise::NoiseParams& params) {
  json j{{"noise", std::string(noise::kind_name(params))}};
  if (const auto* p = std::get_if<noise::SimplexParams>(&params)) {
    j["dim"] = p->dim;
    j["step"] = p->step;
    j["slice"] = p->slice;
    j["r_squared"] = p->r_squared;
    j["gradients_2d"] = p->gradients_2d;
  } else if (const auto* p = std::get_if<noise::WorleyParams>(&params)) {
    j["points"] = p->points;
  } else if (const auto* p = std::get_if<noise::PerlinParams>(&params)) {
    j["octaves"] = p->octaves;
    j["period"] = p->period;
    j["sine_frequency"] = p->sine_frequency;
  } else if (const auto* p = std::get_if<noise::GaussianParams>(&params)) {
    j["mean"] = p->mean;
    j["std"] = p->std;
  } else {
    j["prob"] = std::get<noise::SaltPepperParams>(params).prob;
  }
  return j;
}

noise::NoiseParams params_from_json(const json& j) {
  const auto kind = get_or<std::string>(j, "noise", "");
  noise::NoiseParams out;
  if (kind == "simplex") {
    noise::SimplexParams p;
    p.dim = get_or(j, "dim", p.dim);
    p.step = get_or(j, "step", p.step);
    p.slice = get_or(j, "slice", p.slice);
    p.r_squared = get_or(j, "r_squared", p.r_squared);
    p.gradients_2d = get_or(j, "gradients_2d", p.gradients_2d);
    out = p;
  } else if (kind == "worley") {
    noise::WorleyParams p;
    p.points = get_or(j, "points", p.points);
    out = p;
  } else if (kind == "perlin") {
    noise::PerlinParams p;
    p.octaves = get_or(j, "octaves", p.octaves);
    p.period = get_or(j, "period", p.period);
    p.sine_frequency = get_or(j, "sine_frequency", p.sine_frequency);
    out = p;
  } else if (kind == "gaussian") {
    noise::GaussianParams p;
    p.mean = get_or(j, "mean", p.mean);
    p.std = get_or(j, "std", p.std);
    out = p;
  } else if (kind == "sp") {
    noise::SaltPepperParams p;
    p.prob = get_or(j, "prob", p.prob);
    out = p;
  } else {
    throw ParameterError("unknown noise kind '" + kind + "'");
  }
  noise::validate(out);
  return out;
}

json spec_to_json(const PerturbationSpec& spec) {
  json j = params_to_json(spec.params);
  j["seed"] = spec.seed;
  j["epsilon"] = spec.epsilon;
  j["channel_mode"] = std::string(to_string(spec.channel_mode));
  return j;
}

PerturbationSpec spec_from_json(const json& j) {
  auto spec = PerturbationSpec::with_defaults(
      params_from_json(j), get_or<std::uint64_t>(j, "seed", 0),
      get_or(j, "epsilon", 0.0));
  if (j.contains("channel_mode")) {
    spec.channel_mode = parse_channel_mode(get_or<std::string>(j, "channel_mode", ""));
  }
  spec.validate();
  return spec;
}

json record_to_json(const EvalRecord& r) {
  return {{"id", r.id},
          {"true_label", r.true_label},
          {"clean_label", r.clean_label},
          {"adv_label", r.adv_label},
          {"fingerprint", r.fingerprint}};
}

json report_to_json(const EvalReport& report) {
  json records = json::array();
  for (const auto& r : report.records) records.push_back(record_to_json(r));
  return {{"fingerprint", report.fingerprint},
          {"spec", spec_to_json(report.spec)},
          {"defense", report.defense.empty() ? json(nullptr) : json(report.defense)},
          {"n", report.counts.total},
          {"evaded", report.counts.evaded},
          {"robust", report.counts.robust()},
          {"clean_correct", report.counts.clean_correct},
          {"evasion_rate", report.evasion_rate},
          {"robust_accuracy", report.robust_accuracy},
          {"clean_accuracy", report.clean_accuracy},
          {"records", std::move(records)}};
}

json sweep_to_json(std::span<const SweepEntry> entries) {
  json reports = json::array();
  for (const auto& e : entries) {
    if (e.report) {
      json j = report_to_json(*e.report);
      j["status"] = "ok";
      reports.push_back(std::move(j));
    } else {
      reports.push_back({{"fingerprint", e.spec.fingerprint()},
                         {"spec", spec_to_json(e.spec)},
                         {"status", "error: " + e.error}});
    }
  }
  return {{"reports", std::move(reports)}};
}

std::string sweep_to_csv(std::span<const SweepEntry> entries) {
  std::string out =
      "fingerprint,epsilon,evasion_rate,robust_accuracy,clean_accuracy,n,status\n";
  for (const auto& e : entries) {
    out += csv_field(e.spec.fingerprint()) + "," + number(e.spec.epsilon) + ",";
    if (e.report) {
      const auto& r = *e.report;
      out += number(r.evasion_rate) + "," + number(r.robust_accuracy) + "," +
             number(r.clean_accuracy) + "," + std::to_string(r.counts.total) +
             ",ok\n";
    } else {
      out += ",,,," + csv_field("error: " + e.error) + "\n";
    }
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  const auto tmp = path.parent_path() /
                   ("." + path.filename().string() + ".tmp." +
                    std::to_string(::getpid()));
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw IoError("cannot create " + tmp.string() + ": " + std::strerror(errno));
  }
  std::size_t written = 0;
  while (written < content.size()) {
    const ssize_t n = ::write(fd, content.data() + written, content.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      const std::string err = std::strerror(errno);
      ::close(fd);
      ::unlink(tmp.c_str());
      throw IoError("write to " + tmp.string() + " failed: " + err);
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) {
    ::unlink(tmp.c_str());
    throw IoError("cannot flush " + tmp.string());
  }
  if (::rename(tmp.c_str(), path.c_str()) != 0) {
    const std::string err = std::strerror(errno);
    ::unlink(tmp.c_str());
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() +
                  ": " + err);
  }
}

}  // namespace procnoise::eval
