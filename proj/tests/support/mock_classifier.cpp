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

// Scriptable classifier speaking the JSONL protocol, used by the gateway,
// evaluation and CLI tests.
//
//   --mode constant    always --label
//   --mode scores      always --scores (comma separated); label left to argmax
//   --mode identity    true label of the request id from --reference
//   --mode changed     true label when the image equals the reference image,
//                      otherwise (label + 1) % classes; differences of at most
//                      --tolerance levels count as equal
//   --mode script      --script TSV "id<TAB>clean<TAB>perturbed": the first
//                      label for an unchanged image, the second otherwise
//   --mode dist        flips when hash(id) % 1000 < 1000 * linf / --scale,
//                      linf in 8-bit levels against the reference; the flip
//                      probability grows with the deviation
//
// Fault injection: --crash-after N, --malformed-after N, --wrong-id,
// --hang, --no-handshake, --protocol V, --handshake-classes K, --stderr-noise.

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "procnoise/classifier/protocol.hpp"
#include "procnoise/data/dataset.hpp"

namespace {

using procnoise::ImageTensor;

struct Options {
  std::string mode = "constant";
  int classes = 10;
  int label = 0;
  std::vector<double> scores;
  std::string reference;
  std::string script;
  int tolerance = 0;
  double scale = 12.0;
  long crash_after = -1;
  long malformed_after = -1;
  bool wrong_id = false;
  bool hang = false;
  bool no_handshake = false;
  int protocol = procnoise::classifier::kProtocolVersion;
  int handshake_classes = -1;
};

struct Entry {
  int label = 0;
  const ImageTensor* image = nullptr;
};

int max_deviation(const ImageTensor& a, const ImageTensor& b) {
  if (!a.same_shape(b)) return 255;
  const auto x = a.to_u8(), y = b.to_u8();
  int worst = 0;
  for (std::size_t i = 0; i < x.sample_count(); ++i) {
    worst = std::max(worst, std::abs(int(x.u8()[i]) - int(y.u8()[i])));
  }
  return worst;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Options parse(int argc, char** argv) {
  Options o;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "mock: missing value for " << a << "\n";
        std::exit(64);
      }
      return argv[++i];
    };
    if (a == "--mode") o.mode = next();
    else if (a == "--classes") o.classes = std::stoi(next());
    else if (a == "--label") o.label = std::stoi(next());
    else if (a == "--scores") {
      std::stringstream s(next());
      for (std::string t; std::getline(s, t, ',');) o.scores.push_back(std::stod(t));
    } else if (a == "--reference") o.reference = next();
    else if (a == "--script") o.script = next();
    else if (a == "--tolerance") o.tolerance = std::stoi(next());
    else if (a == "--scale") o.scale = std::stod(next());
    else if (a == "--crash-after") o.crash_after = std::stol(next());
    else if (a == "--malformed-after") o.malformed_after = std::stol(next());
    else if (a == "--wrong-id") o.wrong_id = true;
    else if (a == "--hang") o.hang = true;
    else if (a == "--no-handshake") o.no_handshake = true;
    else if (a == "--protocol") o.protocol = std::stoi(next());
    else if (a == "--handshake-classes") o.handshake_classes = std::stoi(next());
    else if (a == "--stderr-noise") std::cerr << "mock: chatter on stderr\n";
    else {
      std::cerr << "mock: unknown argument " << a << "\n";
      std::exit(64);
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const Options o = parse(argc, argv);
  if (o.no_handshake) return 3;

  std::optional<procnoise::data::LabeledDataset> reference;
  std::map<std::string, Entry> by_id;
  if (!o.reference.empty()) {
    reference = procnoise::data::load_cifar10_batch(o.reference);
    for (const auto& item : reference->items()) {
      by_id[item.id] = {item.label, &item.image};
    }
  }
  std::map<std::string, std::pair<int, int>> script;
  if (!o.script.empty()) {
    std::ifstream in(o.script);
    std::string id;
    int clean = 0, perturbed = 0;
    while (in >> id >> clean >> perturbed) script[id] = {clean, perturbed};
  }

  const int advertised = o.handshake_classes > 0 ? o.handshake_classes : o.classes;
  std::cout << nlohmann::json{{"protocol", o.protocol}, {"class_count", advertised}}.dump()
            << "\n"
            << std::flush;
  if (o.hang) {
    for (;;) std::this_thread::sleep_for(std::chrono::seconds(60));
  }

  long served = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    if (o.crash_after >= 0 && served >= o.crash_after) std::_Exit(7);
    if (o.malformed_after >= 0 && served >= o.malformed_after) {
      std::cout << "this is not json\n" << std::flush;
      continue;
    }
    const auto request = procnoise::classifier::parse_request(line);
    procnoise::classifier::Prediction p;
    p.id = o.wrong_id ? request.id + "#" : request.id;

    const auto it = by_id.find(request.id);
    const int truth = it != by_id.end() ? it->second.label : 0;
    const int deviation =
        it != by_id.end() ? max_deviation(request.image, *it->second.image) : 255;
    if (o.mode == "constant") {
      p.label = o.label;
    } else if (o.mode == "scores") {
      p.scores = o.scores;
    } else if (o.mode == "identity") {
      p.label = truth;
    } else if (o.mode == "changed") {
      p.label = deviation <= o.tolerance ? truth : (truth + 1) % o.classes;
    } else if (o.mode == "script") {
      const auto s = script.find(request.id);
      const auto [clean, perturbed] = s != script.end() ? s->second : std::pair{0, 0};
      p.label = deviation == 0 ? clean : perturbed;
    } else if (o.mode == "dist") {
      const double threshold = 1000.0 * deviation / o.scale;
      p.label = static_cast<double>(fnv1a(request.id) % 1000) < threshold
                    ? (truth + 1) % o.classes
                    : truth;
    } else {
      std::cerr << "mock: unknown mode " << o.mode << "\n";
      return 64;
    }
    std::cout << procnoise::classifier::encode_response(p) << "\n" << std::flush;
    ++served;
  }
  return 0;
}
