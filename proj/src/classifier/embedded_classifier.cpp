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

#include "procnoise/classifier/embedded_classifier.hpp"

#include <opencv2/core.hpp>
#include <opencv2/dnn.hpp>
#include <opencv2/imgproc.hpp>

#include <sstream>

#include "procnoise/error.hpp"

namespace procnoise::classifier {

struct EmbeddedClassifier::Net {
  cv::dnn::Net net;
};

EmbeddedClassifier::EmbeddedClassifier(EmbeddedConfig config)
    : config_(std::move(config)), net_(std::make_unique<Net>()) {}

EmbeddedClassifier::~EmbeddedClassifier() = default;

std::unique_ptr<EmbeddedClassifier> EmbeddedClassifier::open(
    const EmbeddedConfig& config) {
  const auto& pre = config.preprocessing;
  if (config.class_count < 2) throw ParameterError("class_count must be >= 2");
  if (pre.input_height < 1 || pre.input_width < 1) {
    throw ParameterError("model input size must be positive");
  }
  if (pre.input_channels != 1 && pre.input_channels != 3) {
    throw ParameterError("model input channels must be 1 or 3");
  }
  for (double s : pre.std) {
    if (!(s > 0.0)) throw ParameterError("normalization std must be > 0");
  }
  std::unique_ptr<EmbeddedClassifier> handle(new EmbeddedClassifier(config));
  try {
    handle->net_->net = cv::dnn::readNetFromONNX(config.model_file.string());
  } catch (const cv::Exception& e) {
    throw ModelError("cannot load model " + config.model_file.string() + ": " +
                     e.what());
  }
  if (handle->net_->net.empty()) {
    throw ModelError("model " + config.model_file.string() + " is empty");
  }
  handle->net_->net.setPreferableBackend(cv::dnn::DNN_BACKEND_OPENCV);
  handle->net_->net.setPreferableTarget(cv::dnn::DNN_TARGET_CPU);
  return handle;
}

std::vector<Prediction> EmbeddedClassifier::classify(
    std::span<const ImageRef> images) {
  const auto& pre = config_.preprocessing;
  std::vector<Prediction> out;
  out.reserve(images.size());
  std::lock_guard lock(mutex_);
  for (const auto& ref : images) {
    const ImageTensor img = ref.image->to_u8();
    if (img.channels() != pre.input_channels) {
      throw ShapeError("image '" + ref.id + "' has " +
                       std::to_string(img.channels()) + " channels, model expects " +
                       std::to_string(pre.input_channels));
    }
    cv::Mat hwc(img.height(), img.width(), CV_8UC(img.channels()),
                const_cast<std::uint8_t*>(img.u8().data()));
    if (img.height() != pre.input_height || img.width() != pre.input_width) {
      if (!pre.resize) {
        throw ShapeError("image '" + ref.id + "' is " +
                         std::to_string(img.height()) + "x" +
                         std::to_string(img.width()) + ", model expects " +
                         std::to_string(pre.input_height) + "x" +
                         std::to_string(pre.input_width) +
                         " and no resize is declared");
      }
      cv::Mat resized;
      cv::resize(hwc, resized, cv::Size(pre.input_width, pre.input_height), 0, 0,
                 cv::INTER_LINEAR);
      hwc = resized;
    }
    const int c = pre.input_channels;
    const int sizes[4] = {1, c, pre.input_height, pre.input_width};
    cv::Mat blob(4, sizes, CV_32F);
    float* dst = blob.ptr<float>();
    const std::size_t plane =
        static_cast<std::size_t>(pre.input_height) * pre.input_width;
    for (int y = 0; y < pre.input_height; ++y) {
      const std::uint8_t* row = hwc.ptr<std::uint8_t>(y);
      for (int x = 0; x < pre.input_width; ++x) {
        for (int k = 0; k < c; ++k) {
          const double v = row[x * c + k] / 255.0;
          dst[k * plane + static_cast<std::size_t>(y) * pre.input_width + x] =
              static_cast<float>((v - pre.mean[k]) / pre.std[k]);
        }
      }
    }
    cv::Mat result;
    try {
      net_->net.setInput(blob);
      result = net_->net.forward();
    } catch (const cv::Exception& e) {
      throw ModelError("inference failed for '" + ref.id + "': " + e.what());
    }
    if (static_cast<int>(result.total()) != config_.class_count) {
      throw ModelError("model produced " + std::to_string(result.total()) +
                       " outputs, declared class_count is " +
                       std::to_string(config_.class_count));
    }
    const cv::Mat flat = result.reshape(1, 1);
    std::vector<double> scores(flat.total());
    for (std::size_t i = 0; i < scores.size(); ++i) {
      scores[i] = flat.at<float>(0, static_cast<int>(i));
    }
    Prediction p;
    p.id = ref.id;
    p.label = argmax(scores);
    p.scores = std::move(scores);
    out.push_back(std::move(p));
  }
  return out;
}

std::string EmbeddedClassifier::describe() const {
  const auto& pre = config_.preprocessing;
  std::ostringstream s;
  s << "embedded(onnx=" << config_.model_file.string()
    << "; class_count=" << config_.class_count << "; input=" << pre.input_channels
    << "x" << pre.input_height << "x" << pre.input_width
    << "; resize=" << (pre.resize ? "bilinear" : "none") << "; mean=("
    << pre.mean[0] << "," << pre.mean[1] << "," << pre.mean[2] << "); std=("
    << pre.std[0] << "," << pre.std[1] << "," << pre.std[2] << "))";
  return s.str();
}

std::unique_ptr<Classifier> open_embedded(const EmbeddedConfig& config) {
  return EmbeddedClassifier::open(config);
}

}  // namespace procnoise::classifier
