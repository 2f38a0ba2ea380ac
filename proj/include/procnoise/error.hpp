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

#ifndef PROCNOISE_ERROR_HPP_
#define PROCNOISE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace procnoise {

/// Invalid argument or configuration value.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input data (dataset files, manifests, images, wire messages).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base class for failures raised while talking to a classifier backend.
class ClassifierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpawnError : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

class TimeoutError : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

class ProtocolError : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

/// The child process exited or closed its output before answering.
/// `last_id()` is the id of the last image that received a prediction
/// (empty when none did).
class ChildCrashError : public ClassifierError {
 public:
  ChildCrashError(const std::string& what, std::string last_id)
      : ClassifierError(what), last_id_(std::move(last_id)) {}
  const std::string& last_id() const { return last_id_; }

 private:
  std::string last_id_;
};

class ModelError : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

class ShapeError : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

}  // namespace procnoise

#endif  // PROCNOISE_ERROR_HPP_
