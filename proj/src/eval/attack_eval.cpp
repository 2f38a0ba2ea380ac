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

#include "procnoise/eval/attack_eval.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "procnoise/error.hpp"
#include "procnoise/parallel.hpp"

namespace procnoise::eval {
namespace {

using classifier::Classifier;
using classifier::ImageRef;

using Shape = std::tuple<int, int, int>;

Shape shape_of(const ImageTensor& img) {
  return {img.height(), img.width(), img.channels()};
}

}  // namespace

EvalReport run_eval_pipeline(const data::LabeledDataset& dataset,
                             const PerturbationSpec& spec,
                             std::span<Classifier* const> handles,
                             const EvalOptions& options,
                             const ImageTransform& transform,
                             const std::string& transform_name) {
  spec.validate();
  if (handles.empty()) throw ParameterError("no classifier handle given");
  if (options.batch_size == 0) throw ParameterError("batch size must be positive");
  for (const auto* h : handles) {
    if (h->class_count() < dataset.class_count()) {
      throw ParameterError("classifier has " + std::to_string(h->class_count()) +
                           " classes, dataset labels need " +
                           std::to_string(dataset.class_count()));
    }
  }

  const auto& items = dataset.items();
  const std::string fingerprint = spec.fingerprint();

  // One perturbation per image shape; identical for every image of that
  // shape unless per-image seeding is requested.
  std::map<Shape, Perturbation> shared;
  if (!options.per_image_seed) {
    for (const auto& item : items) {
      const auto s = shape_of(item.image);
      if (!shared.contains(s)) {
        shared.emplace(s, make_perturbation(spec, item.image.height(),
                                            item.image.width(),
                                            item.image.channels()));
      }
    }
  }

  const std::size_t n = items.size();
  const std::size_t batches = (n + options.batch_size - 1) / options.batch_size;
  std::vector<std::optional<EvalRecord>> records(n);
  std::mutex sink_mutex;
  std::atomic<std::size_t> next_batch{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto run_batches = [&](Classifier& handle) {
    for (std::size_t b; !failed && (b = next_batch.fetch_add(1)) < batches;) {
      const std::size_t begin = b * options.batch_size;
      const std::size_t end = std::min(n, begin + options.batch_size);
      const std::size_t m = end - begin;

      std::vector<std::optional<ImageTensor>> clean(m), adv(m);
      parallel_for(m, options.jobs, [&](std::size_t k) {
        const auto& item = items[begin + k];
        ImageTensor perturbed = [&] {
          if (options.per_image_seed) {
            PerturbationSpec local = spec;
            local.seed = spec.seed + begin + k;
            return apply(item.image,
                         make_perturbation(local, item.image.height(),
                                           item.image.width(),
                                           item.image.channels()));
          }
          return apply(item.image, shared.at(shape_of(item.image)));
        }();
        if (transform) {
          clean[k] = transform(item.image);
          adv[k] = transform(perturbed);
        } else {
          clean[k] = item.image;
          adv[k] = std::move(perturbed);
        }
      });

      std::vector<ImageRef> clean_refs, adv_refs;
      for (std::size_t k = 0; k < m; ++k) {
        clean_refs.push_back({items[begin + k].id, &*clean[k]});
        adv_refs.push_back({items[begin + k].id, &*adv[k]});
      }
      const auto clean_pred = handle.classify(clean_refs);
      const auto adv_pred = handle.classify(adv_refs);
      if (clean_pred.size() != m || adv_pred.size() != m) {
        throw ClassifierError("classifier returned a wrong number of predictions");
      }
      for (std::size_t k = 0; k < m; ++k) {
        const auto& item = items[begin + k];
        EvalRecord r{item.id, item.label, clean_pred[k].label, adv_pred[k].label,
                     fingerprint};
        records[begin + k] = r;
        if (options.on_record) {
          std::lock_guard lock(sink_mutex);
          options.on_record(r);
        }
      }
    }
  };

  auto guarded = [&](Classifier& handle) {
    try {
      run_batches(handle);
    } catch (const std::exception& e) {
      std::lock_guard lock(failure_mutex);
      if (!failed.exchange(true)) failure = e.what();
    }
  };

  if (handles.size() == 1) {
    guarded(*handles[0]);
  } else {
    std::vector<std::jthread> threads;
    for (auto* h : handles) threads.emplace_back([&, h] { guarded(*h); });
  }

  std::vector<EvalRecord> done;
  done.reserve(n);
  for (auto& r : records) {
    if (r) done.push_back(std::move(*r));
  }
  if (failed) {
    throw PartialEvalError("evaluation of " + fingerprint + " failed after " +
                               std::to_string(done.size()) + " of " +
                               std::to_string(n) + " images: " + failure,
                           std::move(done));
  }
  return assemble_report(spec, transform_name, std::move(done));
}

EvalReport run_attack_eval(const data::LabeledDataset& dataset,
                           const PerturbationSpec& spec, Classifier& handle,
                           const EvalOptions& options) {
  Classifier* const handles[] = {&handle};
  return run_eval_pipeline(dataset, spec, handles, options, {}, "");
}

EvalReport run_attack_eval(const data::LabeledDataset& dataset,
                           const PerturbationSpec& spec,
                           std::span<Classifier* const> handles,
                           const EvalOptions& options) {
  return run_eval_pipeline(dataset, spec, handles, options, {}, "");
}

std::vector<SweepEntry> sweep(const data::LabeledDataset& dataset,
                              std::span<const PerturbationSpec> grid,
                              Classifier& handle, const EvalOptions& options) {
  Classifier* const handles[] = {&handle};
  return sweep(dataset, grid, handles, options);
}

std::vector<SweepEntry> sweep(const data::LabeledDataset& dataset,
                              std::span<const PerturbationSpec> grid,
                              std::span<Classifier* const> handles,
                              const EvalOptions& options) {
  if (grid.empty()) throw ParameterError("sweep grid is empty");
  std::vector<SweepEntry> out;
  out.reserve(grid.size());
  for (const auto& spec : grid) {
    SweepEntry entry{spec, std::nullopt, {}};
    try {
      entry.report = run_attack_eval(dataset, spec, handles, options);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace procnoise::eval
