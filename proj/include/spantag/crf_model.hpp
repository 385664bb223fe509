// Copyright 2026 The spantag Authors.
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

#ifndef SPANTAG_CRF_MODEL_HPP_
#define SPANTAG_CRF_MODEL_HPP_

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spantag/features.hpp"
#include "spantag/span_types.hpp"

namespace spantag {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct ModelMeta {
  std::uint64_t seed = 0;
  std::string config_digest;
  std::string toolkit_version;
};

// Linear-chain CRF parameters. Immutable after training. All arithmetic is
// 64-bit; transitions forbidden by the tagset legality mask are pinned to
// -inf and excluded from training updates.
struct CrfModel {
  TagsetConfig tagset = TagsetConfig::default_12();
  FeatureTemplateConfig features;
  std::vector<std::string> feature_names;             // id -> string
  std::unordered_map<std::string, int> feature_index; // string -> id

  // emission_weights: (num features) x (num labels).
  Eigen::MatrixXd emission_weights;
  // transitions: (L+1) x (L+1); row L is the virtual start state, column L
  // the virtual stop state. Entry (L, L) is unused.
  Eigen::MatrixXd transitions;
  // Optional projection of externally precomputed per-token vectors onto
  // label scores: (external dim) x (num labels).
  std::optional<Eigen::MatrixXd> projection;

  ModelMeta meta;

  int num_labels() const { return tagset.num_labels(); }
  int num_features() const { return static_cast<int>(feature_names.size()); }
  int start_index() const { return num_labels(); }
  int stop_index() const { return num_labels(); }
  int external_dim() const {
    return projection ? static_cast<int>(projection->rows()) : 0;
  }

  int intern_feature(const std::string& name);  // adds when missing
  int lookup_feature(const std::string& name) const;  // -1 when unknown

  // Zero-weight model over the given feature vocabulary, with the legality
  // mask applied to the transition table.
  static CrfModel make(TagsetConfig tagset, FeatureTemplateConfig features,
                       std::vector<std::string> feature_names,
                       int external_dim = 0);

  // Re-applies -inf to all mask-forbidden transition entries.
  void apply_transition_mask();
};

struct TrainConfig {
  int epochs = 100;
  double learning_rate = 0.2;
  double l2_strength = 0.0;
  int batch_size = 8;
  std::uint64_t seed = 1;
  std::optional<double> gradient_clip;  // global L2 norm ceiling
  double feature_dropout = 0.0;         // probability of dropping a feature
  // Number of worker chunks for gradient accumulation. With more than one,
  // per-chunk partial gradients are merged in chunk order, so results are
  // reproducible for a fixed thread count but may differ from the
  // single-threaded summation at floating-point rounding level.
  int threads = 1;

  void validate() const;  // InvalidArgumentError on bad settings
};

}  // namespace spantag

#endif  // SPANTAG_CRF_MODEL_HPP_
