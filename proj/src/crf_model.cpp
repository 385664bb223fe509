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

#include "spantag/crf_model.hpp"

#include "spantag/errors.hpp"

namespace spantag {

int CrfModel::intern_feature(const std::string& name) {
  auto it = feature_index.find(name);
  if (it != feature_index.end()) return it->second;
  const int id = static_cast<int>(feature_names.size());
  feature_names.push_back(name);
  feature_index.emplace(name, id);
  return id;
}

int CrfModel::lookup_feature(const std::string& name) const {
  auto it = feature_index.find(name);
  return it == feature_index.end() ? -1 : it->second;
}

CrfModel CrfModel::make(TagsetConfig tagset, FeatureTemplateConfig features,
                        std::vector<std::string> feature_names,
                        int external_dim) {
  CrfModel model;
  model.tagset = std::move(tagset);
  model.features = features;
  model.feature_names = std::move(feature_names);
  for (size_t i = 0; i < model.feature_names.size(); ++i) {
    model.feature_index.emplace(model.feature_names[i], static_cast<int>(i));
  }
  const int labels = model.num_labels();
  model.emission_weights = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(model.feature_names.size()), labels);
  model.transitions = Eigen::MatrixXd::Zero(labels + 1, labels + 1);
  if (external_dim > 0) {
    model.projection = Eigen::MatrixXd::Zero(external_dim, labels);
  }
  model.apply_transition_mask();
  return model;
}

void CrfModel::apply_transition_mask() {
  const int labels = num_labels();
  for (int to = 0; to < labels; ++to) {
    if (!tagset.start_allowed(to)) transitions(labels, to) = kNegInf;
    for (int from = 0; from < labels; ++from) {
      if (!tagset.transition_allowed(from, to)) {
        transitions(from, to) = kNegInf;
      }
    }
  }
  transitions(labels, labels) = kNegInf;  // unused corner
}

void TrainConfig::validate() const {
  if (epochs < 1) throw InvalidArgumentError("epochs must be >= 1");
  if (!(learning_rate > 0.0)) {
    throw InvalidArgumentError("learning rate must be positive");
  }
  if (l2_strength < 0.0) {
    throw InvalidArgumentError("l2 strength must be non-negative");
  }
  if (batch_size < 1) throw InvalidArgumentError("batch size must be >= 1");
  if (feature_dropout < 0.0 || feature_dropout >= 1.0) {
    throw InvalidArgumentError("feature dropout must be in [0, 1)");
  }
  if (threads < 1) throw InvalidArgumentError("threads must be >= 1");
  if (gradient_clip && !(*gradient_clip > 0.0)) {
    throw InvalidArgumentError("gradient clip must be positive");
  }
}

}  // namespace spantag
