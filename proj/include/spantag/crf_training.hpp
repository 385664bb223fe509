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

#ifndef SPANTAG_CRF_TRAINING_HPP_
#define SPANTAG_CRF_TRAINING_HPP_

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "spantag/crf_inference.hpp"
#include "spantag/crf_model.hpp"

namespace spantag {

struct TrainingExample {
  PreparedSentence sentence;
  std::vector<int> gold;  // label indices, mask-legal
};

struct CrfGradient {
  Eigen::MatrixXd emission;     // same shape as the model's weights
  Eigen::MatrixXd transitions;  // forbidden entries stay exactly zero
  std::optional<Eigen::MatrixXd> projection;

  static CrfGradient zeros_like(const CrfModel& model);
  void add(const CrfGradient& other);
  double squared_norm() const;
  void scale(double factor);
};

struct LossAndGradient {
  double loss = 0.0;
  CrfGradient gradient;
};

// Negative log-likelihood of the batch plus l2_strength * ||weights||^2,
// with the gradient from forward-backward expected counts minus empirical
// counts. Gold sequences that violate the legality mask raise
// IllegalGoldSequenceError.
LossAndGradient nll_and_gradient(const CrfModel& model,
                                 const std::vector<TrainingExample>& batch,
                                 double l2_strength = 0.0,
                                 int threads = 1);

struct EpochRecord {
  int epoch = 0;             // 1-based
  double train_nll = 0.0;    // summed minibatch losses of the epoch
  double dev_weighted_f1 = 0.0;
};

struct TrainResult {
  CrfModel model;  // checkpoint of the best dev weighted-F1 epoch
  std::vector<EpochRecord> history;
  int best_epoch = 0;
};

// Mini-batch gradient descent with a fixed learning rate. The feature
// vocabulary is built from the training set; gold tags come from encoding
// the annotations. A fixed seed makes the history bitwise reproducible.
// With an empty dev set the checkpoint with the lowest train NLL is kept.
TrainResult train(const std::vector<SentenceAnnotation>& train_set,
                  const std::vector<SentenceAnnotation>& dev_set,
                  const TagsetConfig& tagset,
                  const FeatureTemplateConfig& features,
                  const TrainConfig& config);

}  // namespace spantag

#endif  // SPANTAG_CRF_TRAINING_HPP_
