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

#ifndef SPANTAG_CRF_INFERENCE_HPP_
#define SPANTAG_CRF_INFERENCE_HPP_

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "spantag/crf_model.hpp"

namespace spantag {

// A sentence reduced to active feature ids (unknown features dropped) and
// optional external per-token vectors, ready for scoring.
struct PreparedSentence {
  std::vector<std::vector<int>> feature_ids;     // per token
  std::optional<Eigen::MatrixXd> external;       // (tokens) x (external dim)

  int size() const { return static_cast<int>(feature_ids.size()); }
};

// DimensionMismatchError when the external vectors do not match the
// model's declared projection input.
PreparedSentence prepare_sentence(
    const CrfModel& model, const std::vector<std::string>& surfaces,
    const std::optional<Eigen::MatrixXd>& external = std::nullopt);

// score(t, l) = sum of emission weights of the features active at t
// (+ the projected external vector when present). Purely additive in log
// space.
Eigen::MatrixXd emission_scores(const CrfModel& model,
                                const PreparedSentence& sentence);

struct ViterbiResult {
  std::vector<int> labels;
  double score = 0.0;
};

// Argmax label sequence under emissions + transitions restricted to the
// legality mask. Ties break towards the lowest label index at every
// backpointer, so the result is deterministic.
ViterbiResult viterbi_decode(const CrfModel& model,
                             const PreparedSentence& sentence);

// Convenience wrapper producing a TagSequence for a tokenized sentence.
TagSequence viterbi_tags(const CrfModel& model, const std::string& sentence_id,
                         const std::vector<std::string>& surfaces,
                         const std::optional<Eigen::MatrixXd>& external =
                             std::nullopt);

// log sum over all mask-legal sequences of exp(score); forward recursion in
// log space.
double log_partition(const CrfModel& model, const PreparedSentence& sentence);

struct Marginals {
  double log_z = 0.0;
  Eigen::MatrixXd node;                // (tokens) x (labels)
  std::vector<Eigen::MatrixXd> edge;   // per t>=1: (labels) x (labels)
};

// Forward-backward posteriors. node.row(t) sums to 1.
Marginals forward_backward(const CrfModel& model,
                           const PreparedSentence& sentence);

// Numerically stable log(sum(exp(x))) that ignores -inf entries.
double log_sum_exp(const Eigen::Ref<const Eigen::ArrayXd>& values);

}  // namespace spantag

#endif  // SPANTAG_CRF_INFERENCE_HPP_
