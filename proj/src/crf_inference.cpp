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

#include "spantag/crf_inference.hpp"

#include <cmath>

#include "spantag/errors.hpp"
#include "spantag/features.hpp"

namespace spantag {

double log_sum_exp(const Eigen::Ref<const Eigen::ArrayXd>& values) {
  double max = kNegInf;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > max) max = values[i];
  }
  if (max == kNegInf) return kNegInf;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] != kNegInf) sum += std::exp(values[i] - max);
  }
  return max + std::log(sum);
}

PreparedSentence prepare_sentence(
    const CrfModel& model, const std::vector<std::string>& surfaces,
    const std::optional<Eigen::MatrixXd>& external) {
  PreparedSentence prepared;
  prepared.feature_ids.resize(surfaces.size());
  for (int t = 0; t < static_cast<int>(surfaces.size()); ++t) {
    for (const std::string& feature :
         extract_features(surfaces, t, model.features)) {
      const int id = model.lookup_feature(feature);
      if (id >= 0) prepared.feature_ids[t].push_back(id);
    }
  }
  if (external) {
    if (!model.projection) {
      throw DimensionMismatchError(
          "model has no projection for external vectors");
    }
    if (external->rows() != static_cast<Eigen::Index>(surfaces.size()) ||
        external->cols() != model.projection->rows()) {
      throw DimensionMismatchError(
          "external vectors are " + std::to_string(external->rows()) + "x" +
          std::to_string(external->cols()) + ", expected " +
          std::to_string(surfaces.size()) + "x" +
          std::to_string(model.projection->rows()));
    }
    prepared.external = *external;
  }
  return prepared;
}

Eigen::MatrixXd emission_scores(const CrfModel& model,
                                const PreparedSentence& sentence) {
  const int n = sentence.size();
  Eigen::MatrixXd scores = Eigen::MatrixXd::Zero(n, model.num_labels());
  for (int t = 0; t < n; ++t) {
    for (int id : sentence.feature_ids[t]) {
      scores.row(t) += model.emission_weights.row(id);
    }
  }
  if (sentence.external) {
    if (!model.projection) {
      throw DimensionMismatchError(
          "external vectors supplied but the model has no projection");
    }
    scores.noalias() += *sentence.external * *model.projection;
  }
  return scores;
}

ViterbiResult viterbi_decode(const CrfModel& model,
                             const PreparedSentence& sentence) {
  const int n = sentence.size();
  if (n == 0) throw EmptySentenceError("cannot decode an empty sentence");
  const int labels = model.num_labels();
  const Eigen::MatrixXd emit = emission_scores(model, sentence);

  Eigen::MatrixXd delta(n, labels);
  Eigen::MatrixXi backpointer(n, labels);
  delta.row(0) =
      emit.row(0) + model.transitions.row(model.start_index()).head(labels);
  backpointer.row(0).setConstant(-1);

  for (int t = 1; t < n; ++t) {
    for (int to = 0; to < labels; ++to) {
      double best = kNegInf;
      int best_from = -1;
      for (int from = 0; from < labels; ++from) {
        const double candidate =
            delta(t - 1, from) + model.transitions(from, to);
        if (candidate > best) {  // strict: ties keep the lowest index
          best = candidate;
          best_from = from;
        }
      }
      delta(t, to) = best + emit(t, to);
      backpointer(t, to) = best_from;
    }
  }

  double best = kNegInf;
  int best_label = -1;
  for (int l = 0; l < labels; ++l) {
    const double candidate =
        delta(n - 1, l) + model.transitions(l, model.stop_index());
    if (candidate > best) {
      best = candidate;
      best_label = l;
    }
  }

  ViterbiResult result;
  result.score = best;
  result.labels.assign(static_cast<size_t>(n), -1);
  int current = best_label;
  for (int t = n - 1; t >= 0; --t) {
    result.labels[t] = current;
    current = backpointer(t, current);
  }
  return result;
}

TagSequence viterbi_tags(const CrfModel& model, const std::string& sentence_id,
                         const std::vector<std::string>& surfaces,
                         const std::optional<Eigen::MatrixXd>& external) {
  const PreparedSentence prepared =
      prepare_sentence(model, surfaces, external);
  const ViterbiResult result = viterbi_decode(model, prepared);
  TagSequence tags;
  tags.sentence_id = sentence_id;
  tags.labels.reserve(result.labels.size());
  for (int l : result.labels) tags.labels.push_back(model.tagset.label(l));
  return tags;
}

namespace {

// alpha(t, l) = log sum of scores of all legal prefixes ending at t with l.
Eigen::MatrixXd forward_table(const CrfModel& model,
                              const Eigen::MatrixXd& emit) {
  const int n = static_cast<int>(emit.rows());
  const int labels = model.num_labels();
  Eigen::MatrixXd alpha(n, labels);
  alpha.row(0) =
      emit.row(0) + model.transitions.row(model.start_index()).head(labels);
  Eigen::ArrayXd scratch(labels);
  for (int t = 1; t < n; ++t) {
    for (int to = 0; to < labels; ++to) {
      scratch = alpha.row(t - 1).transpose().array() +
                model.transitions.col(to).head(labels).array();
      alpha(t, to) = log_sum_exp(scratch) + emit(t, to);
    }
  }
  return alpha;
}

// beta(t, l) = log sum of scores of all legal suffixes starting after t,
// given label l at t (includes the transition into stop).
Eigen::MatrixXd backward_table(const CrfModel& model,
                               const Eigen::MatrixXd& emit) {
  const int n = static_cast<int>(emit.rows());
  const int labels = model.num_labels();
  Eigen::MatrixXd beta(n, labels);
  beta.row(n - 1) =
      model.transitions.col(model.stop_index()).head(labels).transpose();
  Eigen::ArrayXd scratch(labels);
  for (int t = n - 2; t >= 0; --t) {
    for (int from = 0; from < labels; ++from) {
      scratch = model.transitions.row(from).head(labels).transpose().array() +
                emit.row(t + 1).transpose().array() +
                beta.row(t + 1).transpose().array();
      beta(t, from) = log_sum_exp(scratch);
    }
  }
  return beta;
}

}  // namespace

double log_partition(const CrfModel& model, const PreparedSentence& sentence) {
  const int n = sentence.size();
  if (n == 0) throw EmptySentenceError("cannot score an empty sentence");
  const Eigen::MatrixXd emit = emission_scores(model, sentence);
  const Eigen::MatrixXd alpha = forward_table(model, emit);
  const int labels = model.num_labels();
  const Eigen::ArrayXd final_scores =
      alpha.row(n - 1).transpose().array() +
      model.transitions.col(model.stop_index()).head(labels).array();
  return log_sum_exp(final_scores);
}

Marginals forward_backward(const CrfModel& model,
                           const PreparedSentence& sentence) {
  const int n = sentence.size();
  if (n == 0) throw EmptySentenceError("cannot score an empty sentence");
  const int labels = model.num_labels();
  const Eigen::MatrixXd emit = emission_scores(model, sentence);
  const Eigen::MatrixXd alpha = forward_table(model, emit);
  const Eigen::MatrixXd beta = backward_table(model, emit);

  Marginals out;
  {
    const Eigen::ArrayXd final_scores =
        alpha.row(n - 1).transpose().array() +
        model.transitions.col(model.stop_index()).head(labels).array();
    out.log_z = log_sum_exp(final_scores);
  }

  out.node = Eigen::MatrixXd::Zero(n, labels);
  for (int t = 0; t < n; ++t) {
    for (int l = 0; l < labels; ++l) {
      const double log_p = alpha(t, l) + beta(t, l) - out.log_z;
      out.node(t, l) = log_p == kNegInf ? 0.0 : std::exp(log_p);
    }
  }

  out.edge.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
  for (int t = 1; t < n; ++t) {
    Eigen::MatrixXd edge = Eigen::MatrixXd::Zero(labels, labels);
    for (int from = 0; from < labels; ++from) {
      for (int to = 0; to < labels; ++to) {
        const double trans = model.transitions(from, to);
        if (trans == kNegInf) continue;
        const double log_p = alpha(t - 1, from) + trans + emit(t, to) +
                             beta(t, to) - out.log_z;
        edge(from, to) = log_p == kNegInf ? 0.0 : std::exp(log_p);
      }
    }
    out.edge.push_back(std::move(edge));
  }
  return out;
}

}  // namespace spantag
