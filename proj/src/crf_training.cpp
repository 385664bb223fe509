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

#include "spantag/crf_training.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <sstream>

#include "spantag/codec.hpp"
#include "spantag/errors.hpp"
#include "spantag/metrics.hpp"

namespace spantag {

CrfGradient CrfGradient::zeros_like(const CrfModel& model) {
  CrfGradient grad;
  grad.emission = Eigen::MatrixXd::Zero(model.emission_weights.rows(),
                                        model.emission_weights.cols());
  grad.transitions =
      Eigen::MatrixXd::Zero(model.transitions.rows(), model.transitions.cols());
  if (model.projection) {
    grad.projection = Eigen::MatrixXd::Zero(model.projection->rows(),
                                            model.projection->cols());
  }
  return grad;
}

void CrfGradient::add(const CrfGradient& other) {
  emission += other.emission;
  transitions += other.transitions;
  if (projection) *projection += *other.projection;
}

double CrfGradient::squared_norm() const {
  double norm = emission.squaredNorm() + transitions.squaredNorm();
  if (projection) norm += projection->squaredNorm();
  return norm;
}

void CrfGradient::scale(double factor) {
  emission *= factor;
  transitions *= factor;
  if (projection) *projection *= factor;
}

namespace {

// Path score of the gold sequence; validates mask legality.
double gold_score(const CrfModel& model, const TrainingExample& example,
                  const Eigen::MatrixXd& emit) {
  const int n = example.sentence.size();
  const auto& gold = example.gold;
  if (static_cast<int>(gold.size()) != n) {
    throw IllegalGoldSequenceError("gold length does not match sentence");
  }
  if (!model.tagset.start_allowed(gold[0])) {
    throw IllegalGoldSequenceError(
        "gold sequence starts with " +
        label_name(model.tagset.label(gold[0])));
  }
  double score = model.transitions(model.start_index(), gold[0]) + emit(0, gold[0]);
  for (int t = 1; t < n; ++t) {
    if (!model.tagset.transition_allowed(gold[t - 1], gold[t])) {
      throw IllegalGoldSequenceError(
          "gold transition " + label_name(model.tagset.label(gold[t - 1])) +
          " -> " + label_name(model.tagset.label(gold[t])) + " is forbidden");
    }
    score += model.transitions(gold[t - 1], gold[t]) + emit(t, gold[t]);
  }
  score += model.transitions(gold[n - 1], model.stop_index());
  return score;
}

// Data term for one sentence: log Z - gold score, expected minus empirical
// counts accumulated into `grad`.
double accumulate_example(const CrfModel& model, const TrainingExample& example,
                          CrfGradient* grad) {
  if (example.sentence.size() == 0) {
    throw EmptySentenceError("cannot train on an empty sentence");
  }
  const Eigen::MatrixXd emit = emission_scores(model, example.sentence);
  const double gold = gold_score(model, example, emit);
  const Marginals marg = forward_backward(model, example.sentence);
  const int n = example.sentence.size();
  const int start = model.start_index();
  const int stop = model.stop_index();

  for (int t = 0; t < n; ++t) {
    // Emission gradient: expected occupancy minus the gold one-hot, spread
    // over the active features (and the external projection if present).
    Eigen::RowVectorXd diff = marg.node.row(t);
    diff(example.gold[t]) -= 1.0;
    for (int id : example.sentence.feature_ids[t]) {
      grad->emission.row(id) += diff;
    }
    if (example.sentence.external) {
      grad->projection->noalias() +=
          example.sentence.external->row(t).transpose() * diff;
    }
  }

  grad->transitions.row(start).head(model.num_labels()) += marg.node.row(0);
  grad->transitions(start, example.gold[0]) -= 1.0;
  grad->transitions.col(stop).head(model.num_labels()) +=
      marg.node.row(n - 1).transpose();
  grad->transitions(example.gold[n - 1], stop) -= 1.0;
  for (int t = 1; t < n; ++t) {
    grad->transitions.topLeftCorner(model.num_labels(), model.num_labels()) +=
        marg.edge[t - 1];
    grad->transitions(example.gold[t - 1], example.gold[t]) -= 1.0;
  }

  return marg.log_z - gold;
}

// Sum of squares over the trainable parameters (finite transition entries
// only; the -inf mask entries are not parameters).
double weights_squared_norm(const CrfModel& model) {
  double norm = model.emission_weights.squaredNorm();
  for (Eigen::Index i = 0; i < model.transitions.rows(); ++i) {
    for (Eigen::Index j = 0; j < model.transitions.cols(); ++j) {
      const double w = model.transitions(i, j);
      if (w != kNegInf) norm += w * w;
    }
  }
  if (model.projection) norm += model.projection->squaredNorm();
  return norm;
}

void add_l2(const CrfModel& model, double l2, LossAndGradient* out) {
  if (l2 == 0.0) return;
  out->loss += l2 * weights_squared_norm(model);
  out->gradient.emission += 2.0 * l2 * model.emission_weights;
  for (Eigen::Index i = 0; i < model.transitions.rows(); ++i) {
    for (Eigen::Index j = 0; j < model.transitions.cols(); ++j) {
      const double w = model.transitions(i, j);
      if (w != kNegInf) out->gradient.transitions(i, j) += 2.0 * l2 * w;
    }
  }
  if (model.projection) {
    *out->gradient.projection += 2.0 * l2 * *model.projection;
  }
}

}  // namespace

LossAndGradient nll_and_gradient(const CrfModel& model,
                                 const std::vector<TrainingExample>& batch,
                                 double l2_strength, int threads) {
  LossAndGradient out;
  out.gradient = CrfGradient::zeros_like(model);

  if (threads <= 1 || batch.size() < 2) {
    for (const TrainingExample& example : batch) {
      out.loss += accumulate_example(model, example, &out.gradient);
    }
  } else {
    // Fixed chunking and merge order keep the result reproducible for a
    // given thread count; the summation order differs from the serial path.
    const int chunks = std::min<int>(threads, static_cast<int>(batch.size()));
    std::vector<std::future<LossAndGradient>> futures;
    futures.reserve(chunks);
    for (int c = 0; c < chunks; ++c) {
      futures.push_back(std::async(std::launch::async, [&, c]() {
        LossAndGradient part;
        part.gradient = CrfGradient::zeros_like(model);
        for (size_t i = c; i < batch.size(); i += chunks) {
          part.loss += accumulate_example(model, batch[i], &part.gradient);
        }
        return part;
      }));
    }
    for (auto& future : futures) {
      LossAndGradient part = future.get();
      out.loss += part.loss;
      out.gradient.add(part.gradient);
    }
  }

  add_l2(model, l2_strength, &out);
  return out;
}

namespace {

struct EncodedSentence {
  std::vector<std::string> surfaces;
  std::vector<int> gold;
};

std::vector<EncodedSentence> encode_set(
    const std::vector<SentenceAnnotation>& annotations,
    const TagsetConfig& tagset) {
  std::vector<EncodedSentence> out;
  out.reserve(annotations.size());
  for (const SentenceAnnotation& ann : annotations) {
    EncodedSentence enc;
    enc.surfaces.reserve(ann.tokens.size());
    for (const Token& tok : ann.tokens) enc.surfaces.push_back(tok.surface);
    const TagSequence tags = encode_tags(ann, tagset);
    enc.gold.reserve(tags.labels.size());
    for (TagLabel label : tags.labels) {
      enc.gold.push_back(tagset.label_index(label));
    }
    out.push_back(std::move(enc));
  }
  return out;
}

void apply_update(CrfModel* model, const CrfGradient& grad, double lr) {
  model->emission_weights -= lr * grad.emission;
  for (Eigen::Index i = 0; i < model->transitions.rows(); ++i) {
    for (Eigen::Index j = 0; j < model->transitions.cols(); ++j) {
      if (model->transitions(i, j) != kNegInf) {
        model->transitions(i, j) -= lr * grad.transitions(i, j);
      }
    }
  }
  if (model->projection) *model->projection -= lr * *grad.projection;
}

double dev_weighted_f1(const CrfModel& model,
                       const std::vector<EncodedSentence>& dev,
                       const TagsetConfig& tagset) {
  std::vector<TagSequence> gold;
  std::vector<TagSequence> pred;
  for (size_t s = 0; s < dev.size(); ++s) {
    const std::string id = "dev_" + std::to_string(s);
    TagSequence g;
    g.sentence_id = id;
    for (int l : dev[s].gold) g.labels.push_back(tagset.label(l));
    gold.push_back(std::move(g));
    pred.push_back(viterbi_tags(model, id, dev[s].surfaces));
  }
  return tag_classification_report(gold, pred, tagset).weighted.f1;
}

}  // namespace

TrainResult train(const std::vector<SentenceAnnotation>& train_set,
                  const std::vector<SentenceAnnotation>& dev_set,
                  const TagsetConfig& tagset,
                  const FeatureTemplateConfig& features,
                  const TrainConfig& config) {
  config.validate();
  if (train_set.empty()) throw EmptyDatasetError("empty training set");

  const std::vector<EncodedSentence> train_enc = encode_set(train_set, tagset);
  const std::vector<EncodedSentence> dev_enc = encode_set(dev_set, tagset);

  // Feature vocabulary in deterministic first-seen order.
  std::vector<std::string> vocabulary;
  {
    std::unordered_map<std::string, int> seen;
    for (const EncodedSentence& sent : train_enc) {
      for (int t = 0; t < static_cast<int>(sent.surfaces.size()); ++t) {
        for (std::string& f : extract_features(sent.surfaces, t, features)) {
          if (seen.emplace(f, 1).second) vocabulary.push_back(std::move(f));
        }
      }
    }
  }

  CrfModel model = CrfModel::make(tagset, features, std::move(vocabulary));
  model.meta.seed = config.seed;
  model.meta.toolkit_version = "spantag-0.1.0";
  {
    std::ostringstream digest;
    digest << "epochs=" << config.epochs << ";lr=" << config.learning_rate
           << ";l2=" << config.l2_strength << ";batch=" << config.batch_size
           << ";dropout=" << config.feature_dropout
           << ";features=" << features.bits();
    model.meta.config_digest = digest.str();
  }

  std::vector<TrainingExample> prepared;
  prepared.reserve(train_enc.size());
  for (const EncodedSentence& sent : train_enc) {
    TrainingExample example;
    example.sentence = prepare_sentence(model, sent.surfaces);
    example.gold = sent.gold;
    prepared.push_back(std::move(example));
  }

  std::mt19937_64 rng(config.seed);
  std::vector<size_t> order(prepared.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  TrainResult result;
  result.model = model;
  double best_metric = kNegInf;

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (size_t i = order.size() - 1; i > 0; --i) {
      const size_t j = static_cast<size_t>(rng() % (i + 1));
      std::swap(order[i], order[j]);
    }

    double epoch_loss = 0.0;
    for (size_t begin = 0; begin < order.size();
         begin += static_cast<size_t>(config.batch_size)) {
      const size_t end = std::min(
          order.size(), begin + static_cast<size_t>(config.batch_size));
      std::vector<TrainingExample> batch;
      batch.reserve(end - begin);
      for (size_t i = begin; i < end; ++i) {
        batch.push_back(prepared[order[i]]);
      }
      if (config.feature_dropout > 0.0) {
        for (TrainingExample& example : batch) {
          for (auto& ids : example.sentence.feature_ids) {
            std::vector<int> kept;
            kept.reserve(ids.size());
            for (int id : ids) {
              const double u =
                  static_cast<double>(rng()) /
                  static_cast<double>(std::mt19937_64::max());
              if (u >= config.feature_dropout) kept.push_back(id);
            }
            ids = std::move(kept);
          }
        }
      }

      LossAndGradient lg = nll_and_gradient(model, batch, config.l2_strength,
                                            config.threads);
      if (config.gradient_clip) {
        const double norm = std::sqrt(lg.gradient.squared_norm());
        if (norm > *config.gradient_clip) {
          lg.gradient.scale(*config.gradient_clip / norm);
        }
      }
      apply_update(&model, lg.gradient, config.learning_rate);
      epoch_loss += lg.loss;
    }

    EpochRecord record;
    record.epoch = epoch;
    record.train_nll = epoch_loss;
    record.dev_weighted_f1 =
        dev_enc.empty() ? 0.0 : dev_weighted_f1(model, dev_enc, tagset);
    result.history.push_back(record);

    const double metric =
        dev_enc.empty() ? -epoch_loss : record.dev_weighted_f1;
    if (metric > best_metric) {
      best_metric = metric;
      result.model = model;
      result.best_epoch = epoch;
    }
  }
  return result;
}

}  // namespace spantag
