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

#include <doctest.h>

#include <cmath>
#include <random>

#include "spantag/codec.hpp"
#include "spantag/crf_training.hpp"
#include "spantag/errors.hpp"
#include "support/gen.hpp"

using namespace spantag;
using namespace spantag::testing;

namespace {

// A random mask-legal gold sequence, drawn by walking the legality graph.
std::vector<int> random_gold(std::mt19937_64& rng, const TagsetConfig& tagset,
                             int length) {
  std::vector<int> gold;
  gold.reserve(static_cast<size_t>(length));
  for (int t = 0; t < length; ++t) {
    std::vector<int> legal;
    for (int l = 0; l < tagset.num_labels(); ++l) {
      const bool ok = t == 0 ? tagset.start_allowed(l)
                             : tagset.transition_allowed(gold.back(), l);
      if (ok) legal.push_back(l);
    }
    gold.push_back(legal[rng() % legal.size()]);
  }
  return gold;
}

TrainingExample random_example(std::mt19937_64& rng, const CrfModel& model,
                               int length, int features_per_token) {
  TrainingExample example;
  example.sentence = random_prepared(rng, model, length, features_per_token);
  example.gold = random_gold(rng, model.tagset, length);
  return example;
}

double loss_only(const CrfModel& model,
                 const std::vector<TrainingExample>& batch, double l2) {
  return nll_and_gradient(model, batch, l2).loss;
}

}  // namespace

TEST_CASE("zero model loss equals log of the legal sequence count") {
  std::mt19937_64 rng(21);
  const auto tagset = TagsetConfig::default_12();
  const CrfModel model = random_model(rng, tagset, 8, 0.0);
  const int length = 4;
  std::vector<TrainingExample> batch = {
      random_example(rng, model, length, 2)};
  const double expected =
      std::log(static_cast<double>(count_legal_sequences(tagset, length)));
  CHECK(loss_only(model, batch, 0.0) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("duplicating a sentence doubles the data term") {
  std::mt19937_64 rng(22);
  const auto tagset = TagsetConfig::default_12();
  const CrfModel model = random_model(rng, tagset, 12);
  const TrainingExample example = random_example(rng, model, 5, 3);
  const LossAndGradient single = nll_and_gradient(model, {example}, 0.0);
  const LossAndGradient twice =
      nll_and_gradient(model, {example, example}, 0.0);
  CHECK(twice.loss == doctest::Approx(2.0 * single.loss).epsilon(1e-12));
  CHECK((twice.gradient.emission - 2.0 * single.gradient.emission)
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  CHECK((twice.gradient.transitions - 2.0 * single.gradient.transitions)
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
}

TEST_CASE("illegal gold sequences are rejected") {
  std::mt19937_64 rng(23);
  const auto tagset = TagsetConfig::default_12();
  const CrfModel model = random_model(rng, tagset, 6);
  TrainingExample example;
  example.sentence = random_prepared(rng, model, 2, 2);
  example.gold = {tagset.label_index(*parse_label("IH-obj")),
                  tagset.label_index(*parse_label("IH-obj"))};
  CHECK_THROWS_AS(nll_and_gradient(model, {example}, 0.0),
                  IllegalGoldSequenceError);
  example.gold = {tagset.label_index(*parse_label("BH-dis")),
                  tagset.label_index(*parse_label("ID-obj"))};
  CHECK_THROWS_AS(nll_and_gradient(model, {example}, 0.0),
                  IllegalGoldSequenceError);
}

TEST_CASE("analytic gradients match central finite differences") {
  std::mt19937_64 rng(24);
  const auto tagset = TagsetConfig::default_12();
  const double eps = 1e-5;
  for (int trial = 0; trial < 3; ++trial) {
    CrfModel model = random_model(rng, tagset, 10);
    std::vector<TrainingExample> batch;
    for (int s = 0; s < 3; ++s) {
      batch.push_back(random_example(rng, model, 1 + (int)(rng() % 5), 3));
    }
    const double l2 = trial == 2 ? 0.01 : 0.0;
    const LossAndGradient analytic = nll_and_gradient(model, batch, l2);

    for (int coord = 0; coord < 6; ++coord) {
      const int r = static_cast<int>(rng() % model.num_features());
      const int c = static_cast<int>(rng() % model.num_labels());
      const double saved = model.emission_weights(r, c);
      model.emission_weights(r, c) = saved + eps;
      const double up = loss_only(model, batch, l2);
      model.emission_weights(r, c) = saved - eps;
      const double down = loss_only(model, batch, l2);
      model.emission_weights(r, c) = saved;
      const double numeric = (up - down) / (2.0 * eps);
      const double exact = analytic.gradient.emission(r, c);
      const double scale = std::max(1.0, std::abs(exact));
      CHECK(std::abs(numeric - exact) / scale <= 1e-4);
    }

    // A few legal transition coordinates, including start/stop.
    for (int coord = 0; coord < 6; ++coord) {
      int r = 0;
      int c = 0;
      do {
        r = static_cast<int>(rng() % (model.num_labels() + 1));
        c = static_cast<int>(rng() % (model.num_labels() + 1));
      } while (model.transitions(r, c) == kNegInf);
      const double saved = model.transitions(r, c);
      model.transitions(r, c) = saved + eps;
      const double up = loss_only(model, batch, l2);
      model.transitions(r, c) = saved - eps;
      const double down = loss_only(model, batch, l2);
      model.transitions(r, c) = saved;
      const double numeric = (up - down) / (2.0 * eps);
      const double exact = analytic.gradient.transitions(r, c);
      const double scale = std::max(1.0, std::abs(exact));
      CHECK(std::abs(numeric - exact) / scale <= 1e-4);
    }
  }
}

TEST_CASE("projection gradients match finite differences") {
  std::mt19937_64 rng(25);
  const auto tagset = TagsetConfig::default_12();
  CrfModel model = random_model(rng, tagset, 6);
  const int dim = 3;
  model.projection = Eigen::MatrixXd::Zero(dim, model.num_labels());
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < model.num_labels(); ++c) {
      (*model.projection)(r, c) = uniform01(rng) - 0.5;
    }
  }
  TrainingExample example = random_example(rng, model, 4, 2);
  Eigen::MatrixXd vectors(4, dim);
  for (Eigen::Index r = 0; r < 4; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      vectors(r, c) = uniform01(rng) * 2.0 - 1.0;
    }
  }
  example.sentence.external = vectors;

  const LossAndGradient analytic = nll_and_gradient(model, {example}, 0.0);
  const double eps = 1e-5;
  for (int coord = 0; coord < 8; ++coord) {
    const int r = static_cast<int>(rng() % dim);
    const int c = static_cast<int>(rng() % model.num_labels());
    const double saved = (*model.projection)(r, c);
    (*model.projection)(r, c) = saved + eps;
    const double up = loss_only(model, {example}, 0.0);
    (*model.projection)(r, c) = saved - eps;
    const double down = loss_only(model, {example}, 0.0);
    (*model.projection)(r, c) = saved;
    const double numeric = (up - down) / (2.0 * eps);
    const double exact = (*analytic.gradient.projection)(r, c);
    CHECK(std::abs(numeric - exact) / std::max(1.0, std::abs(exact)) <= 1e-4);
  }
}

TEST_CASE("forbidden transitions receive zero gradient") {
  std::mt19937_64 rng(26);
  const auto tagset = TagsetConfig::default_12();
  const CrfModel model = random_model(rng, tagset, 8);
  std::vector<TrainingExample> batch = {random_example(rng, model, 6, 3)};
  const LossAndGradient lg = nll_and_gradient(model, batch, 0.1);
  for (int r = 0; r < model.num_labels() + 1; ++r) {
    for (int c = 0; c < model.num_labels() + 1; ++c) {
      if (model.transitions(r, c) == kNegInf) {
        CHECK(lg.gradient.transitions(r, c) == 0.0);
      }
    }
  }
}

TEST_CASE("parallel gradient accumulation matches the serial path") {
  std::mt19937_64 rng(27);
  const auto tagset = TagsetConfig::default_12();
  const CrfModel model = random_model(rng, tagset, 10);
  std::vector<TrainingExample> batch;
  for (int s = 0; s < 7; ++s) {
    batch.push_back(random_example(rng, model, 1 + (int)(rng() % 6), 3));
  }
  const LossAndGradient serial = nll_and_gradient(model, batch, 0.0, 1);
  const LossAndGradient parallel = nll_and_gradient(model, batch, 0.0, 3);
  CHECK(parallel.loss == doctest::Approx(serial.loss).epsilon(1e-12));
  CHECK((parallel.gradient.emission - serial.gradient.emission)
            .cwiseAbs()
            .maxCoeff() <= 1e-10);
}

TEST_CASE("training memorizes a small tag-determined corpus") {
  const auto tagset = TagsetConfig::default_12();
  std::mt19937_64 rng(28);
  AnnotationGenOptions options;
  options.tag_determined_surfaces = true;
  options.min_tokens = 3;
  options.max_tokens = 10;
  std::vector<SentenceAnnotation> train_set;
  for (int i = 0; i < 24; ++i) {
    train_set.push_back(
        random_annotation(rng, tagset, "t" + std::to_string(i), options));
  }

  TrainConfig config;
  config.epochs = 40;
  config.learning_rate = 0.5;
  config.batch_size = 4;
  config.seed = 11;
  const TrainResult result =
      train(train_set, {}, tagset, FeatureTemplateConfig::word_identity(),
            config);

  // NLL decreases over training.
  CHECK(result.history.back().train_nll < result.history.front().train_nll);

  long correct = 0;
  long total = 0;
  for (const SentenceAnnotation& ann : train_set) {
    std::vector<std::string> surfaces;
    for (const Token& token : ann.tokens) surfaces.push_back(token.surface);
    const TagSequence gold = encode_tags(ann, tagset);
    const TagSequence pred =
        viterbi_tags(result.model, ann.sentence_id, surfaces);
    for (size_t t = 0; t < gold.labels.size(); ++t) {
      ++total;
      if (gold.labels[t] == pred.labels[t]) ++correct;
    }
  }
  CHECK(static_cast<double>(correct) / total >= 0.99);
}

TEST_CASE("the same seed reproduces the training history bitwise") {
  const auto tagset = TagsetConfig::default_12();
  std::mt19937_64 rng(29);
  std::vector<SentenceAnnotation> train_set;
  std::vector<SentenceAnnotation> dev_set;
  for (int i = 0; i < 8; ++i) {
    train_set.push_back(random_annotation(rng, tagset, "t" + std::to_string(i)));
  }
  for (int i = 0; i < 3; ++i) {
    dev_set.push_back(random_annotation(rng, tagset, "d" + std::to_string(i)));
  }
  TrainConfig config;
  config.epochs = 5;
  config.seed = 77;
  config.feature_dropout = 0.1;
  const TrainResult a = train(train_set, dev_set, tagset,
                              FeatureTemplateConfig::all(), config);
  const TrainResult b = train(train_set, dev_set, tagset,
                              FeatureTemplateConfig::all(), config);
  REQUIRE(a.history.size() == b.history.size());
  for (size_t e = 0; e < a.history.size(); ++e) {
    CHECK(a.history[e].train_nll == b.history[e].train_nll);
    CHECK(a.history[e].dev_weighted_f1 == b.history[e].dev_weighted_f1);
  }
  CHECK(a.best_epoch == b.best_epoch);
}

TEST_CASE("train config validation") {
  TrainConfig config;
  config.epochs = 0;
  CHECK_THROWS_AS(config.validate(), InvalidArgumentError);
  config = TrainConfig{};
  config.learning_rate = 0.0;
  CHECK_THROWS_AS(config.validate(), InvalidArgumentError);
  config = TrainConfig{};
  config.l2_strength = -1.0;
  CHECK_THROWS_AS(config.validate(), InvalidArgumentError);
  CHECK_NOTHROW(TrainConfig{}.validate());
}
