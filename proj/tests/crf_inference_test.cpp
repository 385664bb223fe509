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

#include "spantag/crf_inference.hpp"
#include "spantag/errors.hpp"
#include "support/gen.hpp"

using namespace spantag;
using namespace spantag::testing;

TEST_CASE("the legality mask matches the tag semantics") {
  const auto tagset = TagsetConfig::default_12();
  REQUIRE(tagset.num_labels() == 12);
  const int bh_obj = tagset.label_index(*parse_label("BH-obj"));
  const int ih_obj = tagset.label_index(*parse_label("IH-obj"));
  const int bd_obj = tagset.label_index(*parse_label("BD-obj"));
  const int id_obj = tagset.label_index(*parse_label("ID-obj"));
  const int bh_dis = tagset.label_index(*parse_label("BH-dis"));

  CHECK(tagset.start_allowed(bh_obj));
  CHECK(tagset.start_allowed(bd_obj));
  CHECK(!tagset.start_allowed(ih_obj));
  CHECK(!tagset.start_allowed(id_obj));

  CHECK(tagset.transition_allowed(bh_obj, ih_obj));
  CHECK(tagset.transition_allowed(ih_obj, ih_obj));
  CHECK(!tagset.transition_allowed(bh_dis, ih_obj));
  CHECK(!tagset.transition_allowed(bd_obj, ih_obj));
  CHECK(tagset.transition_allowed(bd_obj, id_obj));
  CHECK(tagset.transition_allowed(id_obj, id_obj));
  CHECK(!tagset.transition_allowed(bh_obj, id_obj));
  CHECK(tagset.transition_allowed(bh_dis, bd_obj));
  CHECK(tagset.transition_allowed(ih_obj, bh_dis));

  // BD/ID for Discourse and Functional do not exist in the 12-label set.
  CHECK(tagset.label_index(TagLabel{TagPosition::BD,
                                    SpanCategory::Discourse}) == -1);

  // Every label has out-degree 7 under the 12-label mask, and 6 labels may
  // start a sequence: 6 * 7^(L-1) legal sequences.
  CHECK(count_legal_sequences(tagset, 1) == 6);
  CHECK(count_legal_sequences(tagset, 2) == 42);
  CHECK(count_legal_sequences(tagset, 3) == 294);
}

TEST_CASE("all-zero weights give all-zero emission scores") {
  std::mt19937_64 rng(1);
  const auto tagset = TagsetConfig::default_12();
  CrfModel model = random_model(rng, tagset, 10, 0.0);
  const PreparedSentence sentence = random_prepared(rng, model, 4, 3);
  CHECK(emission_scores(model, sentence).isZero());
}

TEST_CASE("emission scores are additive over active features") {
  const auto tagset = TagsetConfig::default_12();
  CrfModel model = CrfModel::make(tagset, FeatureTemplateConfig::all(),
                                  {"f0", "f1"});
  model.emission_weights(0, 3) = 2.5;
  model.emission_weights(1, 3) = -1.0;
  PreparedSentence sentence;
  sentence.feature_ids = {{0}, {0, 1}};
  const Eigen::MatrixXd scores = emission_scores(model, sentence);
  CHECK(scores(0, 3) == doctest::Approx(2.5));
  CHECK(scores(1, 3) == doctest::Approx(1.5));
  CHECK(scores(0, 0) == 0.0);
}

TEST_CASE("emission scores are deterministic") {
  std::mt19937_64 rng(2);
  const auto tagset = TagsetConfig::default_12();
  const CrfModel model = random_model(rng, tagset, 40);
  const PreparedSentence sentence = random_prepared(rng, model, 6, 4);
  const Eigen::MatrixXd a = emission_scores(model, sentence);
  const Eigen::MatrixXd b = emission_scores(model, sentence);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single-token viterbi picks the best legal start label") {
  std::mt19937_64 rng(3);
  const auto tagset = TagsetConfig::default_12();
  CrfModel model = random_model(rng, tagset, 4, 0.0);
  const int bh_dis = tagset.label_index(*parse_label("BH-dis"));
  const int ih_obj = tagset.label_index(*parse_label("IH-obj"));
  model.emission_weights(0, bh_dis) = 1.0;
  model.emission_weights(0, ih_obj) = 50.0;  // illegal start, must lose
  PreparedSentence sentence;
  sentence.feature_ids = {{0}};
  const ViterbiResult result = viterbi_decode(model, sentence);
  REQUIRE(result.labels.size() == 1);
  CHECK(result.labels[0] == bh_dis);
}

TEST_CASE("viterbi and log-partition match brute force on short sentences") {
  std::mt19937_64 rng(20260810);
  const auto tagset = TagsetConfig::default_12();
  for (int trial = 0; trial < 40; ++trial) {
    const CrfModel model = random_model(rng, tagset, 15);
    const int length = 1 + static_cast<int>(rng() % 5);
    const PreparedSentence sentence =
        random_prepared(rng, model, length, 3);
    const BruteForceResult expected = brute_force(model, sentence);

    const ViterbiResult viterbi = viterbi_decode(model, sentence);
    CHECK(viterbi.labels == expected.argmax);
    CHECK(viterbi.score ==
          doctest::Approx(expected.max_score).epsilon(1e-10));

    const double log_z = log_partition(model, sentence);
    CHECK(std::abs(log_z - expected.log_partition) <=
          1e-8 * std::abs(expected.log_partition));
    CHECK(log_z >= viterbi.score - 1e-12);  // sum dominates max
  }
}

TEST_CASE("zero model log-partition counts the legal sequences") {
  std::mt19937_64 rng(6);
  const auto tagset = TagsetConfig::default_12();
  const CrfModel model = random_model(rng, tagset, 5, 0.0);
  for (int length = 1; length <= 5; ++length) {
    const PreparedSentence sentence = random_prepared(rng, model, length, 2);
    const double expected =
        std::log(static_cast<double>(count_legal_sequences(tagset, length)));
    CHECK(log_partition(model, sentence) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("decoded sequences never violate the mask") {
  std::mt19937_64 rng(8);
  const auto tagset = TagsetConfig::default_12();
  for (int trial = 0; trial < 300; ++trial) {
    const CrfModel model = random_model(rng, tagset, 12, 2.0);
    const int length = 1 + static_cast<int>(rng() % 10);
    const PreparedSentence sentence = random_prepared(rng, model, length, 3);
    const ViterbiResult result = viterbi_decode(model, sentence);
    CHECK(tagset.start_allowed(result.labels[0]));
    for (size_t t = 1; t < result.labels.size(); ++t) {
      CHECK(tagset.transition_allowed(result.labels[t - 1],
                                      result.labels[t]));
    }
  }
}

TEST_CASE("adding a constant to one token's emissions shifts scores by it") {
  std::mt19937_64 rng(9);
  const auto tagset = TagsetConfig::default_12();
  CrfModel model = random_model(rng, tagset, 10);
  // A feature active on exactly one token shifts that token's emissions.
  PreparedSentence sentence = random_prepared(rng, model, 5, 2);
  const ViterbiResult before = viterbi_decode(model, sentence);
  const double z_before = log_partition(model, sentence);

  const double constant = 3.75;
  CrfModel shifted = model;
  shifted.emission_weights.conservativeResize(model.num_features() + 1,
                                              model.num_labels());
  shifted.emission_weights.row(model.num_features()).setConstant(constant);
  PreparedSentence shifted_sentence = sentence;
  shifted_sentence.feature_ids[2].push_back(model.num_features());

  const ViterbiResult after = viterbi_decode(shifted, shifted_sentence);
  const double z_after = log_partition(shifted, shifted_sentence);
  CHECK(after.labels == before.labels);
  CHECK(after.score == doctest::Approx(before.score + constant));
  CHECK(z_after == doctest::Approx(z_before + constant));
}

TEST_CASE("node marginals sum to one at every position") {
  std::mt19937_64 rng(10);
  const auto tagset = TagsetConfig::default_12();
  for (int trial = 0; trial < 25; ++trial) {
    const CrfModel model = random_model(rng, tagset, 14);
    const int length = 1 + static_cast<int>(rng() % 7);
    const PreparedSentence sentence = random_prepared(rng, model, length, 3);
    const Marginals marginals = forward_backward(model, sentence);
    for (int t = 0; t < length; ++t) {
      CHECK(std::abs(marginals.node.row(t).sum() - 1.0) <= 1e-10);
    }
    // Edge marginals are consistent with node marginals.
    for (int t = 1; t < length; ++t) {
      const Eigen::VectorXd to_sum = marginals.edge[t - 1].colwise().sum();
      for (int l = 0; l < model.num_labels(); ++l) {
        CHECK(std::abs(to_sum(l) - marginals.node(t, l)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("empty sentences are rejected") {
  std::mt19937_64 rng(11);
  const CrfModel model = random_model(rng, TagsetConfig::default_12(), 5);
  PreparedSentence empty;
  CHECK_THROWS_AS(viterbi_decode(model, empty), EmptySentenceError);
  CHECK_THROWS_AS(log_partition(model, empty), EmptySentenceError);
}

TEST_CASE("external vectors require a matching projection") {
  std::mt19937_64 rng(12);
  CrfModel model = random_model(rng, TagsetConfig::default_12(), 5);
  CHECK_THROWS_AS(
      prepare_sentence(model, {"a", "b"}, Eigen::MatrixXd::Zero(2, 3)),
      DimensionMismatchError);
  model.projection = Eigen::MatrixXd::Zero(3, model.num_labels());
  CHECK_NOTHROW(
      prepare_sentence(model, {"a", "b"}, Eigen::MatrixXd::Zero(2, 3)));
  CHECK_THROWS_AS(
      prepare_sentence(model, {"a", "b"}, Eigen::MatrixXd::Zero(2, 4)),
      DimensionMismatchError);
}

TEST_CASE("projection contributes to emissions") {
  std::mt19937_64 rng(13);
  CrfModel model = random_model(rng, TagsetConfig::default_12(), 5, 0.0);
  model.projection = Eigen::MatrixXd::Zero(2, model.num_labels());
  (*model.projection)(0, 4) = 2.0;
  (*model.projection)(1, 4) = -0.5;
  Eigen::MatrixXd vectors(1, 2);
  vectors << 3.0, 2.0;
  const PreparedSentence sentence =
      prepare_sentence(model, {"roof"}, vectors);
  const Eigen::MatrixXd scores = emission_scores(model, sentence);
  CHECK(scores(0, 4) == doctest::Approx(5.0));
}
