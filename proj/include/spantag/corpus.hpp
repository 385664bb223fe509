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

#ifndef SPANTAG_CORPUS_HPP_
#define SPANTAG_CORPUS_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spantag/span_types.hpp"
#include "spantag/text.hpp"

namespace spantag {

struct RawDocument {
  std::string doc_id;
  std::string text;
};

struct CorpusStats {
  long token_count = 0;       // all tokens, punctuation included
  long word_token_count = 0;  // punctuation excluded
  long vocabulary_size = 0;   // distinct lowercased tokens under the filter
  long sentence_count = 0;
  double mean_sentence_length = 0.0;     // word tokens per sentence
  double std_dev_sentence_length = 0.0;  // population standard deviation
  std::string token_filter;  // states the filter the numbers were computed with
};

struct StatsConfig {
  // When true, punctuation tokens also count towards the vocabulary.
  bool vocab_include_punctuation = false;
  SplitterConfig splitter = SplitterConfig::defaults();
};

CorpusStats corpus_stats(const std::vector<RawDocument>& documents,
                         const StatsConfig& config = StatsConfig{});

// Vocabulary size sampled every `step` word tokens over the documents in
// order; the final point always covers the whole corpus, so its second
// coordinate equals corpus_stats' vocabulary_size.
std::vector<std::pair<long, long>> vocab_growth(
    const std::vector<RawDocument>& documents, long step,
    const StatsConfig& config = StatsConfig{});

// Key-value rendering of the stats ("token_count=...\n" ...).
std::string render_corpus_stats(const CorpusStats& stats);

struct DatasetSplit {
  std::vector<SentenceAnnotation> train;
  std::vector<SentenceAnnotation> dev;
  std::vector<SentenceAnnotation> test;
};

// Deterministic seeded shuffle, then floor-allocated sizes with the
// remainder going to train. Ratios must sum to 1.
DatasetSplit split_dataset(const std::vector<SentenceAnnotation>& annotations,
                           std::array<double, 3> ratios, std::uint64_t seed);

// Split manifests: one sentence id per line, one file per split.
void write_manifest(std::ostream& out,
                    const std::vector<SentenceAnnotation>& annotations);
std::vector<std::string> read_manifest(std::istream& in);

// Selects the listed sentences (in manifest order); an id with no matching
// annotation raises IoError.
std::vector<SentenceAnnotation> apply_manifest(
    const std::vector<SentenceAnnotation>& annotations,
    const std::vector<std::string>& ids);

}  // namespace spantag

#endif  // SPANTAG_CORPUS_HPP_
