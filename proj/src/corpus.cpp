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

#include "spantag/corpus.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "spantag/errors.hpp"

namespace spantag {

namespace {

constexpr const char* kWordFilterNote =
    "word tokens = tokens that are not pure punctuation; vocabulary and "
    "sentence lengths are computed over lowercased word tokens";

template <typename TokenFn>
void for_each_token(const std::vector<RawDocument>& documents,
                    const StatsConfig& config, TokenFn&& fn) {
  for (const RawDocument& doc : documents) {
    for (const CharRange& range :
         split_sentences(doc.text, config.splitter)) {
      const std::string_view sentence =
          std::string_view(doc.text).substr(range.start, range.end - range.start);
      const std::vector<Token> tokens = tokenize(sentence);
      fn(tokens);
    }
  }
}

}  // namespace

CorpusStats corpus_stats(const std::vector<RawDocument>& documents,
                         const StatsConfig& config) {
  CorpusStats stats;
  stats.token_filter = kWordFilterNote;
  std::unordered_set<std::string> vocab;
  double sum = 0.0;
  double sum_sq = 0.0;

  for_each_token(documents, config, [&](const std::vector<Token>& tokens) {
    ++stats.sentence_count;
    long words = 0;
    for (const Token& tok : tokens) {
      ++stats.token_count;
      const bool punct = is_punctuation_token(tok.surface);
      if (!punct) ++words;
      if (!punct || config.vocab_include_punctuation) {
        vocab.insert(ascii_lowercase(tok.surface));
      }
    }
    stats.word_token_count += words;
    sum += static_cast<double>(words);
    sum_sq += static_cast<double>(words) * static_cast<double>(words);
  });

  stats.vocabulary_size = static_cast<long>(vocab.size());
  if (stats.sentence_count > 0) {
    const double n = static_cast<double>(stats.sentence_count);
    stats.mean_sentence_length = sum / n;
    const double variance =
        std::max(0.0, sum_sq / n - stats.mean_sentence_length *
                                       stats.mean_sentence_length);
    stats.std_dev_sentence_length = std::sqrt(variance);
  }
  return stats;
}

std::vector<std::pair<long, long>> vocab_growth(
    const std::vector<RawDocument>& documents, long step,
    const StatsConfig& config) {
  if (step <= 0) throw InvalidArgumentError("growth step must be positive");
  std::vector<std::pair<long, long>> series;
  std::unordered_set<std::string> vocab;
  long seen = 0;

  for_each_token(documents, config, [&](const std::vector<Token>& tokens) {
    for (const Token& tok : tokens) {
      const bool punct = is_punctuation_token(tok.surface);
      if (punct && !config.vocab_include_punctuation) continue;
      ++seen;
      vocab.insert(ascii_lowercase(tok.surface));
      if (seen % step == 0) {
        series.emplace_back(seen, static_cast<long>(vocab.size()));
      }
    }
  });

  if (seen > 0 && (series.empty() || series.back().first != seen)) {
    series.emplace_back(seen, static_cast<long>(vocab.size()));
  }
  return series;
}

std::string render_corpus_stats(const CorpusStats& stats) {
  std::ostringstream out;
  out << "token_count=" << stats.token_count << '\n'
      << "word_token_count=" << stats.word_token_count << '\n'
      << "vocabulary_size=" << stats.vocabulary_size << '\n'
      << "sentence_count=" << stats.sentence_count << '\n'
      << "mean_sentence_length=" << stats.mean_sentence_length << '\n'
      << "std_dev_sentence_length=" << stats.std_dev_sentence_length << '\n'
      << "token_filter=" << stats.token_filter << '\n';
  return out.str();
}

DatasetSplit split_dataset(const std::vector<SentenceAnnotation>& annotations,
                           std::array<double, 3> ratios, std::uint64_t seed) {
  if (annotations.empty()) throw EmptyDatasetError("no annotations to split");
  const double total = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidArgumentError("split ratios must sum to 1");
  }

  // Explicit Fisher-Yates so the shuffle does not depend on the standard
  // library's std::shuffle implementation.
  std::vector<size_t> order(annotations.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (size_t i = order.size() - 1; i > 0; --i) {
    const size_t j = static_cast<size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  const long n = static_cast<long>(annotations.size());
  const long dev_size = static_cast<long>(std::floor(ratios[1] * n));
  const long test_size = static_cast<long>(std::floor(ratios[2] * n));
  const long train_size = n - dev_size - test_size;  // remainder to train

  DatasetSplit split;
  for (long i = 0; i < n; ++i) {
    const SentenceAnnotation& ann = annotations[order[i]];
    if (i < train_size) {
      split.train.push_back(ann);
    } else if (i < train_size + dev_size) {
      split.dev.push_back(ann);
    } else {
      split.test.push_back(ann);
    }
  }
  return split;
}

void write_manifest(std::ostream& out,
                    const std::vector<SentenceAnnotation>& annotations) {
  for (const SentenceAnnotation& ann : annotations) {
    out << ann.sentence_id << '\n';
  }
}

std::vector<std::string> read_manifest(std::istream& in) {
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    ids.push_back(line);
  }
  return ids;
}

std::vector<SentenceAnnotation> apply_manifest(
    const std::vector<SentenceAnnotation>& annotations,
    const std::vector<std::string>& ids) {
  std::unordered_map<std::string, const SentenceAnnotation*> by_id;
  for (const SentenceAnnotation& ann : annotations) {
    by_id[ann.sentence_id] = &ann;
  }
  std::vector<SentenceAnnotation> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw IoError("manifest id '" + id + "' not present in the dataset");
    }
    out.push_back(*it->second);
  }
  return out;
}

}  // namespace spantag
