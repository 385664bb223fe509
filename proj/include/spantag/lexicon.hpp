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

#ifndef SPANTAG_LEXICON_HPP_
#define SPANTAG_LEXICON_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "spantag/span_types.hpp"
#include "spantag/tagged_io.hpp"

namespace spantag {

struct NormalizeConfig {
  // Strip a final 's' from every token unless it ends in "ss" or has at
  // most three characters. Off by default; coverage evaluation turns it on.
  bool plural_folding = false;
};

// Lowercases, drops a single leading determiner (the/a/an, kept when the
// span is nothing but the determiner), optionally folds plurals, joins
// tokens with single spaces. Head and tail of a discontiguous span join
// the same way. Idempotent; EmptySpanError on an empty token list.
std::string normalize_span(const std::vector<std::string>& tokens,
                           const NormalizeConfig& config = NormalizeConfig{});

// Convenience: splits on whitespace first (surface forms, defined terms).
std::string normalize_form(std::string_view text,
                           const NormalizeConfig& config = NormalizeConfig{});

struct SpanOccurrence {
  std::string sentence_id;
  std::string surface;  // whitespace-collapsed
  int char_start = 0;   // head segment offsets into the sentence
  int char_end = 0;
  bool discontiguous = false;
};

struct LexiconEntry {
  std::string normalized_form;
  std::map<std::string, long> surface_variants;  // surface -> frequency
  long total_frequency = 0;
  long discontiguous_count = 0;
  std::vector<SpanOccurrence> occurrences;
};

// Aggregates the spans of one category (Object by default) across tagged
// sentence records into one entry per normalized form, ordered by
// descending frequency, then lexicographically.
std::vector<LexiconEntry> build_lexicon(
    const std::vector<SpanRecord>& tagged,
    SpanCategory category = SpanCategory::Object,
    const NormalizeConfig& normalize = NormalizeConfig{});

// Tab-separated export: normalized form, total frequency, discontiguous
// count, '|'-joined surface variants. Leading '#' lines carry the header.
void write_lexicon(std::ostream& out, const std::vector<LexiconEntry>& entries,
                   const std::vector<std::string>& header_lines = {});
// Reads the export back (without occurrences).
std::vector<LexiconEntry> read_lexicon(std::istream& in);

struct JudgementTask {
  std::string task_id;
  std::string object_surface;
  std::string sentence_id;
  std::string sentence_text;
  int span_start = 0;  // character offsets into sentence_text
  int span_end = 0;
  std::array<std::string, 3> label_choices;
};

inline constexpr std::array<const char*, 3> kJudgementLabels = {
    "exact match", "partial match", "not an object"};

// Samples n distinct eligible lexicon entries uniformly (seeded), then one
// eligible occurrence sentence per entry, and shuffles the output order.
// Entries whose normalized form matches an excluded term, and occurrences
// in excluded sentences, are never sampled. NotEnoughEligibleError when
// fewer than n entries qualify.
std::vector<JudgementTask> sample_for_judgement(
    const std::vector<LexiconEntry>& lexicon,
    const std::vector<SpanRecord>& corpus, long n, std::uint64_t seed,
    const std::unordered_set<std::string>& excluded_forms = {},
    const std::unordered_set<std::string>& excluded_sentence_ids = {});

void write_judgement_tasks(std::ostream& out,
                           const std::vector<JudgementTask>& tasks);

}  // namespace spantag

#endif  // SPANTAG_LEXICON_HPP_
