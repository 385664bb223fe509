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

#include <random>
#include <set>
#include <sstream>

#include "spantag/errors.hpp"
#include "spantag/lexicon.hpp"

using namespace spantag;

namespace {

SpanRecord record(const char* id, const char* text,
                  std::vector<std::pair<const char*, SpanCategory>> spans) {
  SpanRecord rec;
  rec.sentence_id = id;
  rec.text = text;
  int cursor = 0;
  for (const auto& [surface, category] : spans) {
    SpanRecordSpan span;
    span.category = category;
    span.surface = surface;
    const std::string s(surface);
    const auto at = rec.text.find(s);
    const int start = at == std::string::npos ? cursor : static_cast<int>(at);
    span.char_head = CharRange{start, start + static_cast<int>(s.size())};
    span.head = TokenRange{0, 1};
    rec.spans.push_back(std::move(span));
    cursor += static_cast<int>(s.size()) + 1;
  }
  return rec;
}

}  // namespace

TEST_CASE("normalize lowercases and strips one leading determiner") {
  CHECK(normalize_span({"the", "Target", "Emissions", "Rating"}) ==
        "target emissions rating");
  CHECK(normalize_span({"900mm"}) == "900mm");
  CHECK(normalize_span({"An", "exit"}) == "exit");
  // A lone determiner survives.
  CHECK(normalize_span({"the"}) == "the");
  CHECK_THROWS_AS(normalize_span({}), EmptySpanError);
}

TEST_CASE("plural folding strips a final s with the stated exceptions") {
  NormalizeConfig folding;
  folding.plural_folding = true;
  CHECK(normalize_span({"storage", "buildings"}, folding) ==
        "storage building");
  CHECK(normalize_span({"glass"}, folding) == "glass");  // ss kept
  CHECK(normalize_span({"gas"}, folding) == "gas");      // short kept
  CHECK(normalize_span({"walls"}, folding) == "wall");
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(51);
  const std::vector<std::string> words = {"The", "a",    "An",   "Roofs",
                                          "900mm", "glass", "walls", "door"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> tokens;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) tokens.push_back(words[rng() % words.size()]);
    for (bool folding : {false, true}) {
      NormalizeConfig config;
      config.plural_folding = folding;
      const std::string once = normalize_span(tokens, config);
      CHECK(normalize_form(once, config) == once);
    }
  }
}

TEST_CASE("build_lexicon merges surface variants under one normalized form") {
  const std::vector<SpanRecord> corpus = {
      record("s0", "the roof is tall",
             {{"the roof", SpanCategory::Object}}),
      record("s1", "Roof slopes", {{"Roof", SpanCategory::Object}}),
      record("s2", "a roof again", {{"a roof", SpanCategory::Object}}),
      record("s3", "should be maintained",
             {{"should be maintained", SpanCategory::Action}})};
  const auto entries = build_lexicon(corpus);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].normalized_form == "roof");
  CHECK(entries[0].total_frequency == 3);
  CHECK(entries[0].surface_variants.size() == 3);
  CHECK(entries[0].occurrences.size() == 3);
}

TEST_CASE("frequency conservation and ordering") {
  std::mt19937_64 rng(52);
  std::vector<SpanRecord> corpus;
  long object_spans = 0;
  const std::vector<const char*> forms = {"roof", "the roof", "wall",
                                          "door", "a door"};
  for (int s = 0; s < 60; ++s) {
    SpanRecord rec;
    rec.sentence_id = "s" + std::to_string(s);
    rec.text = "filler text";
    const int k = static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      SpanRecordSpan span;
      span.category = SpanCategory::Object;
      span.surface = forms[rng() % forms.size()];
      span.char_head = CharRange{0, 4};
      rec.spans.push_back(span);
      ++object_spans;
    }
    corpus.push_back(std::move(rec));
  }
  const auto entries = build_lexicon(corpus);
  long total = 0;
  long prev = std::numeric_limits<long>::max();
  std::set<std::string> seen;
  for (const LexiconEntry& entry : entries) {
    total += entry.total_frequency;
    CHECK(entry.total_frequency <= prev);
    prev = entry.total_frequency;
    CHECK(seen.insert(entry.normalized_form).second);
  }
  CHECK(total == object_spans);
  // Normalization is a surjection: never more entries than surfaces.
  CHECK(entries.size() <= forms.size());
}

TEST_CASE("lexicon file round-trips forms and counts") {
  const std::vector<SpanRecord> corpus = {
      record("s0", "the roof and a wall",
             {{"the roof", SpanCategory::Object},
              {"a wall", SpanCategory::Object}})};
  const auto entries = build_lexicon(corpus);
  std::ostringstream out;
  write_lexicon(out, entries, {"source=test"});
  std::istringstream in(out.str());
  const auto loaded = read_lexicon(in);
  REQUIRE(loaded.size() == entries.size());
  for (size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].normalized_form == entries[i].normalized_form);
    CHECK(loaded[i].total_frequency == entries[i].total_frequency);
    CHECK(loaded[i].surface_variants.size() ==
          entries[i].surface_variants.size());
  }
}

namespace {

std::vector<SpanRecord> sampling_corpus() {
  std::vector<SpanRecord> corpus;
  for (int s = 0; s < 30; ++s) {
    corpus.push_back(record(("s" + std::to_string(s)).c_str(),
                            "some sentence text here",
                            {{("object" + std::to_string(s)).c_str(),
                              SpanCategory::Object}}));
  }
  return corpus;
}

}  // namespace

TEST_CASE("judgement sampling is deterministic and respects exclusions") {
  const auto corpus = sampling_corpus();
  const auto lexicon = build_lexicon(corpus);
  REQUIRE(lexicon.size() == 30);

  const auto a = sample_for_judgement(lexicon, corpus, 10, 7);
  const auto b = sample_for_judgement(lexicon, corpus, 10, 7);
  REQUIRE(a.size() == 10);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].object_surface == b[i].object_surface);
    CHECK(a[i].sentence_id == b[i].sentence_id);
    CHECK(a[i].task_id == b[i].task_id);
  }

  // No duplicate normalized forms in one sample.
  std::set<std::string> forms;
  for (const JudgementTask& task : a) {
    CHECK(forms.insert(normalize_form(task.object_surface)).second);
    CHECK(task.label_choices[0] == "exact match");
    CHECK(task.label_choices[1] == "partial match");
    CHECK(task.label_choices[2] == "not an object");
  }

  // Excluded terms and excluded sentences never appear. Excluding s5 also
  // removes object5, whose only occurrence is there: 28 eligible remain.
  const auto excluded_term = normalize_form("object3");
  const auto sampled = sample_for_judgement(lexicon, corpus, 28, 7,
                                            {excluded_term}, {"s5"});
  for (const JudgementTask& task : sampled) {
    CHECK(normalize_form(task.object_surface) != excluded_term);
    CHECK(task.sentence_id != "s5");
  }
}

TEST_CASE("sampling the whole population uses every eligible entry once") {
  const auto corpus = sampling_corpus();
  const auto lexicon = build_lexicon(corpus);
  const auto tasks = sample_for_judgement(lexicon, corpus, 30, 3);
  std::set<std::string> forms;
  for (const JudgementTask& task : tasks) {
    forms.insert(normalize_form(task.object_surface));
  }
  CHECK(forms.size() == 30);
}

TEST_CASE("asking for more than the eligible population raises") {
  const auto corpus = sampling_corpus();
  const auto lexicon = build_lexicon(corpus);
  CHECK_THROWS_AS(sample_for_judgement(lexicon, corpus, 31, 3),
                  NotEnoughEligibleError);
  // An entry whose only occurrence is excluded is ineligible.
  CHECK_THROWS_AS(
      sample_for_judgement(lexicon, corpus, 30, 3, {}, {"s0"}),
      NotEnoughEligibleError);
}
