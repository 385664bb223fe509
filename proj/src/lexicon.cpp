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

#include "spantag/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "spantag/errors.hpp"
#include "spantag/text.hpp"

namespace spantag {

namespace {

bool is_determiner(std::string_view token) {
  return token == "the" || token == "a" || token == "an";
}

std::string fold_plural(std::string token) {
  if (token.size() > 3 && token.back() == 's' &&
      token[token.size() - 2] != 's') {
    token.pop_back();
  }
  return token;
}

}  // namespace

std::string normalize_span(const std::vector<std::string>& tokens,
                           const NormalizeConfig& config) {
  if (tokens.empty()) throw EmptySpanError("cannot normalize an empty span");
  std::vector<std::string> lower;
  lower.reserve(tokens.size());
  for (const std::string& token : tokens) {
    lower.push_back(ascii_lowercase(token));
  }
  // Leading determiners are dropped until none remain, which makes the
  // result a fixed point of normalization. A lone determiner stays;
  // stripping it would leave nothing.
  size_t begin = 0;
  while (begin + 1 < lower.size() && is_determiner(lower[begin])) ++begin;

  std::string out;
  for (size_t i = begin; i < lower.size(); ++i) {
    std::string token =
        config.plural_folding ? fold_plural(lower[i]) : lower[i];
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

std::string normalize_form(std::string_view text,
                           const NormalizeConfig& config) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return normalize_span(tokens, config);
}

std::vector<LexiconEntry> build_lexicon(const std::vector<SpanRecord>& tagged,
                                        SpanCategory category,
                                        const NormalizeConfig& normalize) {
  std::unordered_map<std::string, LexiconEntry> by_form;
  for (const SpanRecord& record : tagged) {
    for (const SpanRecordSpan& span : record.spans) {
      if (span.category != category) continue;
      if (span.surface.empty()) continue;
      const std::string form = normalize_form(span.surface, normalize);
      LexiconEntry& entry = by_form[form];
      entry.normalized_form = form;
      ++entry.surface_variants[span.surface];
      ++entry.total_frequency;
      if (span.tail) ++entry.discontiguous_count;

      SpanOccurrence occurrence;
      occurrence.sentence_id = record.sentence_id;
      occurrence.surface = span.surface;
      occurrence.char_start = span.char_head.start;
      occurrence.char_end = span.char_head.end;
      occurrence.discontiguous = span.tail.has_value();
      entry.occurrences.push_back(std::move(occurrence));
    }
  }

  std::vector<LexiconEntry> out;
  out.reserve(by_form.size());
  for (auto& [form, entry] : by_form) out.push_back(std::move(entry));
  std::sort(out.begin(), out.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              if (a.total_frequency != b.total_frequency) {
                return a.total_frequency > b.total_frequency;
              }
              return a.normalized_form < b.normalized_form;
            });
  return out;
}

void write_lexicon(std::ostream& out, const std::vector<LexiconEntry>& entries,
                   const std::vector<std::string>& header_lines) {
  for (const std::string& line : header_lines) out << "# " << line << '\n';
  out << "# columns: normalized_form<TAB>total_frequency<TAB>"
         "discontiguous_count<TAB>variants (|-joined)\n";
  out << "# whitespace runs inside span surfaces are collapsed to a single "
         "space\n";
  for (const LexiconEntry& entry : entries) {
    out << entry.normalized_form << '\t' << entry.total_frequency << '\t'
        << entry.discontiguous_count << '\t';
    bool first = true;
    for (const auto& [surface, freq] : entry.surface_variants) {
      if (!first) out << '|';
      first = false;
      out << surface;
    }
    out << '\n';
  }
}

std::vector<LexiconEntry> read_lexicon(std::istream& in) {
  std::vector<LexiconEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    LexiconEntry entry;
    std::string freq;
    std::string disc;
    std::string variants;
    if (!std::getline(fields, entry.normalized_form, '\t') ||
        !std::getline(fields, freq, '\t') || !std::getline(fields, disc, '\t')) {
      throw MalformedLineError("bad lexicon line: '" + line + "'");
    }
    std::getline(fields, variants, '\t');
    try {
      entry.total_frequency = std::stol(freq);
      entry.discontiguous_count = std::stol(disc);
    } catch (const std::exception&) {
      throw MalformedLineError("bad lexicon counts in line: '" + line + "'");
    }
    size_t pos = 0;
    while (pos <= variants.size() && !variants.empty()) {
      size_t bar = variants.find('|', pos);
      if (bar == std::string::npos) bar = variants.size();
      const std::string surface = variants.substr(pos, bar - pos);
      if (!surface.empty()) entry.surface_variants[surface] = 0;
      pos = bar + 1;
      if (bar == variants.size()) break;
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<JudgementTask> sample_for_judgement(
    const std::vector<LexiconEntry>& lexicon,
    const std::vector<SpanRecord>& corpus, long n, std::uint64_t seed,
    const std::unordered_set<std::string>& excluded_forms,
    const std::unordered_set<std::string>& excluded_sentence_ids) {
  std::unordered_map<std::string, const SpanRecord*> sentences;
  for (const SpanRecord& record : corpus) {
    sentences.emplace(record.sentence_id, &record);
  }

  struct Eligible {
    const LexiconEntry* entry;
    std::vector<const SpanOccurrence*> occurrences;
  };
  std::vector<Eligible> eligible;
  for (const LexiconEntry& entry : lexicon) {
    if (excluded_forms.count(entry.normalized_form)) continue;
    Eligible e;
    e.entry = &entry;
    for (const SpanOccurrence& occurrence : entry.occurrences) {
      if (excluded_sentence_ids.count(occurrence.sentence_id)) continue;
      if (!sentences.count(occurrence.sentence_id)) continue;
      e.occurrences.push_back(&occurrence);
    }
    if (!e.occurrences.empty()) eligible.push_back(std::move(e));
  }

  if (n > static_cast<long>(eligible.size())) {
    throw NotEnoughEligibleError(
        "requested " + std::to_string(n) + " tasks but only " +
        std::to_string(eligible.size()) + " entries are eligible");
  }

  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first n slots are a uniform sample without
  // replacement.
  for (long i = 0; i < n; ++i) {
    const size_t j =
        static_cast<size_t>(i) +
        static_cast<size_t>(rng() % (eligible.size() - static_cast<size_t>(i)));
    std::swap(eligible[static_cast<size_t>(i)], eligible[j]);
  }

  std::vector<JudgementTask> tasks;
  tasks.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    const Eligible& e = eligible[static_cast<size_t>(i)];
    const SpanOccurrence* occurrence =
        e.occurrences[static_cast<size_t>(rng() % e.occurrences.size())];
    const SpanRecord* record = sentences.at(occurrence->sentence_id);

    JudgementTask task;
    task.object_surface = occurrence->surface;
    task.sentence_id = record->sentence_id;
    task.sentence_text = record->text;
    task.span_start = occurrence->char_start;
    task.span_end = occurrence->char_end;
    task.label_choices = {kJudgementLabels[0], kJudgementLabels[1],
                          kJudgementLabels[2]};
    tasks.push_back(std::move(task));
  }

  // Shuffle the output order, then assign sequential ids.
  for (size_t i = tasks.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng() % i);
    std::swap(tasks[i - 1], tasks[j]);
  }
  for (size_t i = 0; i < tasks.size(); ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "task_%04zu", i);
    tasks[i].task_id = buf;
  }
  return tasks;
}

void write_judgement_tasks(std::ostream& out,
                           const std::vector<JudgementTask>& tasks) {
  for (const JudgementTask& task : tasks) {
    nlohmann::json j;
    j["task_id"] = task.task_id;
    j["object"] = task.object_surface;
    j["sentence_id"] = task.sentence_id;
    j["text"] = task.sentence_text;
    j["span_start"] = task.span_start;
    j["span_end"] = task.span_end;
    j["labels"] = {task.label_choices[0], task.label_choices[1],
                   task.label_choices[2]};
    out << j.dump() << '\n';
  }
}

}  // namespace spantag
