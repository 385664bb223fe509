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

#ifndef SPANTAG_TAGGED_IO_HPP_
#define SPANTAG_TAGGED_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spantag/span_types.hpp"
#include "spantag/text.hpp"

namespace spantag {

// Two-column token/tag text format, one token per line, blank line between
// sentences:
//   a<TAB>BH-obj
//   paved<TAB>IH-obj
struct TaggedSentence {
  std::string sentence_id;
  std::vector<std::string> surfaces;
  std::vector<TagLabel> labels;
};

void write_token_tags(std::ostream& out,
                      const std::vector<TaggedSentence>& sentences);
std::vector<TaggedSentence> read_token_tags(std::istream& in);

// Record-per-sentence structured format (one JSON object per line)
// carrying the decoded spans with character offsets.
struct SpanRecordSpan {
  SpanCategory category = SpanCategory::Object;
  TokenRange head;
  std::optional<TokenRange> tail;
  CharRange char_head;
  std::optional<CharRange> char_tail;
  std::string surface;
};

struct SpanRecord {
  std::string sentence_id;
  std::string text;
  std::vector<SpanRecordSpan> spans;
};

// Builds a record from a sentence annotation plus its raw text, collapsing
// whitespace runs inside span surfaces.
SpanRecord make_span_record(const SentenceAnnotation& annotation,
                            std::string_view text);

void write_span_records(std::ostream& out,
                        const std::vector<SpanRecord>& records);
std::vector<SpanRecord> read_span_records(std::istream& in);

// Token spans of one record, e.g. for span-level evaluation.
std::vector<TokenSpan> record_token_spans(const SpanRecord& record);

}  // namespace spantag

#endif  // SPANTAG_TAGGED_IO_HPP_
