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

#ifndef SPANTAG_TESTS_SUPPORT_FIXTURES_HPP_
#define SPANTAG_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "spantag/span_types.hpp"

namespace spantag::testing {

inline TokenSpan make_span(SpanCategory category, int head_start, int head_end,
                           int tail_start = -1, int tail_end = -1,
                           const std::string& sentence_id = "s0") {
  TokenSpan span;
  span.category = category;
  span.head = TokenRange{head_start, head_end};
  if (tail_start >= 0) span.tail = TokenRange{tail_start, tail_end};
  span.sentence_id = sentence_id;
  return span;
}

// Tokens laid out with single spaces; offsets are consistent with the
// implied sentence text.
inline SentenceAnnotation make_annotation(const std::string& sentence_id,
                                          std::vector<std::string> surfaces,
                                          std::vector<TokenSpan> spans) {
  SentenceAnnotation annotation;
  annotation.sentence_id = sentence_id;
  int offset = 0;
  for (std::string& surface : surfaces) {
    const int start = offset;
    offset += static_cast<int>(surface.size());
    annotation.tokens.push_back(Token{std::move(surface), start, offset});
    ++offset;
  }
  annotation.spans = std::move(spans);
  return annotation;
}

inline std::string annotation_text(const SentenceAnnotation& annotation) {
  std::string text;
  for (size_t i = 0; i < annotation.tokens.size(); ++i) {
    if (i > 0) text += ' ';
    text += annotation.tokens[i].surface;
  }
  return text;
}

// The paper-derived footpath example: spans over
// [a, paved, (, or, equivalent, ), footpath].
inline SentenceAnnotation footpath_annotation() {
  return make_annotation(
      "footpath",
      {"a", "paved", "(", "or", "equivalent", ")", "footpath"},
      {make_span(SpanCategory::Object, 0, 2, 6, 7, "footpath"),
       make_span(SpanCategory::Discourse, 2, 3, -1, -1, "footpath"),
       make_span(SpanCategory::Discourse, 3, 4, -1, -1, "footpath"),
       make_span(SpanCategory::Functional, 4, 5, -1, -1, "footpath"),
       make_span(SpanCategory::Discourse, 5, 6, -1, -1, "footpath")});
}

inline std::vector<std::string> footpath_tag_names() {
  return {"BH-obj", "IH-obj", "BH-dis", "BH-dis",
          "BH-func", "BH-dis", "BD-obj"};
}

}  // namespace spantag::testing

#endif  // SPANTAG_TESTS_SUPPORT_FIXTURES_HPP_
