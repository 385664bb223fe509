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

#include "spantag/lint.hpp"
#include "support/fixtures.hpp"

using namespace spantag;
using namespace spantag::testing;

namespace {

RawSpan raw_span(SpanCategory category, std::vector<TokenRange> segments) {
  RawSpan span;
  span.category = category;
  span.segments = std::move(segments);
  return span;
}

RawAnnotation raw(std::vector<std::string> surfaces,
                  std::vector<RawSpan> spans) {
  RawAnnotation annotation;
  annotation.sentence_id = "s0";
  int offset = 0;
  for (std::string& s : surfaces) {
    const int start = offset;
    offset += static_cast<int>(s.size());
    annotation.tokens.push_back(Token{std::move(s), start, offset});
    ++offset;
  }
  annotation.spans = std::move(spans);
  return annotation;
}

bool has_rule(const std::vector<LintViolation>& violations,
              const char* rule) {
  for (const LintViolation& v : violations) {
    if (v.rule == rule) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("a fully valid annotation has no violations") {
  CHECK(lint_gold(footpath_annotation()).empty());
}

TEST_CASE("three segments violate max-two-parts") {
  const auto annotation =
      raw({"a", "b", "c", "d", "e"},
          {raw_span(SpanCategory::Object,
                    {{0, 1}, {2, 3}, {4, 5}}),
           raw_span(SpanCategory::Discourse, {{1, 2}}),
           raw_span(SpanCategory::Discourse, {{3, 4}})});
  const auto violations = lint_gold(annotation);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == kLintRuleMaxTwoParts);
}

TEST_CASE("an uncovered token is reported with its index") {
  auto annotation = footpath_annotation();
  annotation.spans.erase(annotation.spans.begin() + 3);  // drops token 4
  const auto violations = lint_gold(annotation);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == kLintRuleUncoveredToken);
  CHECK(violations[0].where == TokenRange{4, 5});
}

TEST_CASE("overlapping spans are reported once per pair") {
  const auto annotation = raw(
      {"a", "b"}, {raw_span(SpanCategory::Object, {{0, 2}}),
                   raw_span(SpanCategory::Action, {{1, 2}})});
  const auto violations = lint_gold(annotation);
  CHECK(has_rule(violations, kLintRuleOverlap));
}

TEST_CASE("same-category interleaving is reported") {
  const auto annotation = raw(
      {"a", "b", "c", "d"},
      {raw_span(SpanCategory::Object, {{0, 1}, {3, 4}}),
       raw_span(SpanCategory::Object, {{2, 3}}),
       raw_span(SpanCategory::Discourse, {{1, 2}})});
  const auto violations = lint_gold(annotation);
  CHECK(has_rule(violations, kLintRuleInterleaving));
}

TEST_CASE("discontiguous spans of a disallowed category are reported") {
  const auto annotation = raw(
      {"a", "b", "c"},
      {raw_span(SpanCategory::Functional, {{0, 1}, {2, 3}}),
       raw_span(SpanCategory::Object, {{1, 2}})});
  CHECK(has_rule(lint_gold(annotation), kLintRuleIllegalDiscontiguity));
  CHECK(!has_rule(lint_gold(annotation, TagsetConfig::full_16()),
                  kLintRuleIllegalDiscontiguity));
}

TEST_CASE("empty segments are reported") {
  const auto annotation = raw(
      {"a"}, {raw_span(SpanCategory::Object, {{0, 1}, {1, 1}})});
  CHECK(has_rule(lint_gold(annotation), kLintRuleEmptySegment));
}
