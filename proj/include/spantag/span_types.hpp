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

#ifndef SPANTAG_SPAN_TYPES_HPP_
#define SPANTAG_SPAN_TYPES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spantag {

// The four span categories. Enum order fixes the canonical reporting order
// (object block first, then action, discourse, functional).
enum class SpanCategory : int {
  Object = 0,
  Action = 1,
  Discourse = 2,
  Functional = 3,
};

inline constexpr int kNumCategories = 4;
inline constexpr std::array<SpanCategory, kNumCategories> kAllCategories = {
    SpanCategory::Object, SpanCategory::Action, SpanCategory::Discourse,
    SpanCategory::Functional};

std::string_view category_name(SpanCategory cat);        // "Object"
std::string_view category_short_name(SpanCategory cat);  // "obj"
// Accepts long or short names, case-insensitively.
std::optional<SpanCategory> parse_category(std::string_view name);

// Tag positions: begin/inside of the head segment, begin/inside of the
// discontiguous tail segment.
enum class TagPosition : int { BH = 0, IH = 1, BD = 2, ID = 3 };

std::string_view position_name(TagPosition pos);

struct TagLabel {
  TagPosition position;
  SpanCategory category;

  bool operator==(const TagLabel&) const = default;
};

std::string label_name(TagLabel label);  // "BH-obj"
std::optional<TagLabel> parse_label(std::string_view name);

// Half-open range of token indices.
struct TokenRange {
  int start = 0;
  int end = 0;

  int size() const { return end - start; }
  bool empty() const { return end <= start; }
  bool contains(int index) const { return index >= start && index < end; }
  bool operator==(const TokenRange&) const = default;
};

// One surface token with character offsets into its source sentence.
struct Token {
  std::string surface;
  int char_start = 0;
  int char_end = 0;

  bool operator==(const Token&) const = default;
};

// A span of one contiguous head segment plus an optional second,
// strictly later tail segment (a discontiguous multi-word expression).
struct TokenSpan {
  SpanCategory category = SpanCategory::Object;
  TokenRange head;
  std::optional<TokenRange> tail;
  std::string sentence_id;

  bool discontiguous() const { return tail.has_value(); }
  int token_count() const {
    return head.size() + (tail ? tail->size() : 0);
  }
  bool covers(int index) const {
    return head.contains(index) || (tail && tail->contains(index));
  }
  bool operator==(const TokenSpan&) const = default;
};

// Spans are expected to partition the token indices exhaustively; the
// codec validates this, the linter reports violations.
struct SentenceAnnotation {
  std::string sentence_id;
  std::vector<Token> tokens;
  std::vector<TokenSpan> spans;
};

struct TagSequence {
  std::string sentence_id;
  std::vector<TagLabel> labels;
};

// Which categories may carry a discontiguous tail (BD/ID), the derived
// canonical label list, and the derived transition legality mask.
//
// The default tagset has 12 labels: BD/ID are disabled for Discourse and
// Functional. The 16-label variant enables them for every category.
class TagsetConfig {
 public:
  static TagsetConfig default_12();
  static TagsetConfig full_16();
  explicit TagsetConfig(std::array<bool, kNumCategories> allow_discontiguous);

  int num_labels() const { return static_cast<int>(labels_.size()); }
  const std::vector<TagLabel>& labels() const { return labels_; }
  const TagLabel& label(int index) const { return labels_[index]; }

  // -1 when the label is not part of this tagset.
  int label_index(TagLabel label) const;
  bool contains(TagLabel label) const { return label_index(label) >= 0; }
  bool allows_discontiguous(SpanCategory cat) const {
    return allow_disc_[static_cast<int>(cat)];
  }
  std::array<bool, kNumCategories> discontiguous_flags() const {
    return allow_disc_;
  }

  // Transition legality over label indices. A sequence is legal iff its
  // first label passes start_allowed and every adjacent pair passes
  // transition_allowed. Transitions into the virtual stop state are
  // always legal.
  bool start_allowed(int label) const;
  bool transition_allowed(int from, int to) const;

  bool operator==(const TagsetConfig& other) const {
    return allow_disc_ == other.allow_disc_;
  }

 private:
  std::array<bool, kNumCategories> allow_disc_;
  std::vector<TagLabel> labels_;
  std::array<int, 16> index_;  // [position * 4 + category] -> label id or -1
};

}  // namespace spantag

#endif  // SPANTAG_SPAN_TYPES_HPP_
