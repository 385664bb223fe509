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

#include "spantag/codec.hpp"

#include <algorithm>
#include <sstream>

#include "spantag/errors.hpp"

namespace spantag {

std::string to_string(const RepairEntry& repair) {
  std::ostringstream out;
  out << label_name(repair.from) << "->" << label_name(repair.to) << " at "
      << repair.position;
  return out.str();
}

namespace {

std::string span_desc(const TokenSpan& span) {
  std::ostringstream out;
  out << category_name(span.category) << "[" << span.head.start << ","
      << span.head.end << ")";
  if (span.tail) out << "+[" << span.tail->start << "," << span.tail->end << ")";
  return out.str();
}

}  // namespace

TagSequence encode_tags(const SentenceAnnotation& annotation,
                        const TagsetConfig& tagset) {
  const int n = static_cast<int>(annotation.tokens.size());
  // -1 = unassigned; otherwise the index of the owning span.
  std::vector<int> owner(static_cast<size_t>(n), -1);
  std::vector<TagLabel> labels(static_cast<size_t>(n),
                               TagLabel{TagPosition::BH, SpanCategory::Object});

  auto place = [&](const TokenSpan& span, int span_idx, const TokenRange& seg,
                   TagPosition begin, TagPosition inside) {
    if (seg.empty() || seg.start < 0 || seg.end > n) {
      throw LengthMismatchError("segment [" + std::to_string(seg.start) + "," +
                                std::to_string(seg.end) +
                                ") out of range for sentence of " +
                                std::to_string(n) + " tokens");
    }
    for (int i = seg.start; i < seg.end; ++i) {
      if (owner[i] >= 0) {
        throw OverlapError("token " + std::to_string(i) + " claimed by both " +
                           span_desc(annotation.spans[owner[i]]) + " and " +
                           span_desc(span));
      }
      owner[i] = span_idx;
      labels[i] = TagLabel{i == seg.start ? begin : inside, span.category};
    }
  };

  for (size_t s = 0; s < annotation.spans.size(); ++s) {
    const TokenSpan& span = annotation.spans[s];
    place(span, static_cast<int>(s), span.head, TagPosition::BH,
          TagPosition::IH);
    if (span.tail) {
      if (!tagset.allows_discontiguous(span.category)) {
        throw IllegalDiscontiguityError(
            "discontiguous span not allowed for category " +
            std::string(category_name(span.category)));
      }
      if (span.tail->start <= span.head.end) {
        throw LengthMismatchError(
            "tail must start strictly after the head ends: " +
            span_desc(span));
      }
      place(span, static_cast<int>(s), *span.tail, TagPosition::BD,
            TagPosition::ID);
    }
  }

  for (int i = 0; i < n; ++i) {
    if (owner[i] < 0) {
      throw LengthMismatchError("token " + std::to_string(i) +
                                " is not covered by any span");
    }
  }

  // Interleaving assumption: no head segment of the same category may start
  // between a discontiguous span's head and its tail.
  for (const TokenSpan& span : annotation.spans) {
    if (!span.tail) continue;
    for (const TokenSpan& other : annotation.spans) {
      const int start = other.head.start;
      if (other.category == span.category && start >= span.head.end &&
          start < span.tail->start && &other != &span) {
        throw InterleavingError("head of " + span_desc(other) +
                                " starts between head and tail of " +
                                span_desc(span));
      }
    }
  }

  return TagSequence{annotation.sentence_id, std::move(labels)};
}

namespace {

// Decoder state machine shared by strict and repair mode.
class Decoder {
 public:
  Decoder(const TagSequence& tags, const TagsetConfig& tagset, DecodeMode mode)
      : tags_(tags), tagset_(tagset), mode_(mode) {}

  DecodedSpans run() {
    for (int i = 0; i < static_cast<int>(tags_.labels.size()); ++i) {
      const TagLabel label = tags_.labels[i];
      if (tagset_.label_index(label) < 0) {
        throw LengthMismatchError("label " + label_name(label) +
                                  " is not part of the tagset");
      }
      step(i, label);
    }
    DecodedSpans out;
    out.spans = std::move(spans_);
    out.repairs = std::move(repairs_);
    return out;
  }

 private:
  enum class RunKind { None, Head, Tail };

  void step(int i, TagLabel label) {
    switch (label.position) {
      case TagPosition::BH:
        open_head(i, label.category);
        break;
      case TagPosition::IH:
        if (run_ == RunKind::Head && run_category() == label.category) {
          spans_[run_span_].head.end = i + 1;
        } else {
          malformed<DanglingContinuationError>(
              i, label, "IH without a preceding BH/IH of the same category");
        }
        break;
      case TagPosition::BD:
        open_tail(i, label);
        break;
      case TagPosition::ID:
        if (run_ == RunKind::Tail && run_category() == label.category) {
          spans_[run_span_].tail->end = i + 1;
        } else {
          malformed<DanglingContinuationError>(
              i, label, "ID without a preceding BD/ID of the same category");
        }
        break;
    }
  }

  void open_head(int i, SpanCategory cat) {
    TokenSpan span;
    span.category = cat;
    span.head = TokenRange{i, i + 1};
    span.sentence_id = tags_.sentence_id;
    run_span_ = static_cast<int>(spans_.size());
    run_ = RunKind::Head;
    open_heads_[static_cast<int>(cat)].push_back(run_span_);
    seen_head_[static_cast<int>(cat)] = true;
    spans_.push_back(std::move(span));
  }

  void open_tail(int i, TagLabel label) {
    const int cat = static_cast<int>(label.category);
    auto& open = open_heads_[cat];
    if (open.empty()) {
      if (seen_head_[cat]) {
        malformed<DoubleTailError>(
            i, label, "every open head of this category already has a tail");
      } else {
        malformed<OrphanTailError>(i, label, "BD with no open head");
      }
      return;
    }
    const int target = open.back();
    open.pop_back();
    spans_[target].tail = TokenRange{i, i + 1};
    run_span_ = target;
    run_ = RunKind::Tail;
  }

  template <typename Err>
  void malformed(int i, TagLabel label, const std::string& what) {
    if (mode_ == DecodeMode::Strict) {
      throw Err(what + " (" + label_name(label) + " at position " +
                std::to_string(i) + ")");
    }
    const TagLabel repaired{TagPosition::BH, label.category};
    repairs_.push_back(RepairEntry{i, label, repaired});
    open_head(i, label.category);
  }

  SpanCategory run_category() const { return spans_[run_span_].category; }

  const TagSequence& tags_;
  const TagsetConfig& tagset_;
  DecodeMode mode_;
  std::vector<TokenSpan> spans_;
  std::vector<RepairEntry> repairs_;
  // Per category: indices of spans whose tail slot is still empty, in
  // creation order. seen_head_ distinguishes orphan tails from double tails.
  std::array<std::vector<int>, kNumCategories> open_heads_;
  std::array<bool, kNumCategories> seen_head_ = {false, false, false, false};
  RunKind run_ = RunKind::None;
  int run_span_ = -1;
};

}  // namespace

DecodedSpans decode_tags(const TagSequence& tags, const TagsetConfig& tagset,
                         DecodeMode mode) {
  Decoder decoder(tags, tagset, mode);
  return decoder.run();
}

}  // namespace spantag
