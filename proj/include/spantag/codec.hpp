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

#ifndef SPANTAG_CODEC_HPP_
#define SPANTAG_CODEC_HPP_

#include <string>
#include <vector>

#include "spantag/span_types.hpp"

namespace spantag {

// Lossless, validated conversion between span annotations and token-level
// tag sequences.
//
// Encoding: head segments become BH-x IH-x...; tail segments become
// BD-x ID-x...; a single-token segment carries only its B* label. The
// encoder relies on the interleaving assumption: between the head and the
// tail of a discontiguous span no head segment of the same category may
// start, which makes tail attachment unambiguous on decode.

enum class DecodeMode { Strict, Repair };

// One local rewrite applied by repair-mode decoding.
struct RepairEntry {
  int position = 0;
  TagLabel from;
  TagLabel to;
};

std::string to_string(const RepairEntry& repair);  // "IH-obj->BH-obj at 0"

struct DecodedSpans {
  std::vector<TokenSpan> spans;
  std::vector<RepairEntry> repairs;
};

// Errors: OverlapError, InterleavingError, IllegalDiscontiguityError,
// LengthMismatchError.
TagSequence encode_tags(const SentenceAnnotation& annotation,
                        const TagsetConfig& tagset);

// Left-to-right scan. Maximal BH-x/IH-x runs open a head span; a BD-x/ID-x
// run attaches as tail to the most recently opened x-head whose tail slot
// is empty. Strict mode raises DanglingContinuationError, OrphanTailError
// or DoubleTailError on malformed sequences; repair mode applies local
// deterministic rewrites instead and logs them:
//   stray IH-x                    -> BH-x
//   BD-x with no open x-head      -> BH-x
//   BD-x when every x-head's tail slot is already filled -> BH-x
//   stray ID-x (not continuing a BD/ID-x run)            -> BH-x
// Repair-mode output always satisfies the span partition invariant.
DecodedSpans decode_tags(const TagSequence& tags, const TagsetConfig& tagset,
                         DecodeMode mode);

}  // namespace spantag

#endif  // SPANTAG_CODEC_HPP_
