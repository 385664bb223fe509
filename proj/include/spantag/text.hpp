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

#ifndef SPANTAG_TEXT_HPP_
#define SPANTAG_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "spantag/span_types.hpp"

namespace spantag {

// Half-open range of character offsets.
struct CharRange {
  int start = 0;
  int end = 0;

  bool operator==(const CharRange&) const = default;
};

struct SplitterConfig {
  // A sentence break fires after . ! ? followed by whitespace and an
  // uppercase letter or digit, unless the word ending at the terminator
  // matches one of these entries (with or without its trailing period).
  std::vector<std::string> abbreviations;
  // Treat a blank line as a hard sentence boundary (list items and table
  // cells in regulation text rarely end with a terminator).
  bool split_on_blank_lines = true;

  static SplitterConfig defaults();
};

// Returned ranges are trimmed of surrounding whitespace, ordered,
// non-overlapping, and together cover all non-whitespace text.
std::vector<CharRange> split_sentences(
    std::string_view text, const SplitterConfig& config = SplitterConfig::defaults());

// Treebank-style rules: freestanding punctuation becomes its own token;
// hyphens, slashes, periods, colons, commas, apostrophes and ampersands
// stay inside a token when flanked by alphanumerics on both sides
// ("fire-fighting", "900mm", "2010/31/EU", "4.5", "800-15:1990").
// Offsets always reconstruct the source exactly.
std::vector<Token> tokenize(std::string_view sentence);

// True when every character of the surface is punctuation (non-alphanumeric
// ASCII). Bytes >= 0x80 count as word characters.
bool is_punctuation_token(std::string_view surface);

std::string ascii_lowercase(std::string_view text);

}  // namespace spantag

#endif  // SPANTAG_TEXT_HPP_
