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

#include "spantag/text.hpp"

#include <algorithm>
#include <cctype>

namespace spantag {

namespace {

inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Bytes >= 0x80 (UTF-8 continuation or lead bytes) are treated as word
// characters; Unicode is passed through, never normalized.
inline bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

// Characters that glue a token together when both neighbours are word
// characters. Covers hyphens, document codes, decimals and possessives.
inline bool is_glue_char(char c) {
  switch (c) {
    case '-': case '/': case '.': case ':': case ',': case '\'': case '&':
      return true;
    default:
      return false;
  }
}

inline bool is_upper_or_digit(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isupper(u) != 0 || std::isdigit(u) != 0;
}

}  // namespace

std::string ascii_lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_punctuation_token(std::string_view surface) {
  if (surface.empty()) return false;
  return std::none_of(surface.begin(), surface.end(), is_word_char);
}

SplitterConfig SplitterConfig::defaults() {
  SplitterConfig config;
  config.abbreviations = {"e.g.", "i.e.", "No.", "BS", "para.",
                          "cf.",  "etc.", "vs.", "Dr.", "Mr."};
  return config;
}

std::vector<CharRange> split_sentences(std::string_view text,
                                       const SplitterConfig& config) {
  const int n = static_cast<int>(text.size());
  std::vector<int> breaks;  // positions where a new sentence starts

  auto matches_abbreviation = [&](int terminator) {
    // The word ending at (and including) the terminator.
    int begin = terminator;
    while (begin > 0 && !is_space(text[begin - 1])) --begin;
    const std::string_view word = text.substr(begin, terminator - begin + 1);
    for (const std::string& abbr : config.abbreviations) {
      if (word == abbr) return true;
      if (!abbr.empty() && abbr.back() != '.' &&
          word.substr(0, word.size() - 1) == abbr) {
        return true;
      }
    }
    return false;
  };

  for (int i = 0; i < n; ++i) {
    const char c = text[i];
    if (c == '\n' && config.split_on_blank_lines) {
      int j = i + 1;
      bool blank = false;
      while (j < n && is_space(text[j])) {
        if (text[j] == '\n') blank = true;
        ++j;
      }
      if (blank && j < n) breaks.push_back(j);
      continue;
    }
    if (c != '.' && c != '!' && c != '?') continue;
    int j = i + 1;
    while (j < n && is_space(text[j])) ++j;
    if (j == i + 1 || j >= n) continue;          // no whitespace after
    if (!is_upper_or_digit(text[j])) continue;   // next sentence must start Aa/0-9
    if (c == '.' && matches_abbreviation(i)) continue;
    breaks.push_back(j);
  }

  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<CharRange> out;
  int start = 0;
  auto flush = [&](int end) {
    while (start < end && is_space(text[start])) ++start;
    int last = end;
    while (last > start && is_space(text[last - 1])) --last;
    if (last > start) out.push_back(CharRange{start, last});
    start = end;
  };
  for (int b : breaks) flush(b);
  flush(n);
  return out;
}

std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<Token> out;
  const int n = static_cast<int>(sentence.size());
  int i = 0;
  while (i < n) {
    if (is_space(sentence[i])) {
      ++i;
      continue;
    }
    if (is_word_char(sentence[i])) {
      int j = i + 1;
      while (j < n) {
        if (is_word_char(sentence[j])) {
          ++j;
        } else if (is_glue_char(sentence[j]) && j + 1 < n &&
                   is_word_char(sentence[j + 1]) &&
                   is_word_char(sentence[j - 1])) {
          j += 2;
        } else {
          break;
        }
      }
      out.push_back(
          Token{std::string(sentence.substr(i, j - i)), i, j});
      i = j;
    } else {
      // Freestanding punctuation: one token per character.
      out.push_back(Token{std::string(1, sentence[i]), i, i + 1});
      ++i;
    }
  }
  return out;
}

}  // namespace spantag
