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

#ifndef SPANTAG_BRAT_HPP_
#define SPANTAG_BRAT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "spantag/lint.hpp"
#include "spantag/span_types.hpp"
#include "spantag/text.hpp"

namespace spantag {

// Character-to-token alignment. Strict mode raises BoundaryMismatchError
// when a fragment boundary falls inside a token (or the fragment covers no
// token at all); snap mode widens to token boundaries and logs the widening.
enum class AlignMode { Strict, Snap };

std::vector<TokenRange> align_char_spans(const std::vector<Token>& tokens,
                                         const std::vector<CharRange>& fragments,
                                         AlignMode mode,
                                         std::vector<std::string>* log = nullptr);

struct ParsedSentence {
  SentenceAnnotation annotation;
  std::vector<std::string> warnings;
};

// Parses BRAT standoff annotation lines
//   T<id>\t<Type> <start> <end>[;<start> <end>]\t<surface>
// against the raw sentence text. Non-entity lines (A/R/E/#) are ignored.
// Errors: MalformedLineError, UnknownTypeError, FragmentCountError (more
// than two fragments), BoundaryMismatchError (strict alignment).
// Adjacent head/tail fragments are merged into one contiguous span with a
// warning.
ParsedSentence parse_brat(std::string_view ann_text, std::string_view txt_text,
                          std::string_view sentence_id,
                          AlignMode align = AlignMode::Strict);

// Lenient variant for the linter: never throws on guideline violations
// (extra fragments, unknown types, malformed lines become diagnostics and
// the spans are kept in raw form where representable).
struct ParsedRawSentence {
  RawAnnotation annotation;
  std::vector<std::string> problems;
};

ParsedRawSentence parse_brat_raw(std::string_view ann_text,
                                 std::string_view txt_text,
                                 std::string_view sentence_id);

// Writes the annotation back to standoff form; parse_brat of the output
// against the same text reproduces the annotation exactly.
std::string serialize_brat(const SentenceAnnotation& annotation,
                           std::string_view txt_text);

// Loads every <stem>.ann/<stem>.txt pair under a directory, ordered by
// file name; the sentence id is the file stem.
std::vector<ParsedSentence> load_brat_dir(const std::string& dir,
                                          AlignMode align = AlignMode::Strict);
std::vector<ParsedRawSentence> load_brat_dir_raw(const std::string& dir);

}  // namespace spantag

#endif  // SPANTAG_BRAT_HPP_
