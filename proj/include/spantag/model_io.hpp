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

#ifndef SPANTAG_MODEL_IO_HPP_
#define SPANTAG_MODEL_IO_HPP_

#include <iosfwd>
#include <string>

#include "spantag/crf_model.hpp"

namespace spantag {

// Versioned, platform-independent model container: declared little-endian
// byte order, 64-bit IEEE floats. A round trip reproduces bit-identical
// weights. Unknown versions raise VersionMismatchError; truncated or
// mangled files raise CorruptModelError.
void save_model(const CrfModel& model, const std::string& path);
CrfModel load_model(const std::string& path);

void save_model(const CrfModel& model, std::ostream& out);
CrfModel load_model(std::istream& in);

}  // namespace spantag

#endif  // SPANTAG_MODEL_IO_HPP_
