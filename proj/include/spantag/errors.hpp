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

#ifndef SPANTAG_ERRORS_HPP_
#define SPANTAG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spantag {

// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// codec
struct OverlapError : Error { using Error::Error; };
struct InterleavingError : Error { using Error::Error; };
struct IllegalDiscontiguityError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct DanglingContinuationError : Error { using Error::Error; };
struct OrphanTailError : Error { using Error::Error; };
struct DoubleTailError : Error { using Error::Error; };

// corpus io
struct MalformedLineError : Error { using Error::Error; };
struct UnknownTypeError : Error { using Error::Error; };
struct FragmentCountError : Error { using Error::Error; };
struct BoundaryMismatchError : Error { using Error::Error; };
struct EmptyDatasetError : Error { using Error::Error; };

// crf engine
struct DimensionMismatchError : Error { using Error::Error; };
struct EmptySentenceError : Error { using Error::Error; };
struct IllegalGoldSequenceError : Error { using Error::Error; };
struct VersionMismatchError : Error { using Error::Error; };
struct CorruptModelError : Error { using Error::Error; };

// metrics / lexicon
struct AlignmentError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };
struct InvalidArgumentError : Error { using Error::Error; };
struct EmptySpanError : Error { using Error::Error; };
struct NotEnoughEligibleError : Error { using Error::Error; };

// generic file handling
struct IoError : Error { using Error::Error; };

}  // namespace spantag

#endif  // SPANTAG_ERRORS_HPP_
