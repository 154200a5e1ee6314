// Copyright 2026 The ccmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ccmatch/language.hpp"
#include "ccmatch/token.hpp"

namespace ccmatch {

// Raised when target text is not valid UTF-8.
class EncodingError : public std::runtime_error {
 public:
  EncodingError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Offset of the first byte that breaks UTF-8 well-formedness, or npos.
std::size_t find_invalid_utf8(std::string_view text);

// Splits source text into reserved words, delimiters, identifiers and
// literals. Comments and whitespace produce no tokens. Unterminated comments
// and literals are lexed to a best-effort end and reported in
// TokenStream::diagnostics. Throws EncodingError for invalid UTF-8.
TokenStream tokenize(std::string text, const Language& lang, std::string path = {});

}  // namespace ccmatch
