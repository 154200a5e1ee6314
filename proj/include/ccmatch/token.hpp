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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ccmatch {

enum class TokenKind : std::uint8_t { Reserved, Delimiter, Identifier, Literal };

std::string_view to_string(TokenKind kind);

// Lines and columns are 1-based (columns count bytes). The byte range is
// half-open; line_end/col_end address the last byte of the token.
struct SourceSpan {
  std::uint32_t line_start = 0;
  std::uint32_t col_start = 0;
  std::uint32_t line_end = 0;
  std::uint32_t col_end = 0;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;

  bool operator==(const SourceSpan&) const = default;
};

struct Token {
  TokenKind kind = TokenKind::Delimiter;
  std::string text;
  SourceSpan span;
};

// Original file text indexed by line, used to echo matched lines verbatim.
class LineTable {
 public:
  LineTable() = default;
  explicit LineTable(std::string source);

  std::size_t line_count() const { return starts_.size(); }

  // Text of a 1-based line without its '\n'. Throws std::out_of_range for a
  // line the table does not have.
  std::string_view line(std::size_t number) const;

  // 1-based line containing the byte at `offset`.
  std::size_t line_of(std::size_t offset) const;
  std::size_t line_start_offset(std::size_t number) const;

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::vector<std::size_t> starts_;
};

struct TokenStream {
  std::string path;
  std::vector<Token> tokens;
  LineTable lines;
  // Non-fatal lexing problems (unterminated comments or literals).
  std::vector<std::string> diagnostics;
};

}  // namespace ccmatch
