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

// Character-level scanner shared by the target tokenizer and the query
// parser. The query parser drives it token by token so it can intercept '$'.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ccmatch/language.hpp"
#include "ccmatch/token.hpp"

namespace ccmatch::detail {

struct RawToken {
  TokenKind kind;
  std::size_t begin;
  std::size_t end;
};

struct LexDiagnostic {
  std::size_t offset;
  std::string message;
};

class Scanner {
 public:
  enum class Mode { Target, Query };

  Scanner(std::string_view text, const Language& lang, Mode mode)
      : text_(text), lang_(lang), mode_(mode) {}

  // Skips whitespace, comments and line splices. False once input is exhausted.
  bool skip_trivia();

  // Lexes the regular token starting at the current offset. Requires !at_end().
  RawToken lex_regular();

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t offset() const { return pos_; }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void advance(std::size_t n) { pos_ += n; }

  const std::vector<LexDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  bool starts_with(std::string_view s) const {
    return !s.empty() && text_.substr(pos_).starts_with(s);
  }
  bool is_ident_start(unsigned char c) const;
  bool is_ident_char(unsigned char c) const;
  void lex_quoted(char quote);
  void lex_text_block();
  void lex_number();

  std::string_view text_;
  const Language& lang_;
  Mode mode_;
  std::size_t pos_ = 0;
  std::vector<LexDiagnostic> diagnostics_;
};

TokenKind classify_word(const Language& lang, std::string_view word);

}  // namespace ccmatch::detail
