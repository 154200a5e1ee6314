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


#include "ccmatch/lexer.hpp"

#include <algorithm>
#include <stdexcept>

#include "scanner.hpp"

namespace ccmatch {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Reserved: return "reserved";
    case TokenKind::Delimiter: return "delimiter";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Literal: return "literal";
  }
  return "?";
}

LineTable::LineTable(std::string source) : source_(std::move(source)) {
  starts_.push_back(0);
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if (source_[i] == '\n' && i + 1 < source_.size()) starts_.push_back(i + 1);
  }
}

std::string_view LineTable::line(std::size_t number) const {
  if (number == 0 || number > starts_.size())
    throw std::out_of_range("line " + std::to_string(number) + " not in line table");
  const std::size_t begin = starts_[number - 1];
  std::size_t end = number < starts_.size() ? starts_[number] - 1 : source_.size();
  if (end > begin && source_[end - 1] == '\n') --end;
  return std::string_view(source_).substr(begin, end - begin);
}

std::size_t LineTable::line_of(std::size_t offset) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
  return static_cast<std::size_t>(it - starts_.begin());
}

std::size_t LineTable::line_start_offset(std::size_t number) const {
  return starts_.at(number - 1);
}

std::size_t find_invalid_utf8(std::string_view text) {
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = s[i];
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len = 0;
    unsigned lo = 0x80, hi = 0xBF;
    if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      if (c == 0xE0) lo = 0xA0;
      if (c == 0xED) hi = 0x9F;  // no surrogates
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      if (c == 0xF0) lo = 0x90;
      if (c == 0xF4) hi = 0x8F;
    } else {
      return i;
    }
    if (i + len > n) return i;
    if (s[i + 1] < lo || s[i + 1] > hi) return i;
    for (std::size_t k = 2; k < len; ++k) {
      if (s[i + k] < 0x80 || s[i + k] > 0xBF) return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

namespace detail {

TokenKind classify_word(const Language& lang, std::string_view word) {
  if (lang.literal_words.contains(word)) return TokenKind::Literal;
  if (lang.reserved_words.contains(word)) return TokenKind::Reserved;
  return TokenKind::Identifier;
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

bool Scanner::is_ident_start(unsigned char c) const {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80) return true;
  return c == '$' && mode_ == Mode::Target;
}

bool Scanner::is_ident_char(unsigned char c) const {
  return is_ident_start(c) || is_digit(static_cast<char>(c));
}

bool Scanner::skip_trivia() {
  while (!at_end()) {
    const char c = peek();
    if (is_space(c)) {
      ++pos_;
    } else if (pos_ == 0 && starts_with("\xEF\xBB\xBF")) {
      pos_ += 3;
    } else if (lang_.line_splices && c == '\\' &&
               (peek(1) == '\n' || (peek(1) == '\r' && peek(2) == '\n'))) {
      pos_ += peek(1) == '\n' ? 2 : 3;
    } else if (starts_with(lang_.line_comment)) {
      while (!at_end() && peek() != '\n') {
        if (lang_.line_splices && peek() == '\\' && peek(1) == '\n') ++pos_;
        ++pos_;
      }
    } else if (starts_with(lang_.block_comment_open)) {
      const std::size_t close =
          text_.find(lang_.block_comment_close, pos_ + lang_.block_comment_open.size());
      if (close == std::string_view::npos) {
        diagnostics_.push_back({pos_, "unterminated block comment"});
        pos_ = text_.size();
      } else {
        pos_ = close + lang_.block_comment_close.size();
      }
    } else {
      break;
    }
  }
  return !at_end();
}

void Scanner::lex_quoted(char quote) {
  const std::size_t start = pos_;
  ++pos_;
  while (true) {
    if (at_end() || peek() == '\n') {
      diagnostics_.push_back({start, quote == '"' ? "unterminated string literal"
                                                  : "unterminated character literal"});
      // Stop before the newline; a CRLF's '\r' stays out of the token too.
      if (pos_ > start + 1 && text_[pos_ - 1] == '\r') --pos_;
      return;
    }
    const char c = peek();
    if (c == '\\') {
      pos_ = std::min(pos_ + 2, text_.size());
      continue;
    }
    ++pos_;
    if (c == quote) return;
  }
}

void Scanner::lex_text_block() {
  const std::size_t start = pos_;
  pos_ += 3;
  while (!at_end()) {
    if (peek() == '\\') {
      pos_ = std::min(pos_ + 2, text_.size());
      continue;
    }
    if (starts_with("\"\"\"")) {
      pos_ += 3;
      return;
    }
    ++pos_;
  }
  pos_ = text_.size();
  diagnostics_.push_back({start, "unterminated text block"});
}

void Scanner::lex_number() {
  // Preprocessing-number shape: covers decimal, hex, octal, binary, floats,
  // exponents, digit separators and suffixes in both languages.
  ++pos_;
  while (!at_end()) {
    const char c = peek();
    if ((c == '+' || c == '-') &&
        (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E' || text_[pos_ - 1] == 'p' ||
         text_[pos_ - 1] == 'P')) {
      ++pos_;
    } else if (is_digit(c) || c == '.' || c == '_' ||
               (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      ++pos_;
    } else if (c == '\'' && lang_.id == LanguageId::C &&
               is_digit(peek(1))) {
      pos_ += 2;  // C23 digit separator
    } else {
      break;
    }
  }
}

RawToken Scanner::lex_regular() {
  const std::size_t start = pos_;
  const auto c = static_cast<unsigned char>(peek());

  if (is_ident_start(c)) {
    while (!at_end() && is_ident_char(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if ((peek() == '"' || peek() == '\'') &&
        std::find(lang_.literal_prefixes.begin(), lang_.literal_prefixes.end(), word) !=
            lang_.literal_prefixes.end()) {
      lex_quoted(peek());
      return {TokenKind::Literal, start, pos_};
    }
    return {classify_word(lang_, word), start, pos_};
  }
  if (is_digit(static_cast<char>(c)) || (c == '.' && is_digit(peek(1)))) {
    lex_number();
    return {TokenKind::Literal, start, pos_};
  }
  if (c == '"') {
    if (lang_.text_blocks && peek(1) == '"' && peek(2) == '"') {
      lex_text_block();
    } else {
      lex_quoted('"');
    }
    return {TokenKind::Literal, start, pos_};
  }
  if (c == '\'') {
    lex_quoted('\'');
    return {TokenKind::Literal, start, pos_};
  }
  for (std::string_view d : lang_.delimiters) {
    if (starts_with(d)) {
      pos_ += d.size();
      return {TokenKind::Delimiter, start, pos_};
    }
  }
  // Stray character: keep it as a one-byte delimiter so ill-formed code
  // still tokenizes.
  ++pos_;
  return {TokenKind::Delimiter, start, pos_};
}

}  // namespace detail

TokenStream tokenize(std::string text, const Language& lang, std::string path) {
  if (const std::size_t bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    throw EncodingError(bad, "invalid UTF-8 at byte " + std::to_string(bad));
  }

  TokenStream stream;
  stream.path = std::move(path);
  stream.lines = LineTable(std::move(text));
  const std::string& source = stream.lines.source();
  const LineTable& lines = stream.lines;

  detail::Scanner scanner(source, lang, detail::Scanner::Mode::Target);
  stream.tokens.reserve(source.size() / 4);
  while (scanner.skip_trivia()) {
    const detail::RawToken raw = scanner.lex_regular();
    Token token;
    token.kind = raw.kind;
    token.text.assign(source, raw.begin, raw.end - raw.begin);
    const std::size_t first_line = lines.line_of(raw.begin);
    const std::size_t last_line = lines.line_of(raw.end - 1);
    token.span.line_start = static_cast<std::uint32_t>(first_line);
    token.span.col_start =
        static_cast<std::uint32_t>(raw.begin - lines.line_start_offset(first_line) + 1);
    token.span.line_end = static_cast<std::uint32_t>(last_line);
    token.span.col_end =
        static_cast<std::uint32_t>(raw.end - 1 - lines.line_start_offset(last_line) + 1);
    token.span.byte_start = raw.begin;
    token.span.byte_end = raw.end;
    stream.tokens.push_back(std::move(token));
  }

  for (const auto& diag : scanner.diagnostics()) {
    stream.diagnostics.push_back(std::to_string(lines.line_of(diag.offset)) + ": " +
                                 diag.message);
  }
  return stream;
}

}  // namespace ccmatch
