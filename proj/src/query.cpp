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


#include <optional>

#include "ccmatch/pattern.hpp"
#include "scanner.hpp"

namespace ccmatch {

std::string_view to_string(BlindLevel level) {
  switch (level) {
    case BlindLevel::None: return "none";
    case BlindLevel::Consistent: return "consistent";
    case BlindLevel::Full: return "full";
  }
  return "?";
}

bool Alternation::operator==(const Alternation& other) const { return branches == other.branches; }
bool Repetition::operator==(const Repetition& other) const {
  return quantifier == other.quantifier && body == other.body;
}
bool Group::operator==(const Group& other) const { return body == other.body; }

QueryParseError::QueryParseError(std::size_t offset, std::size_t line, std::size_t column,
                                 const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      offset_(offset),
      line_(line),
      column_(column) {}

namespace {

enum class QueryTokenType {
  Regular,
  Pinned,
  AnyOne,
  Gap,
  BalancedGap,
  Or,
  Star,
  Plus,
  Question,
  Open,
  Close,
};

struct QueryToken {
  QueryTokenType type;
  TokenKind kind = TokenKind::Delimiter;
  std::string text;
  std::size_t offset = 0;
};

class QueryParser {
 public:
  QueryParser(std::string_view text, LanguageId language, BlindLevel blind)
      : text_(text), lang_(ccmatch::language(language)), blind_(blind) {}

  Pattern parse() {
    lex();
    if (tokens_.empty()) fail(0, "empty query");

    Pattern pattern;
    pattern.language = lang_.id;
    pattern.elements = parse_alternatives(std::nullopt);
    if (pos_ < tokens_.size()) fail(tokens_[pos_].offset, "unbalanced '$)'");

    gap_index_ = 0;
    check_gaps(pattern.elements, false);
    return pattern;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw QueryParseError(offset, line, column, message);
  }

  void lex() {
    detail::Scanner scanner(text_, lang_, detail::Scanner::Mode::Query);
    while (scanner.skip_trivia()) {
      const std::size_t offset = scanner.offset();
      if (scanner.peek() != '$') {
        const detail::RawToken raw = scanner.lex_regular();
        tokens_.push_back({QueryTokenType::Regular, raw.kind,
                           std::string(text_.substr(raw.begin, raw.end - raw.begin)), offset});
        continue;
      }
      std::optional<QueryTokenType> meta;
      switch (scanner.peek(1)) {
        case '.': meta = QueryTokenType::AnyOne; break;
        case '#': meta = QueryTokenType::Gap; break;
        case '$': meta = QueryTokenType::BalancedGap; break;
        case '|': meta = QueryTokenType::Or; break;
        case '*': meta = QueryTokenType::Star; break;
        case '+': meta = QueryTokenType::Plus; break;
        case '?': meta = QueryTokenType::Question; break;
        case '(': meta = QueryTokenType::Open; break;
        case ')': meta = QueryTokenType::Close; break;
        default: break;
      }
      if (meta) {
        scanner.advance(2);
        tokens_.push_back({*meta, TokenKind::Delimiter, std::string(text_.substr(offset, 2)),
                           offset});
        continue;
      }
      scanner.advance(1);
      const char next = scanner.peek();
      if (scanner.at_end() || next == ' ' || next == '\t' || next == '\n' || next == '\r') {
        fail(offset, "'$' must be followed by an identifier, a literal or a meta symbol");
      }
      const detail::RawToken raw = scanner.lex_regular();
      if (raw.kind != TokenKind::Identifier && raw.kind != TokenKind::Literal) {
        fail(offset, "only identifiers and literals can be pinned with '$'");
      }
      tokens_.push_back({QueryTokenType::Pinned, raw.kind,
                         std::string(text_.substr(raw.begin, raw.end - raw.begin)), offset});
    }
  }

  bool at(QueryTokenType type) const { return pos_ < tokens_.size() && tokens_[pos_].type == type; }

  // Alternatives up to a closing '$)' (not consumed) or end of input. A single
  // alternative is returned as-is; several collapse into one Alternation.
  ElementSequence parse_alternatives(std::optional<std::size_t> open_offset) {
    std::vector<ElementSequence> branches;
    while (true) {
      const std::size_t branch_offset =
          pos_ < tokens_.size() ? tokens_[pos_].offset : text_.size();
      ElementSequence branch = parse_sequence();
      if (branch.empty()) {
        if (at(QueryTokenType::Or) || !branches.empty()) fail(branch_offset, "empty alternative");
        fail(open_offset.value_or(branch_offset), open_offset ? "empty group" : "empty query");
      }
      branches.push_back(std::move(branch));
      if (!at(QueryTokenType::Or)) break;
      ++pos_;
    }
    if (branches.size() == 1) return std::move(branches.front());
    ElementSequence result;
    result.emplace_back(Alternation{std::move(branches)});
    return result;
  }

  ElementSequence parse_sequence() {
    ElementSequence seq;
    while (pos_ < tokens_.size()) {
      const QueryToken& tok = tokens_[pos_];
      switch (tok.type) {
        case QueryTokenType::Or:
        case QueryTokenType::Close:
          return seq;
        case QueryTokenType::Star:
        case QueryTokenType::Plus:
        case QueryTokenType::Question:
          apply_quantifier(seq, tok);
          ++pos_;
          break;
        case QueryTokenType::Open: {
          ++pos_;
          ElementSequence body = parse_alternatives(tok.offset);
          if (!at(QueryTokenType::Close)) fail(tok.offset, "unbalanced '$('");
          ++pos_;
          if (body.size() == 1 && body.front().is<Alternation>()) {
            seq.push_back(std::move(body.front()));
          } else {
            seq.emplace_back(Group{std::move(body)});
          }
          break;
        }
        case QueryTokenType::AnyOne:
          seq.emplace_back(AnyOne{});
          ++pos_;
          break;
        case QueryTokenType::Gap:
          seq.emplace_back(Gap{});
          gap_offsets_.push_back(tok.offset);
          ++pos_;
          break;
        case QueryTokenType::BalancedGap:
          seq.emplace_back(BalancedGap{});
          gap_offsets_.push_back(tok.offset);
          ++pos_;
          break;
        case QueryTokenType::Pinned:
          seq.emplace_back(Exact{tok.kind, tok.text});
          ++pos_;
          break;
        case QueryTokenType::Regular:
          seq.push_back(regular_element(tok));
          ++pos_;
          break;
      }
    }
    return seq;
  }

  PatternElement regular_element(const QueryToken& tok) const {
    if (blind_ != BlindLevel::None) {
      if (tok.kind == TokenKind::Identifier) return BlindIdentifier{tok.text};
      if (tok.kind == TokenKind::Literal) return BlindLiteral{tok.text};
    }
    return Exact{tok.kind, tok.text};
  }

  void apply_quantifier(ElementSequence& seq, const QueryToken& tok) {
    if (seq.empty()) fail(tok.offset, "quantifier '" + tok.text + "' has no preceding element");
    PatternElement& last = seq.back();
    if (last.is<Gap>() || last.is<BalancedGap>())
      fail(tok.offset, "wildcards '$#' and '$$' cannot be repeated");
    if (last.is<Repetition>()) fail(tok.offset, "quantifier follows another quantifier");

    const Quantifier q = tok.type == QueryTokenType::Star   ? Quantifier::ZeroOrMore
                         : tok.type == QueryTokenType::Plus ? Quantifier::OneOrMore
                                                            : Quantifier::ZeroOrOne;
    ElementSequence body;
    if (auto* group = std::get_if<Group>(&last.node)) {
      body = std::move(group->body);
    } else {
      body.push_back(std::move(last));
    }
    last = Repetition{std::move(body), q};
  }

  // A gap needs a terminator after it inside its own alternative or
  // repetition body; only plain groups let the terminator come from outside.
  void check_gaps(const ElementSequence& seq, bool followed) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const bool next_follows = i + 1 < seq.size() || followed;
      const auto& node = seq[i].node;
      if (std::holds_alternative<Gap>(node) || std::holds_alternative<BalancedGap>(node)) {
        const std::size_t offset = gap_offsets_.at(gap_index_++);
        if (!next_follows) fail(offset, "wildcard requires a following token");
      } else if (const auto* group = std::get_if<Group>(&node)) {
        check_gaps(group->body, next_follows);
      } else if (const auto* alt = std::get_if<Alternation>(&node)) {
        for (const auto& branch : alt->branches) check_gaps(branch, false);
      } else if (const auto* rep = std::get_if<Repetition>(&node)) {
        check_gaps(rep->body, false);
      }
    }
  }

  std::string_view text_;
  const Language& lang_;
  BlindLevel blind_;
  std::vector<QueryToken> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> gap_offsets_;
  std::size_t gap_index_ = 0;
};

void render(const ElementSequence& elements, std::string& out);

void render_element(const PatternElement& element, std::string& out) {
  std::visit(
      [&out](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Exact>) {
          if (node.kind == TokenKind::Identifier || node.kind == TokenKind::Literal) out += '$';
          out += node.text;
        } else if constexpr (std::is_same_v<T, BlindIdentifier> ||
                             std::is_same_v<T, BlindLiteral>) {
          out += node.symbol;
        } else if constexpr (std::is_same_v<T, AnyOne>) {
          out += "$.";
        } else if constexpr (std::is_same_v<T, Gap>) {
          out += "$#";
        } else if constexpr (std::is_same_v<T, BalancedGap>) {
          out += "$$";
        } else if constexpr (std::is_same_v<T, Alternation>) {
          out += "$( ";
          for (std::size_t i = 0; i < node.branches.size(); ++i) {
            if (i > 0) out += " $| ";
            render(node.branches[i], out);
          }
          out += " $)";
        } else if constexpr (std::is_same_v<T, Repetition>) {
          const bool single = node.body.size() == 1 && !node.body.front().template is<Group>();
          if (single) {
            render_element(node.body.front(), out);
          } else {
            out += "$( ";
            render(node.body, out);
            out += " $)";
          }
          out += node.quantifier == Quantifier::ZeroOrMore  ? " $*"
                 : node.quantifier == Quantifier::OneOrMore ? " $+"
                                                            : " $?";
        } else if constexpr (std::is_same_v<T, Group>) {
          out += "$( ";
          render(node.body, out);
          out += " $)";
        }
      },
      element.node);
}

void render(const ElementSequence& elements, std::string& out) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ' ';
    render_element(elements[i], out);
  }
}

}  // namespace

Pattern parse_query(std::string_view text, LanguageId language, BlindLevel blind) {
  return QueryParser(text, language, blind).parse();
}

std::string to_query_text(const ElementSequence& elements) {
  std::string out;
  render(elements, out);
  return out;
}

std::string to_query_text(const Pattern& pattern) { return to_query_text(pattern.elements); }

}  // namespace ccmatch
