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


#include "ccmatch/matcher.hpp"

#include <algorithm>

namespace ccmatch {

std::optional<std::string_view> BindingTable::forward(TokenKind ns,
                                                      std::string_view symbol) const {
  for (const auto& [sym, text] : pairs(ns)) {
    if (sym == symbol) return text;
  }
  return std::nullopt;
}

std::optional<std::string_view> BindingTable::reverse(TokenKind ns, std::string_view text) const {
  for (const auto& [sym, txt] : pairs(ns)) {
    if (txt == text) return sym;
  }
  return std::nullopt;
}

bool BindingTable::bind(TokenKind ns, std::string_view symbol, std::string_view text) {
  for (const auto& [sym, txt] : pairs(ns)) {
    const bool same_symbol = sym == symbol;
    const bool same_text = txt == text;
    if (same_symbol || same_text) return same_symbol && same_text;
  }
  pairs(ns).emplace_back(symbol, text);
  return true;
}

namespace {

bool blind_accepts(TokenKind ns, const std::string& symbol, const Token& token,
                   BindingTable& table, BlindLevel blind) {
  if (token.kind != ns) return false;
  switch (blind) {
    case BlindLevel::Full: return true;
    case BlindLevel::Consistent: return table.bind(ns, symbol, token.text);
    case BlindLevel::None: return token.text == symbol;
  }
  return false;
}

int bracket_delta(const Token& token) {
  if (token.kind != TokenKind::Delimiter || token.text.size() != 1) return 0;
  switch (token.text[0]) {
    case '(':
    case '[':
    case '{':
      return 1;
    case ')':
    case ']':
    case '}':
      return -1;
    default:
      return 0;
  }
}

// Backtracking matcher in continuation-passing style. A Frame is "the rest of
// the pattern": a position inside one element sequence plus the frame to
// resume once that sequence is exhausted. A frame with no sequence accepts.
class Engine {
 public:
  Engine(std::span<const Token> tokens, BlindLevel blind) : tokens_(tokens), blind_(blind) {}

  bool run(const ElementSequence& elements, std::size_t start) {
    table_.clear();
    wildcards_.clear();
    const Frame accept{nullptr, 0, nullptr};
    const Frame top{&elements, 0, &accept};
    return match(&top, start);
  }

  std::size_t end() const { return accepted_; }
  BindingTable& bindings() { return table_; }
  std::vector<WildcardExtent>& wildcards() { return wildcards_; }

 private:
  struct Frame {
    const ElementSequence* seq;
    std::size_t index;
    const Frame* parent;
  };

  // On failure the binding table and wildcard list are left as on entry.
  bool match(const Frame* frame, std::size_t pos) {
    if (frame->seq == nullptr) {
      accepted_ = pos;
      return true;
    }
    if (frame->index == frame->seq->size()) return match(frame->parent, pos);

    const PatternElement& element = (*frame->seq)[frame->index];
    const Frame next{frame->seq, frame->index + 1, frame->parent};

    return std::visit(
        [&](const auto& node) -> bool {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Exact>) {
            if (pos >= tokens_.size()) return false;
            const Token& t = tokens_[pos];
            return t.kind == node.kind && t.text == node.text && match(&next, pos + 1);
          } else if constexpr (std::is_same_v<T, BlindIdentifier> ||
                               std::is_same_v<T, BlindLiteral>) {
            constexpr TokenKind ns = std::is_same_v<T, BlindIdentifier> ? TokenKind::Identifier
                                                                        : TokenKind::Literal;
            if (pos >= tokens_.size()) return false;
            const auto mark = table_.mark();
            if (!blind_accepts(ns, node.symbol, tokens_[pos], table_, blind_)) return false;
            if (match(&next, pos + 1)) return true;
            table_.rollback(mark);
            return false;
          } else if constexpr (std::is_same_v<T, AnyOne>) {
            if (pos >= tokens_.size()) return false;
            return with_extent(WildcardExtent::Kind::AnyOne, pos, pos + 1, next);
          } else if constexpr (std::is_same_v<T, Gap>) {
            for (std::size_t p = pos; p <= tokens_.size(); ++p) {
              if (with_extent(WildcardExtent::Kind::Gap, pos, p, next)) return true;
            }
            return false;
          } else if constexpr (std::is_same_v<T, BalancedGap>) {
            return balanced_gap(pos, next);
          } else if constexpr (std::is_same_v<T, Alternation>) {
            for (const ElementSequence& branch : node.branches) {
              const Frame inner{&branch, 0, &next};
              if (match(&inner, pos)) return true;
            }
            return false;
          } else if constexpr (std::is_same_v<T, Group>) {
            const Frame inner{&node.body, 0, &next};
            return match(&inner, pos);
          } else if constexpr (std::is_same_v<T, Repetition>) {
            return repetition(node, pos, next);
          }
        },
        element.node);
  }

  bool with_extent(WildcardExtent::Kind kind, std::size_t begin, std::size_t end,
                   const Frame& next) {
    wildcards_.push_back({kind, begin, end});
    if (match(&next, end)) return true;
    wildcards_.pop_back();
    return false;
  }

  bool balanced_gap(std::size_t pos, const Frame& next) {
    int depth = 0;
    for (std::size_t p = pos;; ++p) {
      if (depth == 0 && with_extent(WildcardExtent::Kind::BalancedGap, pos, p, next)) return true;
      if (p == tokens_.size()) return false;
      const int delta = bracket_delta(tokens_[p]);
      // A closer with nothing open belongs to the enclosing construct.
      if (delta < 0 && depth == 0) return false;
      depth += delta;
    }
  }

  bool repetition(const Repetition& rep, std::size_t pos, const Frame& next) {
    const auto table_mark = table_.mark();
    const std::size_t wildcard_mark = wildcards_.size();
    const Frame accept{nullptr, 0, nullptr};
    const Frame body{&rep.body, 0, &accept};

    std::size_t count = 0;
    std::size_t p = pos;
    while (!rep.bounded() || count < 1) {
      if (!match(&body, p)) break;
      ++count;
      const std::size_t q = accepted_;
      // An iteration that consumed nothing would repeat forever.
      if (q == p) break;
      p = q;
    }
    if (count >= rep.min_count() && match(&next, p)) return true;
    table_.rollback(table_mark);
    wildcards_.resize(wildcard_mark);
    return false;
  }

  std::span<const Token> tokens_;
  BlindLevel blind_;
  BindingTable table_;
  std::vector<WildcardExtent> wildcards_;
  std::size_t accepted_ = 0;
};

}  // namespace

bool try_bind(const PatternElement& element, const Token& token, BindingTable& table,
              BlindLevel blind) {
  if (const auto* exact = std::get_if<Exact>(&element.node)) {
    return token.kind == exact->kind && token.text == exact->text;
  }
  if (const auto* id = std::get_if<BlindIdentifier>(&element.node)) {
    return blind_accepts(TokenKind::Identifier, id->symbol, token, table, blind);
  }
  if (const auto* lit = std::get_if<BlindLiteral>(&element.node)) {
    return blind_accepts(TokenKind::Literal, lit->symbol, token, table, blind);
  }
  return false;
}

std::optional<MatchResult> match_at(const Pattern& pattern, std::span<const Token> tokens,
                                    std::size_t start, BlindLevel blind) {
  if (start > tokens.size()) return std::nullopt;
  Engine engine(tokens, blind);
  if (!engine.run(pattern.elements, start)) return std::nullopt;
  MatchResult result;
  result.end = engine.end();
  result.bindings = std::move(engine.bindings());
  result.wildcards = std::move(engine.wildcards());
  return result;
}

std::vector<Match> scan(const Pattern& pattern, const TokenStream& stream, BlindLevel blind) {
  std::vector<Match> matches;
  const auto& tokens = stream.tokens;
  Engine engine(tokens, blind);
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!engine.run(pattern.elements, i) || engine.end() == i) {
      ++i;
      continue;
    }
    const std::size_t end = engine.end();
    Match m;
    m.path = stream.path;
    m.token_start = i;
    m.token_end = end;
    const SourceSpan& first = tokens[i].span;
    const SourceSpan& last = tokens[end - 1].span;
    m.span = {first.line_start, first.col_start, last.line_end,
              last.col_end,     first.byte_start, last.byte_end};
    m.bindings = engine.bindings();
    matches.push_back(std::move(m));
    i = end;
  }
  return matches;
}

}  // namespace ccmatch
