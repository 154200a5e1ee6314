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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccmatch/pattern.hpp"
#include "ccmatch/token.hpp"

namespace ccmatch {

// Query symbol <-> target text correspondences for one match attempt.
// Identifiers and literals live in separate namespaces. Each namespace is a
// list of pairs that serves as both the forward and the reverse map, so the
// two stay mutual inverses.
class BindingTable {
 public:
  using Pairs = std::vector<std::pair<std::string, std::string>>;

  // Target text bound to a query symbol.
  std::optional<std::string_view> forward(TokenKind ns, std::string_view symbol) const;
  // Query symbol bound to a target text.
  std::optional<std::string_view> reverse(TokenKind ns, std::string_view text) const;

  // Adds symbol<->text unless that would break bijectivity. An identical
  // existing pair is accepted without change.
  bool bind(TokenKind ns, std::string_view symbol, std::string_view text);

  const Pairs& identifiers() const { return identifiers_; }
  const Pairs& literals() const { return literals_; }
  bool empty() const { return identifiers_.empty() && literals_.empty(); }

  struct Mark {
    std::size_t identifiers;
    std::size_t literals;
  };
  Mark mark() const { return {identifiers_.size(), literals_.size()}; }
  void rollback(Mark m) {
    identifiers_.resize(m.identifiers);
    literals_.resize(m.literals);
  }
  void clear() { rollback({0, 0}); }

  bool operator==(const BindingTable&) const = default;

 private:
  Pairs& pairs(TokenKind ns) { return ns == TokenKind::Literal ? literals_ : identifiers_; }
  const Pairs& pairs(TokenKind ns) const {
    return ns == TokenKind::Literal ? literals_ : identifiers_;
  }

  Pairs identifiers_;
  Pairs literals_;
};

// Decides one token-level element (Exact, BlindIdentifier or BlindLiteral)
// against one target token. Blind acceptance under Consistent records the
// binding in `table`. Any other element kind is rejected.
bool try_bind(const PatternElement& element, const Token& token, BindingTable& table,
              BlindLevel blind);

// Tokens swallowed by one wildcard ($., $#, $$) in the final alignment.
struct WildcardExtent {
  enum class Kind { AnyOne, Gap, BalancedGap };
  Kind kind;
  std::size_t begin;
  std::size_t end;
};

struct MatchResult {
  std::size_t end = 0;
  BindingTable bindings;
  // In pattern traversal order.
  std::vector<WildcardExtent> wildcards;
};

// First alignment of `pattern` starting at token `start`: token elements
// consume one token, $# and $$ are reluctant, alternatives are tried left to
// right, and repetitions are possessive. May return an empty alignment
// (end == start) when the pattern can match nothing.
std::optional<MatchResult> match_at(const Pattern& pattern, std::span<const Token> tokens,
                                    std::size_t start, BlindLevel blind);

struct Match {
  std::string path;
  std::size_t token_start = 0;
  std::size_t token_end = 0;
  SourceSpan span;
  BindingTable bindings;
};

// Leftmost, non-overlapping matches in token order. Empty alignments are not
// reported.
std::vector<Match> scan(const Pattern& pattern, const TokenStream& stream, BlindLevel blind);

}  // namespace ccmatch
