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

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "ccmatch/language.hpp"
#include "ccmatch/token.hpp"

namespace ccmatch {

enum class BlindLevel {
  None,        // identifiers and literals must match exactly (type 1)
  Consistent,  // bijective renaming (P-match, type 2)
  Full,        // any identifier for any identifier, any literal for any literal
};

std::string_view to_string(BlindLevel level);

struct PatternElement;
using ElementSequence = std::vector<PatternElement>;

// Reserved word, delimiter, or pinned identifier/literal.
struct Exact {
  TokenKind kind;
  std::string text;
  bool operator==(const Exact&) const = default;
};

struct BlindIdentifier {
  std::string symbol;
  bool operator==(const BlindIdentifier&) const = default;
};

struct BlindLiteral {
  std::string symbol;
  bool operator==(const BlindLiteral&) const = default;
};

// $.
struct AnyOne {
  bool operator==(const AnyOne&) const = default;
};

// $#  reluctant, ignores brackets.
struct Gap {
  bool operator==(const Gap&) const = default;
};

// $$  reluctant, only stops outside balanced (), [] and {}.
struct BalancedGap {
  bool operator==(const BalancedGap&) const = default;
};

struct Alternation {
  std::vector<ElementSequence> branches;
  bool operator==(const Alternation& other) const;
};

enum class Quantifier { ZeroOrMore, OneOrMore, ZeroOrOne };

// Possessive: iterates as often as the body matches, never gives back.
struct Repetition {
  ElementSequence body;
  Quantifier quantifier;

  std::size_t min_count() const { return quantifier == Quantifier::OneOrMore ? 1 : 0; }
  bool bounded() const { return quantifier == Quantifier::ZeroOrOne; }
  bool operator==(const Repetition& other) const;
};

struct Group {
  ElementSequence body;
  bool operator==(const Group& other) const;
};

struct PatternElement {
  using Node = std::variant<Exact, BlindIdentifier, BlindLiteral, AnyOne, Gap, BalancedGap,
                            Alternation, Repetition, Group>;
  Node node;

  template <typename T>
    requires(!std::same_as<std::remove_cvref_t<T>, PatternElement>)
  PatternElement(T value) : node(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  template <typename T>
  bool is() const { return std::holds_alternative<T>(node); }

  bool operator==(const PatternElement& other) const { return node == other.node; }
};

struct Pattern {
  ElementSequence elements;
  LanguageId language = LanguageId::Java;

  bool operator==(const Pattern&) const = default;
};

class QueryParseError : public std::runtime_error {
 public:
  QueryParseError(std::size_t offset, std::size_t line, std::size_t column,
                  const std::string& message);
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

// Parses a query snippet. Unannotated identifiers and literals become blind
// elements, except under BlindLevel::None where they are matched exactly.
// Throws QueryParseError.
Pattern parse_query(std::string_view text, LanguageId language, BlindLevel blind);

// Canonical query text; parse_query(to_query_text(p)) reproduces p under the
// blind level p was parsed with.
std::string to_query_text(const Pattern& pattern);
std::string to_query_text(const ElementSequence& elements);

}  // namespace ccmatch
