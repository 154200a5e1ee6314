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


#include "properties.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "ccmatch/lexer.hpp"
#include "ccmatch/matcher.hpp"
#include "generators.hpp"
#include "oracle.hpp"

namespace ccmatch::testing {

void PropertyResult::violate(std::string description) {
  if (violations == 0) counterexample = std::move(description);
  ++violations;
}

namespace {

constexpr BlindLevel kLevels[] = {BlindLevel::None, BlindLevel::Consistent, BlindLevel::Full};

std::string stream_text(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

std::string describe(const Pattern& p, const std::vector<Token>& tokens, std::size_t start,
                     BlindLevel blind) {
  std::ostringstream out;
  out << "pattern `" << to_query_text(p) << "` stream `" << stream_text(tokens) << "` start "
      << start << " blind " << to_string(blind);
  return out.str();
}

bool same_extents(const std::vector<WildcardExtent>& a, const std::vector<WildcardExtent>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return x.kind == y.kind && x.begin == y.begin && x.end == y.end;
  });
}

std::vector<Token> lex_java(const std::string& text) {
  return tokenize(text, language(LanguageId::Java)).tokens;
}

bool accepts(const Pattern& p, const std::vector<Token>& tokens, std::size_t start,
             BlindLevel blind) {
  return match_at(p, tokens, start, blind).has_value();
}

}  // namespace

PropertyResult check_oracle_equivalence(std::uint64_t seed, std::size_t cases) {
  PropertyResult result;
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const Pattern pattern = random_pattern(rng);
    const std::vector<Token> tokens = random_stream(rng, 12);
    ++result.cases;
    bool case_ok = true;
    for (const BlindLevel blind : kLevels) {
      const Oracle oracle(tokens, blind);
      for (std::size_t start = 0; start <= tokens.size() && case_ok; ++start) {
        const auto expected = oracle.first(pattern, start);
        const auto actual = match_at(pattern, tokens, start, blind);
        std::string problem;
        if (expected.has_value() != actual.has_value()) {
          problem = expected ? "oracle accepts, engine rejects" : "engine accepts, oracle rejects";
        } else if (expected) {
          if (expected->end != actual->end) {
            problem = "end " + std::to_string(actual->end) + " vs oracle " +
                      std::to_string(expected->end);
          } else if (!same_extents(expected->wildcards, actual->wildcards)) {
            problem = "wildcard extents differ";
          } else if (blind == BlindLevel::Consistent &&
                     (distinct_pairs(expected->identifier_pairs) !=
                          actual->bindings.identifiers() ||
                      distinct_pairs(expected->literal_pairs) != actual->bindings.literals())) {
            problem = "bindings differ";
          }
          if (start == 0 && blind == BlindLevel::Consistent) ++result.exercised;
        }
        if (!problem.empty()) {
          result.violate(describe(pattern, tokens, start, blind) + ": " + problem);
          case_ok = false;
        }
      }
    }
  }
  return result;
}

PropertyResult check_whitespace_insensitivity(std::uint64_t seed, std::size_t cases) {
  static const std::vector<std::string> kSeparators = {
      " ", "\n", "\t", "  \r\n ", " /* c */ ", " /**/", "// note\n", " /* a\n b */\n", "\f"};
  PropertyResult result;
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const LanguageId id = c % 2 == 0 ? LanguageId::Java : LanguageId::C;
    const auto parts = random_snippet_tokens(rng, id, 14);
    const std::string plain = join(parts, " ");
    std::string spaced = std::uniform_int_distribution<int>(0, 1)(rng) ? "/* head */\n" : "";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) {
        // Keep a plain space on each side so no separator fuses with a token.
        spaced += ' ';
        spaced += kSeparators[std::uniform_int_distribution<std::size_t>(
            0, kSeparators.size() - 1)(rng)];
        spaced += ' ';
      }
      spaced += parts[i];
    }
    spaced += "\n// tail";
    ++result.cases;
    const auto a = tokenize(plain, language(id)).tokens;
    const auto b = tokenize(spaced, language(id)).tokens;
    const bool same = std::equal(a.begin(), a.end(), b.begin(), b.end(),
                                 [](const Token& x, const Token& y) {
                                   return x.kind == y.kind && x.text == y.text;
                                 });
    if (!same) result.violate("`" + plain + "` vs `" + spaced + "`");
    if (!a.empty()) ++result.exercised;
  }
  return result;
}

PropertyResult check_blind_monotonicity(std::uint64_t seed, std::size_t cases,
                                        bool with_repetition) {
  PropertyResult result;
  auto check = [&](const Pattern& pattern, const std::vector<Token>& tokens) {
    ++result.cases;
    for (std::size_t start = 0; start <= tokens.size(); ++start) {
      const bool none = accepts(pattern, tokens, start, BlindLevel::None);
      const bool consistent = accepts(pattern, tokens, start, BlindLevel::Consistent);
      const bool full = accepts(pattern, tokens, start, BlindLevel::Full);
      if (none) ++result.exercised;
      if (none && !consistent) {
        result.violate(describe(pattern, tokens, start, BlindLevel::Consistent) +
                       ": accepted under none only");
        return;
      }
      if (consistent && !full) {
        result.violate(describe(pattern, tokens, start, BlindLevel::Full) +
                       ": accepted under consistent, rejected under full");
        return;
      }
    }
  };

  if (with_repetition) {
    const auto java = LanguageId::Java;
    check(parse_query("$( x $) $* z", java, BlindLevel::Consistent), lex_java("z"));
    check(parse_query("$( a $) $* b", java, BlindLevel::Consistent), lex_java("x y"));
  }
  Rng rng(seed);
  PatternShape shape;
  shape.allow_repetition = with_repetition;
  while (result.cases < cases) check(random_pattern(rng, shape), random_stream(rng, 12));
  return result;
}

PropertyResult check_pmatch_symmetry(std::uint64_t seed, std::size_t cases) {
  PropertyResult result;
  Rng rng(seed);
  const LanguageId id = LanguageId::Java;
  auto full_match = [&](const std::string& query, const std::string& target) {
    const auto tokens = tokenize(target, language(id)).tokens;
    const auto r = match_at(parse_query(query, id, BlindLevel::Consistent), tokens, 0,
                            BlindLevel::Consistent);
    return r && r->end == tokens.size();
  };
  for (std::size_t c = 0; c < cases; ++c) {
    const auto a_parts = random_snippet_tokens(rng, id, 10);
    std::vector<std::string> b_parts;
    switch (c % 3) {
      case 0:
        b_parts = rename_identifiers(rng, a_parts, id);
        break;
      case 1: {
        // A renaming that may merge or split identifiers.
        b_parts = rename_identifiers(rng, a_parts, id);
        const auto positions = tokenize(join(b_parts, " "), language(id)).tokens;
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < positions.size(); ++i)
          if (positions[i].kind == TokenKind::Identifier) ids.push_back(i);
        if (!ids.empty()) {
          const std::size_t victim =
              ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
          const std::size_t source =
              ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
          b_parts[victim] = std::uniform_int_distribution<int>(0, 1)(rng) ? b_parts[source]
                                                                          : std::string("fresh");
        }
        break;
      }
      default:
        b_parts = random_snippet_tokens(rng, id, 10);
        b_parts.resize(a_parts.size(), "x");
        break;
    }
    const std::string a = join(a_parts, " ");
    const std::string b = join(b_parts, " ");
    ++result.cases;
    const bool ab = full_match(a, b);
    const bool ba = full_match(b, a);
    if (ab) ++result.exercised;
    if (ab != ba) result.violate("`" + a + "` vs `" + b + "`");
  }
  return result;
}

PropertyResult check_reflexivity(std::uint64_t seed, std::size_t cases) {
  PropertyResult result;
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const LanguageId id = c % 2 == 0 ? LanguageId::Java : LanguageId::C;
    const std::string text = join(random_snippet_tokens(rng, id, 16), " ");
    const auto tokens = tokenize(text, language(id)).tokens;
    ++result.cases;
    for (const BlindLevel blind : kLevels) {
      const auto r = match_at(parse_query(text, id, blind), tokens, 0, blind);
      if (!r || r->end != tokens.size()) {
        result.violate("`" + text + "` blind " + std::string(to_string(blind)));
        break;
      }
      ++result.exercised;
    }
  }
  return result;
}

PropertyResult check_possessive_rigidity(std::uint64_t seed, std::size_t cases) {
  PropertyResult result;
  auto check = [&](const std::string& body, std::size_t copies, const std::string& quantifier) {
    std::string target;
    for (std::size_t k = 0; k < copies; ++k) target += body + " ";
    const std::string query = "$( " + body + " $) " + quantifier + " " + body;
    const auto tokens = lex_java(target);
    const std::size_t body_len = lex_java(body).size();
    ++result.cases;
    for (const BlindLevel blind : kLevels) {
      const Pattern p = parse_query(query, LanguageId::Java, blind);
      for (std::size_t k = 0; k < copies; ++k) {
        if (accepts(p, tokens, k * body_len, blind)) {
          result.violate("`" + query + "` accepted `" + target + "` at copy " +
                         std::to_string(k) + " blind " + std::string(to_string(blind)));
          return;
        }
      }
      ++result.exercised;
    }
  };

  check("(", 3, "$+");
  Rng rng(seed);
  while (result.cases < cases) {
    std::vector<std::string> parts = random_snippet_tokens(rng, LanguageId::Java, 4);
    // Brackets inside a group body are fine, but a lone '$(' style clash is not
    // possible since snippets never contain '$'.
    const std::size_t copies = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const char* quantifier = std::uniform_int_distribution<int>(0, 1)(rng) ? "$+" : "$*";
    check(join(parts, " "), copies, quantifier);
  }
  return result;
}

PropertyResult check_pinning_restricts(std::uint64_t seed, std::size_t cases,
                                       PinningComparison comparison) {
  PropertyResult result;
  constexpr BlindLevel kFull = BlindLevel::Full;
  static const std::vector<std::string> kNames = {"a", "b", "c", "d"};

  auto ranges = [&](const Pattern& p, const std::vector<Token>& tokens) {
    TokenStream stream;
    stream.tokens = tokens;
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const Match& m : scan(p, stream, kFull)) out.emplace(m.token_start, m.token_end);
    return out;
  };
  auto starts = [&](const Pattern& p, const std::vector<Token>& tokens) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i <= tokens.size(); ++i)
      if (accepts(p, tokens, i, kFull)) out.insert(i);
    return out;
  };
  auto check = [&](const Pattern& original, const Pattern& pinned,
                   const std::vector<Token>& tokens) {
    ++result.cases;
    bool subset = true;
    if (comparison == PinningComparison::ScanRanges) {
      const auto a = ranges(original, tokens);
      const auto b = ranges(pinned, tokens);
      if (!b.empty()) ++result.exercised;
      subset = std::includes(a.begin(), a.end(), b.begin(), b.end());
    } else {
      const auto a = starts(original, tokens);
      const auto b = starts(pinned, tokens);
      if (!b.empty()) ++result.exercised;
      subset = std::includes(a.begin(), a.end(), b.begin(), b.end());
    }
    if (!subset) {
      result.violate("pattern `" + to_query_text(original) + "` pinned `" +
                     to_query_text(pinned) + "` stream `" + stream_text(tokens) + "`");
    }
  };

  if (comparison == PinningComparison::ScanRanges) {
    check(parse_query("a $# b ;", LanguageId::Java, kFull),
          parse_query("a $# $q ;", LanguageId::Java, kFull), lex_java("p z ; q ;"));
  }
  Rng rng(seed);
  PatternShape shape;
  shape.allow_pinned = true;
  while (result.cases < cases) {
    const Pattern original = random_pattern(rng, shape);
    const auto positions = blind_identifier_positions(original);
    if (positions.empty()) continue;
    Pattern pinned = original;
    const std::size_t at =
        positions[std::uniform_int_distribution<std::size_t>(0, positions.size() - 1)(rng)];
    pinned.elements[at] = Exact{
        TokenKind::Identifier,
        kNames[std::uniform_int_distribution<std::size_t>(0, kNames.size() - 1)(rng)]};
    check(original, pinned, random_stream(rng, 12));
  }
  return result;
}

PropertyResult check_balanced_gap_depth(std::uint64_t seed, std::size_t cases) {
  PropertyResult result;
  Rng rng(seed);
  auto has_balanced_gap = [](const auto& self, const ElementSequence& seq) -> bool {
    for (const auto& e : seq) {
      if (e.is<BalancedGap>()) return true;
      if (const auto* g = std::get_if<Group>(&e.node); g && self(self, g->body)) return true;
      if (const auto* r = std::get_if<Repetition>(&e.node); r && self(self, r->body)) return true;
      if (const auto* a = std::get_if<Alternation>(&e.node)) {
        for (const auto& b : a->branches)
          if (self(self, b)) return true;
      }
    }
    return false;
  };

  while (result.cases < cases) {
    Pattern pattern = random_pattern(rng);
    if (!has_balanced_gap(has_balanced_gap, pattern.elements)) continue;
    const auto tokens = random_stream(rng, 12);
    ++result.cases;
    for (const BlindLevel blind : kLevels) {
      for (std::size_t start = 0; start <= tokens.size(); ++start) {
        const auto r = match_at(pattern, tokens, start, blind);
        if (!r) continue;
        for (const WildcardExtent& w : r->wildcards) {
          if (w.kind != WildcardExtent::Kind::BalancedGap) continue;
          ++result.exercised;
          int depth = 0;
          bool negative = false;
          for (std::size_t p = w.begin; p < w.end; ++p) {
            depth += bracket_delta(tokens[p]);
            negative = negative || depth < 0;
          }
          if (negative || depth != 0) {
            result.violate(describe(pattern, tokens, start, blind) + ": $$ consumed [" +
                           std::to_string(w.begin) + ", " + std::to_string(w.end) + ")");
          }
        }
      }
    }
  }
  return result;
}

}  // namespace ccmatch::testing
