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

#include <filesystem>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ccmatch {

enum class LanguageId { Java, C };

// Lexical tables for one target language.
struct Language {
  LanguageId id;
  std::string_view name;
  std::unordered_set<std::string_view> reserved_words;
  // Primitive type names. These lex as identifiers so a query identifier
  // can stand for any type.
  std::unordered_set<std::string_view> type_keywords;
  // Words that are literals rather than identifiers (Java true/false/null).
  std::unordered_set<std::string_view> literal_words;
  // Sorted longest first so the first hit is the longest match.
  std::vector<std::string_view> delimiters;
  std::string_view line_comment;
  std::string_view block_comment_open;
  std::string_view block_comment_close;
  // Encoding prefixes that glue onto a following string or char literal.
  std::vector<std::string_view> literal_prefixes;
  bool text_blocks = false;
  bool line_splices = false;
  std::vector<std::string_view> extensions;
};

const Language& language(LanguageId id);

std::optional<LanguageId> parse_language_name(std::string_view name);
std::optional<LanguageId> language_for_extension(const std::filesystem::path& path);

// The override wins; otherwise the extension decides, falling back to Java.
LanguageId detect_language(const std::filesystem::path& path,
                           std::optional<LanguageId> override_language);

constexpr LanguageId kDefaultLanguage = LanguageId::Java;

}  // namespace ccmatch
