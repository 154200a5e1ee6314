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


#include "ccmatch/language.hpp"

#include <algorithm>

namespace ccmatch {
namespace {

std::vector<std::string_view> longest_first(std::vector<std::string_view> delimiters) {
  std::stable_sort(delimiters.begin(), delimiters.end(),
                   [](std::string_view a, std::string_view b) { return a.size() > b.size(); });
  return delimiters;
}

Language make_java() {
  Language lang;
  lang.id = LanguageId::Java;
  lang.name = "java";
  lang.reserved_words = {
      "abstract", "assert",     "break",     "case",       "catch",     "class",
      "const",    "continue",   "default",   "do",         "else",      "enum",
      "extends",  "final",      "finally",   "for",        "goto",      "if",
      "implements", "import",   "instanceof", "interface", "native",    "new",
      "package",  "private",    "protected", "public",     "return",    "static",
      "strictfp", "super",      "switch",    "synchronized", "this",    "throw",
      "throws",   "transient",  "try",       "volatile",   "while"};
  lang.type_keywords = {"boolean", "byte", "char", "double", "float",
                        "int",     "long", "short", "void"};
  lang.literal_words = {"true", "false", "null"};
  lang.delimiters = longest_first({
      ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=",
      "<=",   ">=",  "+=",  "-=",  "*=",  "/=", "&=", "|=", "^=", "%=", "<<", ">>", "(",
      ")",    "{",   "}",   "[",   "]",   ";",  ",",  ".",  "@",  "=",  ">",  "<",  "!",
      "~",    "?",   ":",   "+",   "-",   "*",  "/",  "&",  "|",  "^",  "%"});
  lang.line_comment = "//";
  lang.block_comment_open = "/*";
  lang.block_comment_close = "*/";
  lang.text_blocks = true;
  lang.extensions = {".java"};
  return lang;
}

Language make_c() {
  Language lang;
  lang.id = LanguageId::C;
  lang.name = "c";
  lang.reserved_words = {
      "auto",     "break",    "case",     "const",    "continue",       "default",
      "do",       "else",     "enum",     "extern",   "for",            "goto",
      "if",       "inline",   "register", "restrict", "return",         "sizeof",
      "static",   "struct",   "switch",   "typedef",  "union",          "volatile",
      "while",    "_Alignas", "_Alignof", "_Atomic",  "_Generic",       "_Noreturn",
      "_Static_assert", "_Thread_local"};
  lang.type_keywords = {"char",     "short",  "int",   "long",     "float",     "double",
                        "void",     "signed", "unsigned", "_Bool", "_Complex", "_Imaginary"};
  lang.delimiters = longest_first({
      "%:%:", "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
      "&&",   "||",  "*=",  "/=",  "%=", "+=", "-=", "&=", "^=", "|=", "##", "<:", ":>",
      "<%",   "%>",  "%:",  "[",   "]",  "(",  ")",  "{",  "}",  ".",  "&",  "*",  "+",
      "-",    "~",   "!",   "/",   "%",  "<",  ">",  "^",  "|",  "?",  ":",  ";",  "=",
      ",",    "#"});
  lang.line_comment = "//";
  lang.block_comment_open = "/*";
  lang.block_comment_close = "*/";
  lang.literal_prefixes = {"u8", "u", "U", "L"};
  lang.line_splices = true;
  lang.extensions = {".c", ".h"};
  return lang;
}

}  // namespace

const Language& language(LanguageId id) {
  static const Language java = make_java();
  static const Language c = make_c();
  return id == LanguageId::Java ? java : c;
}

std::optional<LanguageId> parse_language_name(std::string_view name) {
  if (name == "java") return LanguageId::Java;
  if (name == "c") return LanguageId::C;
  return std::nullopt;
}

std::optional<LanguageId> language_for_extension(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  for (LanguageId id : {LanguageId::Java, LanguageId::C}) {
    const auto& exts = language(id).extensions;
    if (std::find(exts.begin(), exts.end(), ext) != exts.end()) return id;
  }
  return std::nullopt;
}

LanguageId detect_language(const std::filesystem::path& path,
                           std::optional<LanguageId> override_language) {
  if (override_language) return *override_language;
  return language_for_extension(path).value_or(kDefaultLanguage);
}

}  // namespace ccmatch
