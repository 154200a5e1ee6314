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

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccmatch/language.hpp"
#include "ccmatch/pattern.hpp"
#include "ccmatch/report.hpp"

namespace ccmatch::cli {

inline constexpr int kExitMatch = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitError = 2;

struct QuerySource {
  enum class Kind { Inline, File, Stdin };
  Kind kind = Kind::Inline;
  std::string value;  // query text or file path
};

struct Config {
  QuerySource query;
  std::optional<LanguageId> language_override;
  BlindLevel blind = BlindLevel::Consistent;
  OutputMode mode = OutputMode::TopLine;
  bool recursive = false;
  bool show_line_numbers = false;
  // Empty: target code comes from standard input.
  std::vector<std::string> targets;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// args excludes the program name. Throws UsageError.
Config parse_args(std::span<const std::string> args);

std::string usage();

struct Target {
  std::string path;
  LanguageId language;
  bool operator==(const Target&) const = default;
};

// Resolves command-line paths to files, sorted by path. Problems with
// individual paths are reported to `diagnostics` and skipped.
std::vector<Target> collect_targets(std::span<const std::string> paths, bool recursive,
                                    std::optional<LanguageId> language_override,
                                    std::ostream& diagnostics);

// Runs a search and writes the report; returns the exit status.
int run(const Config& config, std::istream& in, std::ostream& out, std::ostream& err);

// Argument parsing plus run(); what the executable's main calls.
int main_entry(std::span<const std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace ccmatch::cli
