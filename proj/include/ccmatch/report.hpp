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
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ccmatch/matcher.hpp"
#include "ccmatch/token.hpp"

namespace ccmatch {

enum class OutputMode {
  TopLine,      // PATH:first matched line
  FullSnippet,  // PATH:line for every line the match spans
  Count,        // PATH:N per file with at least one match
  FilesOnly,    // PATH once per matching file
  Json,
};

struct Report {
  std::vector<std::string> entries;
  std::size_t total_matches = 0;

  // Entries separated and terminated by '\n'.
  void write(std::ostream& out) const;
};

using LineTables = std::map<std::string, const LineTable*, std::less<>>;

// Matches must already be ordered by (path, token_start). A match that names
// a file or line missing from `lines` is a programming error and throws
// std::logic_error.
Report render(std::span<const Match> matches, const LineTables& lines, OutputMode mode,
              bool show_line_numbers);

}  // namespace ccmatch
