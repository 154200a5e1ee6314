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


#include "ccmatch/report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace ccmatch {
namespace {

std::string_view line_text(const LineTables& lines, const std::string& path, std::size_t line) {
  const auto it = lines.find(path);
  if (it == lines.end() || it->second == nullptr)
    throw std::logic_error("no line table for " + path);
  if (line == 0 || line > it->second->line_count())
    throw std::logic_error(path + ": match references line " + std::to_string(line) +
                           " outside the line table");
  return it->second->line(line);
}

std::string prefixed(const std::string& path, std::size_t line, std::string_view text,
                     bool show_line_numbers) {
  std::string entry = path;
  entry += ':';
  if (show_line_numbers) {
    entry += std::to_string(line);
    entry += ':';
  }
  entry += text;
  return entry;
}

nlohmann::ordered_json pairs_object(const BindingTable::Pairs& pairs) {
  nlohmann::ordered_json object = nlohmann::ordered_json::object();
  for (const auto& [symbol, text] : pairs) object[symbol] = text;
  return object;
}

}  // namespace

void Report::write(std::ostream& out) const {
  for (const auto& entry : entries) out << entry << '\n';
}

Report render(std::span<const Match> matches, const LineTables& lines, OutputMode mode,
              bool show_line_numbers) {
  Report report;
  report.total_matches = matches.size();

  switch (mode) {
    case OutputMode::TopLine:
      for (const Match& m : matches) {
        report.entries.push_back(prefixed(m.path, m.span.line_start,
                                          line_text(lines, m.path, m.span.line_start),
                                          show_line_numbers));
      }
      break;

    case OutputMode::FullSnippet:
      for (std::size_t i = 0; i < matches.size(); ++i) {
        const Match& m = matches[i];
        if (i > 0) report.entries.emplace_back("--");
        for (std::size_t line = m.span.line_start; line <= m.span.line_end; ++line) {
          report.entries.push_back(
              prefixed(m.path, line, line_text(lines, m.path, line), show_line_numbers));
        }
      }
      break;

    case OutputMode::Count:
    case OutputMode::FilesOnly: {
      std::size_t i = 0;
      while (i < matches.size()) {
        std::size_t j = i;
        while (j < matches.size() && matches[j].path == matches[i].path) ++j;
        if (mode == OutputMode::Count) {
          report.entries.push_back(matches[i].path + ":" + std::to_string(j - i));
        } else {
          report.entries.push_back(matches[i].path);
        }
        i = j;
      }
      break;
    }

    case OutputMode::Json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const Match& m : matches) {
        line_text(lines, m.path, m.span.line_start);
        nlohmann::ordered_json item;
        item["path"] = m.path;
        item["line_start"] = m.span.line_start;
        item["col_start"] = m.span.col_start;
        item["line_end"] = m.span.line_end;
        item["col_end"] = m.span.col_end;
        item["token_start"] = m.token_start;
        item["token_end"] = m.token_end;
        item["bindings"] = {{"identifiers", pairs_object(m.bindings.identifiers())},
                            {"literals", pairs_object(m.bindings.literals())}};
        doc.push_back(std::move(item));
      }
      report.entries.push_back(doc.dump(2));
      break;
    }
  }
  return report;
}

}  // namespace ccmatch
