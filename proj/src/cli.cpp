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


#include "ccmatch/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ccmatch/lexer.hpp"
#include "ccmatch/matcher.hpp"

namespace ccmatch::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kProgram = "ccmatch";

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  if (file.bad()) return std::nullopt;
  return text;
}

std::string read_all(std::istream& in) {
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

bool is_blank(std::string_view text) {
  return text.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

struct FileResult {
  bool readable = false;
  std::vector<Match> matches;
  LineTable lines;
  std::vector<std::string> diagnostics;
};

}  // namespace

std::string usage() {
  return "usage: ccmatch [-r] [--lang {java,c}] [-b {none,consistent,full}]\n"
         "               [-c | -l | --json | --full] [-n]\n"
         "               (PATTERN | -f FILE | -q -) [PATH ...]\n";
}

Config parse_args(std::span<const std::string> args) {
  CLI::App app{"Find code clones of a query snippet in source files.", kProgram};
  app.set_help_flag();

  Config config;
  std::string lang;
  std::string blind;
  std::string query_file;
  std::string query_stdin;
  bool count = false, files_only = false, json = false, full = false;
  std::vector<std::string> positionals;

  app.add_flag("-r", config.recursive, "Search directories recursively");
  app.add_option("--lang", lang, "Target language")->check(CLI::IsMember({"java", "c"}));
  app.add_option("-b", blind, "Blind level")
      ->check(CLI::IsMember({"none", "consistent", "full"}));
  auto* count_flag = app.add_flag("-c", count, "Print match counts per file");
  auto* files_flag = app.add_flag("-l", files_only, "Print matching file names only");
  auto* json_flag = app.add_flag("--json", json, "Print matches as JSON");
  auto* full_flag = app.add_flag("--full", full, "Print every line of each match");
  app.add_flag("-n", config.show_line_numbers, "Prefix lines with line numbers");
  auto* file_opt = app.add_option("-f", query_file, "Read the query from FILE");
  auto* stdin_opt = app.add_option("-q", query_stdin, "'-' reads the query from stdin")
                        ->check(CLI::IsMember({"-"}));
  app.add_option("args", positionals, "PATTERN and PATH arguments");

  count_flag->excludes(files_flag)->excludes(json_flag)->excludes(full_flag);
  files_flag->excludes(json_flag)->excludes(full_flag);
  json_flag->excludes(full_flag);
  file_opt->excludes(stdin_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (!lang.empty()) config.language_override = parse_language_name(lang);
  if (blind == "none") config.blind = BlindLevel::None;
  if (blind == "full") config.blind = BlindLevel::Full;
  if (count) config.mode = OutputMode::Count;
  if (files_only) config.mode = OutputMode::FilesOnly;
  if (json) config.mode = OutputMode::Json;
  if (full) config.mode = OutputMode::FullSnippet;

  auto rest = positionals.begin();
  if (file_opt->count() > 0) {
    config.query = {QuerySource::Kind::File, query_file};
  } else if (stdin_opt->count() > 0) {
    config.query = {QuerySource::Kind::Stdin, {}};
  } else {
    if (positionals.empty()) throw UsageError("missing PATTERN");
    config.query = {QuerySource::Kind::Inline, positionals.front()};
    ++rest;
  }
  config.targets.assign(rest, positionals.end());
  if (config.query.kind == QuerySource::Kind::Stdin && config.targets.empty())
    throw UsageError("standard input cannot supply both the query and the target code");
  return config;
}

std::vector<Target> collect_targets(std::span<const std::string> paths, bool recursive,
                                    std::optional<LanguageId> language_override,
                                    std::ostream& diagnostics) {
  std::vector<Target> targets;
  const LanguageId effective = language_override.value_or(kDefaultLanguage);

  for (const std::string& arg : paths) {
    const fs::path path(arg);
    std::error_code ec;
    const fs::file_status status = fs::status(path, ec);
    if (ec || !fs::exists(status)) {
      diagnostics << kProgram << ": " << arg << ": No such file or directory\n";
      continue;
    }
    if (fs::is_directory(status)) {
      if (!recursive) {
        diagnostics << kProgram << ": " << arg << ": Is a directory (use -r)\n";
        continue;
      }
      fs::recursive_directory_iterator it(path, fs::directory_options::skip_permission_denied,
                                          ec);
      if (ec) {
        diagnostics << kProgram << ": " << arg << ": " << ec.message() << '\n';
        continue;
      }
      for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        std::error_code entry_ec;
        if (!it->is_regular_file(entry_ec)) continue;
        if (language_for_extension(it->path()) == effective) {
          targets.push_back({it->path().string(), effective});
        }
      }
      if (ec) diagnostics << kProgram << ": " << arg << ": " << ec.message() << '\n';
      continue;
    }
    if (!fs::is_regular_file(status)) {
      diagnostics << kProgram << ": " << arg << ": Not a regular file\n";
      continue;
    }
    targets.push_back({arg, detect_language(path, language_override)});
  }

  std::sort(targets.begin(), targets.end(),
            [](const Target& a, const Target& b) { return a.path < b.path; });
  targets.erase(std::unique(targets.begin(), targets.end(),
                            [](const Target& a, const Target& b) { return a.path == b.path; }),
                targets.end());
  return targets;
}

int run(const Config& config, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string query_text;
  switch (config.query.kind) {
    case QuerySource::Kind::Inline:
      query_text = config.query.value;
      break;
    case QuerySource::Kind::File: {
      auto text = read_file(config.query.value);
      if (!text) {
        err << kProgram << ": " << config.query.value << ": cannot read query file\n";
        return kExitError;
      }
      query_text = std::move(*text);
      break;
    }
    case QuerySource::Kind::Stdin:
      query_text = read_all(in);
      break;
  }
  if (is_blank(query_text)) {
    err << kProgram << ": empty query\n";
    return kExitError;
  }

  const bool from_stdin = config.targets.empty();
  std::vector<Target> targets;
  if (from_stdin) {
    targets.push_back({"<stdin>", config.language_override.value_or(kDefaultLanguage)});
  } else {
    targets = collect_targets(config.targets, config.recursive, config.language_override, err);
    if (targets.empty()) {
      err << kProgram << ": no readable targets\n";
      return kExitError;
    }
  }

  // One parse per language in play; explicitly named files may mix languages.
  std::map<LanguageId, Pattern> patterns;
  for (const Target& target : targets) {
    if (patterns.contains(target.language)) continue;
    try {
      patterns.emplace(target.language, parse_query(query_text, target.language, config.blind));
    } catch (const QueryParseError& e) {
      err << kProgram << ": query:" << e.what() << '\n';
      return kExitError;
    }
  }

  std::string stdin_text;
  if (from_stdin) stdin_text = read_all(in);

  std::vector<FileResult> results(targets.size());
  auto process = [&](std::size_t index) {
    const Target& target = targets[index];
    FileResult& result = results[index];
    std::optional<std::string> text;
    if (from_stdin) {
      text = std::move(stdin_text);
    } else {
      text = read_file(target.path);
    }
    if (!text) {
      result.diagnostics.push_back(target.path + ": cannot read file");
      return;
    }
    try {
      TokenStream stream = tokenize(std::move(*text), language(target.language), target.path);
      for (const auto& d : stream.diagnostics) {
        result.diagnostics.push_back(target.path + ":" + d);
      }
      result.matches = scan(patterns.at(target.language), stream, config.blind);
      result.readable = true;
      if (!result.matches.empty()) result.lines = std::move(stream.lines);
    } catch (const EncodingError& e) {
      result.diagnostics.push_back(target.path + ": " + e.what() + "; skipped");
    } catch (const std::exception& e) {
      result.diagnostics.push_back(target.path + ": " + e.what() + "; skipped");
    }
  };

  unsigned jobs = config.jobs != 0 ? config.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(targets.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < targets.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < targets.size(); i = next++) process(i);
      });
    }
  }

  std::size_t readable = 0;
  std::vector<Match> matches;
  LineTables lines;
  for (FileResult& result : results) {
    for (const auto& d : result.diagnostics) err << kProgram << ": " << d << '\n';
    if (!result.readable) continue;
    ++readable;
    if (result.matches.empty()) continue;
    lines.emplace(result.matches.front().path, &result.lines);
    std::move(result.matches.begin(), result.matches.end(), std::back_inserter(matches));
  }
  if (readable == 0) {
    err << kProgram << ": no readable targets\n";
    return kExitError;
  }

  std::stable_sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
    if (a.path != b.path) return a.path < b.path;
    return a.token_start < b.token_start;
  });

  const Report report = render(matches, lines, config.mode, config.show_line_numbers);
  report.write(out);
  out.flush();
  return report.total_matches > 0 ? kExitMatch : kExitNoMatch;
}

int main_entry(std::span<const std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  for (const std::string& arg : args) {
    if (arg == "--") break;
    if (arg == "-h" || arg == "--help") {
      out << usage();
      return kExitMatch;
    }
  }
  Config config;
  try {
    config = parse_args(args);
  } catch (const UsageError& e) {
    err << kProgram << ": " << e.what() << '\n' << usage();
    return kExitError;
  }
  return run(config, in, out, err);
}

}  // namespace ccmatch::cli
