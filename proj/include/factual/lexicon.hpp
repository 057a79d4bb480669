// Copyright 2026 The Factual Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace factual {

// Closed annotation sets used to parse and validate FACTUAL-MR text.
// Read-only after construction; share freely across threads.
struct Lexicons {
  std::set<std::string> prepositions;
  // Quantifier modifier key ("g") to display form ("groups of").
  std::map<std::string, std::string> modifiers;
  // When present, validate_mr reports verbs outside this set.
  std::optional<std::set<std::string>> verbs;

  // The lexicons shipped under data/lexicons.
  static Lexicons builtin();
};

// Lexicon text formats. Blank lines and lines starting with '#' are
// skipped; entries are normalized (lowercase, single spaces).
std::set<std::string> parse_word_list(std::string_view text);
// `key<TAB>value` per line. Throws FormatError on a line without a tab.
std::map<std::string, std::string> parse_tsv(std::string_view text);

std::set<std::string> load_word_list(const std::filesystem::path& path);
std::map<std::string, std::string> load_tsv(const std::filesystem::path& path);

// Reads a whole file. Throws IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace factual
