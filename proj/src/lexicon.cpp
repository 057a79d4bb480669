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

#include "factual/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "factual/error.hpp"
#include "factual/text.hpp"

namespace factual {

namespace builtin {
extern const std::string_view prepositions;
extern const std::string_view quantifier_modifiers;
}  // namespace builtin

namespace {

bool skip_line(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

}  // namespace

std::set<std::string> parse_word_list(std::string_view text) {
  std::set<std::string> words;
  for (std::string_view line : split(text, '\n')) {
    if (skip_line(line)) continue;
    words.insert(normalize(line));
  }
  return words;
}

std::map<std::string, std::string> parse_tsv(std::string_view text) {
  std::map<std::string, std::string> table;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (skip_line(line)) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorKind::kFormatError,
                  "line " + std::to_string(line_no) + ": expected key<TAB>value");
    }
    std::string key = normalize(line.substr(0, tab));
    std::string value = normalize(line.substr(tab + 1));
    if (key.empty() || value.empty()) {
      throw Error(ErrorKind::kFormatError,
                  "line " + std::to_string(line_no) + ": empty key or value");
    }
    table[key] = value;
  }
  return table;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::set<std::string> load_word_list(const std::filesystem::path& path) {
  return parse_word_list(read_file(path));
}

std::map<std::string, std::string> load_tsv(const std::filesystem::path& path) {
  return parse_tsv(read_file(path));
}

Lexicons Lexicons::builtin() {
  static const Lexicons lexicons = [] {
    Lexicons l;
    l.prepositions = parse_word_list(builtin::prepositions);
    l.modifiers = parse_tsv(builtin::quantifier_modifiers);
    return l;
  }();
  return lexicons;
}

}  // namespace factual
