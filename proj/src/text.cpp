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

#include "factual/text.hpp"

#include <cctype>
#include <cstdio>

#include "factual/error.hpp"

namespace factual {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

bool contains_whitespace(std::string_view text) {
  for (char c : text) {
    if (is_space(c)) return true;
  }
  return false;
}

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::vector<std::string_view> split_fact_bodies(std::string_view text) {
  auto fail = [](const std::string& what, std::size_t at) {
    throw Error(ErrorKind::kSyntaxError,
                what + " at offset " + std::to_string(at));
  };
  std::vector<std::string_view> bodies;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip_spaces();
  if (pos == text.size()) return bodies;
  for (;;) {
    if (text[pos] != '(') {
      fail(text[pos] == ')' ? "unbalanced ')'" : "expected '('", pos);
    }
    std::size_t close = text.find_first_of("()", pos + 1);
    if (close == std::string_view::npos || text[close] == '(') {
      fail("unbalanced '('", pos);
    }
    bodies.push_back(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    skip_spaces();
    if (pos == text.size()) return bodies;
    if (text[pos] != ',') fail("expected ',' between facts", pos);
    ++pos;
    skip_spaces();
    if (pos == text.size()) fail("trailing ','", pos);
  }
}

std::vector<std::string_view> split_fields(std::string_view body) {
  std::vector<std::string_view> fields;
  for (std::string_view raw : split(body, ',')) {
    std::string_view field = trim(raw);
    if (field.empty()) {
      throw Error(ErrorKind::kSyntaxError,
                  "empty field in '(" + std::string(body) + ")'");
    }
    fields.push_back(field);
  }
  return fields;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace factual
