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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace factual {

// Lowercases ASCII letters, collapses runs of whitespace to one space and
// trims both ends. Non-ASCII bytes pass through untouched.
std::string normalize(std::string_view text);

std::string_view trim(std::string_view text);

// Splits on `sep` without trimming. "a,,b" yields {"a", "", "b"}.
std::vector<std::string_view> split(std::string_view text, char sep);

bool contains_whitespace(std::string_view text);

bool is_digits(std::string_view text);

// Splits "(a, b), (c, d)" into the fact bodies {"a, b", "c, d"}. Facts are
// separated by a comma with optional spaces; nested or unbalanced
// parentheses, stray text and trailing commas throw SyntaxError.
std::vector<std::string_view> split_fact_bodies(std::string_view text);

// Splits a fact body on commas and trims each field. Throws SyntaxError on
// an empty field.
std::vector<std::string_view> split_fields(std::string_view body);

// 64-bit FNV-1a. Stable across platforms and processes.
std::uint64_t fnv1a64(std::string_view text);

// Fixed six-decimal rendering. printf rounds the exact binary value to
// nearest with ties to even.
std::string format_fixed6(double value);

}  // namespace factual
