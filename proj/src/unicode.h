// Copyright 2026 The defclust Authors
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

// Minimal UTF-8 handling for tokenization and pattern matching. Letter
// classification and case folding cover Latin (ASCII, Latin-1, Extended-A
// and -B), Greek and Cyrillic, which is all the corpora here need. The
// tables are fixed so results never depend on the process locale.

#ifndef DEFCLUST_SRC_UNICODE_H_
#define DEFCLUST_SRC_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace defclust::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

struct DecodedChar {
  char32_t code_point;
  std::size_t byte_offset;
  std::size_t byte_length;
};

// Invalid sequences decode to U+FFFD, one byte at a time.
std::vector<DecodedChar> Decode(std::string_view text);

void AppendUtf8(char32_t cp, std::string& out);

bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
inline bool IsAlnum(char32_t cp) { return IsLetter(cp) || IsDigit(cp); }
bool IsSpace(char32_t cp);
char32_t ToLower(char32_t cp);

std::string Lowercase(std::string_view text);

// Strips leading and trailing white space (Unicode-aware).
std::string_view Trim(std::string_view text);

}  // namespace defclust::unicode

#endif  // DEFCLUST_SRC_UNICODE_H_
