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

// Definitional search patterns: templates with a term placeholder are
// expanded over a term list, then matched against local text to pull out
// candidate definitional contexts (the term, the pattern, and the text that
// follows it up to the end of the sentence).

#ifndef DEFCLUST_PATTERNS_H_
#define DEFCLUST_PATTERNS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "defclust/corpus.h"

namespace defclust {

// Canonical placeholder. "<T>" is accepted as an ASCII spelling.
inline constexpr std::string_view kTermPlaceholder = "⟨T⟩";

class PatternTemplate {
 public:
  // Throws std::invalid_argument unless the surface holds exactly one
  // placeholder and some other non-blank text.
  static PatternTemplate Compile(std::string_view surface,
                                 DefinitionType def_type);

  // Surface with the placeholder in canonical form.
  const std::string& surface() const { return surface_; }
  DefinitionType def_type() const { return def_type_; }

  std::string Instantiate(std::string_view term) const;

  friend bool operator==(const PatternTemplate&,
                         const PatternTemplate&) = default;

 private:
  PatternTemplate(std::string surface, DefinitionType def_type)
      : surface_(std::move(surface)), def_type_(def_type) {}

  std::string surface_;
  DefinitionType def_type_;
};

// Reconstructed Spanish analytic templates; the only surface form attested
// verbatim is "la <T> es un".
std::vector<PatternTemplate> DefaultTemplates();

// One template per line: "surface<TAB>def_type". Blank lines and lines
// starting with '#' are skipped. Throws DataError with the line number.
std::vector<PatternTemplate> ParseTemplates(std::istream& in,
                                            std::string_view source_name);
std::vector<PatternTemplate> LoadTemplates(const std::filesystem::path& path);

struct SearchPattern {
  // Lowercased, whitespace-collapsed literal to look for.
  std::string text;
  std::string term;
  PatternTemplate source;
};

// Templates-major, terms-minor cross product; a pattern text produced twice
// is kept once, at its first position. Throws std::invalid_argument when
// either list is empty.
std::vector<SearchPattern> ExpandPatterns(
    std::span<const PatternTemplate> templates,
    std::span<const std::string> terms);

struct CandidateContext {
  std::string source_id;
  // Code point offsets [begin, end) of the matched pattern in the source.
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string term;
  PatternTemplate pattern;
  // Text after the pattern up to the next '.', ';' or line break, trimmed.
  std::string tail;
  // Extraction never verifies that a candidate really is a definition.
  bool verified = false;
};

// Case-insensitive match over whitespace-collapsed text. A match must start
// and end on a word boundary; overlapping matches are all reported. Results
// are ordered by begin offset, then by pattern order.
std::vector<CandidateContext> ScanText(std::string_view text,
                                       std::string_view source_id,
                                       std::span<const SearchPattern> patterns);

struct CandidateCorpus {
  std::vector<Document> documents;
  // Candidates dropped for an empty tail.
  std::size_t skipped_empty = 0;
};

// Each candidate becomes a document "source_id#k" (k counts that source's
// candidates from 1) whose text is the tail and whose term and def_type
// come from the match.
CandidateCorpus CandidatesToCorpus(std::span<const CandidateContext> cands);

}  // namespace defclust

#endif  // DEFCLUST_PATTERNS_H_
