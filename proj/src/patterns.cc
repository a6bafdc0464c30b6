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

#include "defclust/patterns.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "defclust/error.h"
#include "unicode.h"

namespace defclust {

namespace {

constexpr std::string_view kAsciiPlaceholder = "<T>";

std::size_t CountOccurrences(std::string_view haystack,
                             std::string_view needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::string ReplaceAll(std::string_view text, std::string_view from,
                       std::string_view to) {
  std::string out;
  std::size_t begin = 0;
  for (std::size_t pos = text.find(from); pos != std::string_view::npos;
       pos = text.find(from, begin)) {
    out.append(text.substr(begin, pos - begin));
    out.append(to);
    begin = pos + from.size();
  }
  out.append(text.substr(begin));
  return out;
}

// Lowercase, collapse white-space runs to one space, trim.
std::u32string NormalizeForMatch(std::string_view text) {
  std::u32string out;
  bool pending_space = false;
  for (const auto& c : unicode::Decode(text)) {
    if (unicode::IsSpace(c.code_point)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(unicode::ToLower(c.code_point));
  }
  return out;
}

std::string Encode(std::u32string_view text) {
  std::string out;
  for (char32_t cp : text) unicode::AppendUtf8(cp, out);
  return out;
}

bool IsTailTerminator(char32_t cp) {
  return cp == U'.' || cp == U';' || cp == U'\n' || cp == U'\r';
}

}  // namespace

PatternTemplate PatternTemplate::Compile(std::string_view surface,
                                         DefinitionType def_type) {
  std::string canonical(unicode::Trim(
      ReplaceAll(surface, kAsciiPlaceholder, kTermPlaceholder)));
  const std::size_t placeholders =
      CountOccurrences(canonical, kTermPlaceholder);
  if (placeholders != 1) {
    throw std::invalid_argument("template \"" + std::string(surface) +
                                "\" must contain exactly one term "
                                "placeholder, found " +
                                std::to_string(placeholders));
  }
  if (unicode::Trim(ReplaceAll(canonical, kTermPlaceholder, "")).empty()) {
    throw std::invalid_argument("template \"" + std::string(surface) +
                                "\" has no text besides the placeholder");
  }
  return PatternTemplate(std::move(canonical), def_type);
}

std::string PatternTemplate::Instantiate(std::string_view term) const {
  return ReplaceAll(surface_, kTermPlaceholder, term);
}

std::vector<PatternTemplate> DefaultTemplates() {
  static constexpr std::string_view kSurfaces[] = {
      "la ⟨T⟩ es el",       "la ⟨T⟩ es la",       "la ⟨T⟩ es un",
      "las ⟨T⟩s son",       "define una ⟨T⟩",     "definimos una ⟨T⟩",
      "ha definido la ⟨T⟩", "ha definido una ⟨T⟩", "consideramos la ⟨T⟩",
  };
  std::vector<PatternTemplate> templates;
  for (std::string_view surface : kSurfaces) {
    templates.push_back(
        PatternTemplate::Compile(surface, DefinitionType::kAnalytic));
  }
  return templates;
}

std::vector<PatternTemplate> ParseTemplates(std::istream& in,
                                            std::string_view source_name) {
  std::vector<PatternTemplate> templates;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view trimmed = unicode::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::string where =
        std::string(source_name) + ":" + std::to_string(line_no) + ": ";
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(where + "expected \"surface<TAB>def_type\"");
    }
    const std::string_view type_name =
        unicode::Trim(std::string_view(line).substr(tab + 1));
    const auto def_type = ParseDefinitionType(type_name);
    if (!def_type) {
      throw DataError(where + "unknown def_type \"" + std::string(type_name) +
                      "\"");
    }
    try {
      templates.push_back(
          PatternTemplate::Compile(line.substr(0, tab), *def_type));
    } catch (const std::invalid_argument& e) {
      throw DataError(where + e.what());
    }
  }
  return templates;
}

std::vector<PatternTemplate> LoadTemplates(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open pattern file " + path.string());
  return ParseTemplates(in, path.string());
}

std::vector<SearchPattern> ExpandPatterns(
    std::span<const PatternTemplate> templates,
    std::span<const std::string> terms) {
  if (templates.empty() || terms.empty()) {
    throw std::invalid_argument("need at least one template and one term");
  }
  std::vector<SearchPattern> out;
  std::set<std::string> seen;
  for (const PatternTemplate& tmpl : templates) {
    for (const std::string& term : terms) {
      std::string text = Encode(NormalizeForMatch(tmpl.Instantiate(term)));
      if (!seen.insert(text).second) continue;
      out.push_back({std::move(text), term, tmpl});
    }
  }
  return out;
}

std::vector<CandidateContext> ScanText(
    std::string_view text, std::string_view source_id,
    std::span<const SearchPattern> patterns) {
  const std::vector<unicode::DecodedChar> chars = unicode::Decode(text);

  // Normalized view plus, per normalized position, the original code point
  // index it came from.
  std::u32string normalized;
  std::vector<std::size_t> origin;
  normalized.reserve(chars.size());
  origin.reserve(chars.size());
  bool in_space = false;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const char32_t cp = chars[i].code_point;
    if (unicode::IsSpace(cp)) {
      if (!in_space) {
        normalized.push_back(U' ');
        origin.push_back(i);
      }
      in_space = true;
      continue;
    }
    in_space = false;
    normalized.push_back(unicode::ToLower(cp));
    origin.push_back(i);
  }

  struct Hit {
    std::size_t begin;
    std::size_t pattern;
    std::size_t end;
  };
  std::vector<Hit> hits;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const std::u32string needle = NormalizeForMatch(patterns[p].text);
    if (needle.empty()) continue;
    const bool check_front = unicode::IsAlnum(needle.front());
    const bool check_back = unicode::IsAlnum(needle.back());
    for (std::size_t pos = normalized.find(needle);
         pos != std::u32string::npos; pos = normalized.find(needle, pos + 1)) {
      const std::size_t last = pos + needle.size();
      if (check_front && pos > 0 && unicode::IsAlnum(normalized[pos - 1])) {
        continue;
      }
      if (check_back && last < normalized.size() &&
          unicode::IsAlnum(normalized[last])) {
        continue;
      }
      hits.push_back({origin[pos], p, origin[last - 1] + 1});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return std::tie(a.begin, a.pattern) < std::tie(b.begin, b.pattern);
  });

  std::vector<CandidateContext> out;
  out.reserve(hits.size());
  for (const Hit& hit : hits) {
    std::size_t stop = hit.end;
    while (stop < chars.size() && !IsTailTerminator(chars[stop].code_point)) {
      ++stop;
    }
    std::string_view tail;
    if (stop > hit.end) {
      const std::size_t from = chars[hit.end].byte_offset;
      const std::size_t to =
          chars[stop - 1].byte_offset + chars[stop - 1].byte_length;
      tail = unicode::Trim(text.substr(from, to - from));
    }
    const SearchPattern& pattern = patterns[hit.pattern];
    out.push_back({std::string(source_id), hit.begin, hit.end, pattern.term,
                   pattern.source, std::string(tail), false});
  }
  return out;
}

CandidateCorpus CandidatesToCorpus(std::span<const CandidateContext> cands) {
  CandidateCorpus out;
  std::map<std::string, std::size_t, std::less<>> ordinal;
  for (const CandidateContext& cand : cands) {
    const std::size_t k = ++ordinal[cand.source_id];
    if (unicode::Trim(cand.tail).empty()) {
      ++out.skipped_empty;
      continue;
    }
    Document doc;
    doc.id = cand.source_id + "#" + std::to_string(k);
    doc.text = cand.tail;
    doc.term = cand.term;
    doc.def_type = cand.pattern.def_type();
    out.documents.push_back(std::move(doc));
  }
  return out;
}

}  // namespace defclust
