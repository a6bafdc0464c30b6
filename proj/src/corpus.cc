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

#include "defclust/corpus.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "defclust/error.h"
#include "json.hpp"
#include "unicode.h"

namespace defclust {

namespace {

using nlohmann::json;

std::string StringField(const json& record, const char* field,
                           std::string_view source, std::size_t line) {
  const json& value = record.at(field);
  if (!value.is_string()) {
    throw DataError(std::string(source) + ":" + std::to_string(line) +
                    ": field \"" + field + "\" must be a string");
  }
  return value.get<std::string>();
}

Document ParseJsonRecord(std::string_view text, std::string_view source,
                         std::size_t line) {
  const std::string where =
      std::string(source) + ":" + std::to_string(line) + ": ";
  json record;
  try {
    record = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(where + "malformed JSON record (" + e.what() + ")");
  }
  if (!record.is_object()) throw DataError(where + "record is not an object");
  for (const char* required : {"id", "text"}) {
    if (!record.contains(required)) {
      throw DataError(where + "missing required field \"" + required + "\"");
    }
  }
  Document doc;
  doc.id = StringField(record, "id", source, line);
  doc.text = StringField(record, "text", source, line);
  if (doc.id.empty()) throw DataError(where + "empty id");
  if (record.contains("term") && !record["term"].is_null()) {
    doc.term = StringField(record, "term", source, line);
  }
  if (record.contains("def_type") && !record["def_type"].is_null()) {
    const std::string name = StringField(record, "def_type", source, line);
    doc.def_type = ParseDefinitionType(name);
    if (!doc.def_type) {
      throw DataError(where + "unknown def_type \"" + name + "\"");
    }
  }
  if (record.contains("gold_sense") && !record["gold_sense"].is_null()) {
    doc.gold_sense = StringField(record, "gold_sense", source, line);
  }
  return doc;
}

bool IsBlank(std::string_view line) { return unicode::Trim(line).empty(); }

std::set<std::string, std::less<>> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::set<std::string, std::less<>> lines;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view trimmed = unicode::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    lines.insert(unicode::Lowercase(trimmed));
  }
  return lines;
}

}  // namespace

std::string_view ToString(DefinitionType type) {
  switch (type) {
    case DefinitionType::kAnalytic:
      return "analytic";
    case DefinitionType::kExtensional:
      return "extensional";
    case DefinitionType::kFunctional:
      return "functional";
  }
  return "analytic";
}

std::optional<DefinitionType> ParseDefinitionType(std::string_view name) {
  if (name == "analytic") return DefinitionType::kAnalytic;
  if (name == "extensional") return DefinitionType::kExtensional;
  if (name == "functional") return DefinitionType::kFunctional;
  return std::nullopt;
}

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "plain_lines") return CorpusFormat::kPlainLines;
  return std::nullopt;
}

std::vector<Document> ParseCorpus(std::istream& in, CorpusFormat format,
                                  std::string_view source_name) {
  std::vector<Document> docs;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) continue;
    Document doc;
    if (format == CorpusFormat::kJsonl) {
      doc = ParseJsonRecord(line, source_name, line_no);
    } else {
      doc.id = std::to_string(line_no);
      doc.text = line;
    }
    if (IsBlank(doc.text)) {
      throw DataError(std::string(source_name) + ": document \"" + doc.id +
                      "\" has empty text");
    }
    if (!seen.insert(doc.id).second) {
      throw DataError(std::string(source_name) + ":" +
                      std::to_string(line_no) + ": duplicate document id \"" +
                      doc.id + "\"");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> LoadCorpus(const std::filesystem::path& path,
                                 CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus " + path.string());
  return ParseCorpus(in, format, path.string());
}

void PhraseList::Add(std::string_view phrase) {
  std::vector<std::string> tokens = Tokenize(phrase);
  if (tokens.size() < 2) return;
  longest_ = std::max(longest_, tokens.size());
  phrases_.insert(std::move(tokens));
}

std::vector<std::string> PhraseList::Merge(
    std::vector<std::string> tokens) const {
  if (phrases_.empty()) return tokens;
  std::vector<std::string> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    const std::size_t max_len = std::min(longest_, tokens.size() - i);
    for (std::size_t len = max_len; len >= 2; --len) {
      std::vector<std::string> window(tokens.begin() + i,
                                      tokens.begin() + i + len);
      if (phrases_.contains(window)) {
        matched = len;
        break;
      }
    }
    if (matched == 0) {
      out.push_back(std::move(tokens[i]));
      ++i;
      continue;
    }
    std::string joined = tokens[i];
    for (std::size_t k = 1; k < matched; ++k) joined += " " + tokens[i + k];
    out.push_back(std::move(joined));
    i += matched;
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const auto& c : unicode::Decode(text)) {
    if (unicode::IsAlnum(c.code_point)) {
      unicode::AppendUtf8(unicode::ToLower(c.code_point), current);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerOptions& options) {
  std::vector<std::string> tokens = options.phrases.Merge(Tokenize(text));
  if (!options.stopwords.empty()) {
    std::erase_if(tokens, [&](const std::string& t) {
      return options.stopwords.contains(t);
    });
  }
  return tokens;
}

std::vector<std::string> TokenizeDocument(const Document& doc,
                                          const TokenizerOptions& options) {
  std::vector<std::string> tokens = Tokenize(doc.text, options);
  if (options.drop_defined_term && doc.term) {
    const std::vector<std::string> term_tokens =
        options.phrases.Merge(Tokenize(*doc.term));
    std::erase_if(tokens, [&](const std::string& t) {
      return std::find(term_tokens.begin(), term_tokens.end(), t) !=
             term_tokens.end();
    });
  }
  return tokens;
}

std::set<std::string, std::less<>> LoadStopwords(
    const std::filesystem::path& path) {
  return ReadLines(path);
}

PhraseList LoadPhrases(const std::filesystem::path& path) {
  PhraseList phrases;
  for (const std::string& line : ReadLines(path)) phrases.Add(line);
  return phrases;
}

TermDictionary::TermDictionary(std::vector<std::string> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()),
                 entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) index_[entries_[i]] = i;
}

TermDictionary TermDictionary::Build(std::span<const Document> docs,
                                     const TokenizerOptions& options) {
  if (docs.empty()) {
    throw std::invalid_argument("cannot build a dictionary from no documents");
  }
  std::vector<std::string> all;
  for (const Document& doc : docs) {
    std::vector<std::string> tokens = TokenizeDocument(doc, options);
    all.insert(all.end(), std::make_move_iterator(tokens.begin()),
               std::make_move_iterator(tokens.end()));
  }
  if (all.empty()) {
    throw DataError("no lexical entities in any document");
  }
  return TermDictionary(std::move(all));
}

std::optional<std::size_t> TermDictionary::IndexOf(
    std::string_view entity) const {
  const auto it = index_.find(entity);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BinaryDocTermMatrix::BinaryDocTermMatrix(std::size_t cols,
                                         std::vector<std::string> doc_ids)
    : cols_(cols),
      words_per_row_((cols + 63) / 64),
      doc_ids_(std::move(doc_ids)),
      bits_(doc_ids_.size() * words_per_row_, 0) {}

bool BinaryDocTermMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return (bits_[row * words_per_row_ + col / 64] >> (col % 64)) & 1u;
}

void BinaryDocTermMatrix::set(std::size_t row, std::size_t col) {
  if (row >= rows() || col >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  bits_[row * words_per_row_ + col / 64] |= std::uint64_t{1} << (col % 64);
}

std::span<const std::uint64_t> BinaryDocTermMatrix::row_bits(
    std::size_t row) const {
  return std::span<const std::uint64_t>(bits_).subspan(row * words_per_row_,
                                                       words_per_row_);
}

std::size_t BinaryDocTermMatrix::RowCount(std::size_t row) const {
  std::size_t count = 0;
  for (std::uint64_t word : row_bits(row)) count += std::popcount(word);
  return count;
}

BinaryDocTermMatrix Vectorize(std::span<const Document> docs,
                              const TermDictionary& dictionary,
                              const TokenizerOptions& options) {
  std::vector<std::string> ids;
  ids.reserve(docs.size());
  for (const Document& doc : docs) ids.push_back(doc.id);
  BinaryDocTermMatrix matrix(dictionary.size(), std::move(ids));
  for (std::size_t row = 0; row < docs.size(); ++row) {
    const std::vector<std::string> tokens =
        TokenizeDocument(docs[row], options);
    if (tokens.empty()) {
      throw DataError("document \"" + docs[row].id +
                      "\" has no lexical entities after tokenization");
    }
    for (const std::string& token : tokens) {
      const auto col = dictionary.IndexOf(token);
      if (!col) {
        throw DataError("token \"" + token + "\" of document \"" +
                        docs[row].id + "\" is not in the dictionary");
      }
      matrix.set(row, *col);
    }
  }
  return matrix;
}

VectorizedCorpus Ingest(std::span<const Document> docs,
                        const TokenizerOptions& options) {
  TermDictionary dictionary = TermDictionary::Build(docs, options);
  BinaryDocTermMatrix matrix = Vectorize(docs, dictionary, options);
  return {std::move(dictionary), std::move(matrix)};
}

}  // namespace defclust
