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

// Short-text collections: loading, tokenization into lexical entities, the
// sorted term dictionary and the binary document-term matrix.

#ifndef DEFCLUST_CORPUS_H_
#define DEFCLUST_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace defclust {

enum class DefinitionType { kAnalytic, kExtensional, kFunctional };

std::string_view ToString(DefinitionType type);
std::optional<DefinitionType> ParseDefinitionType(std::string_view name);

struct Document {
  std::string id;
  std::string text;
  std::optional<std::string> term;
  std::optional<DefinitionType> def_type;
  // Acception label used only for evaluation.
  std::optional<std::string> gold_sense;

  friend bool operator==(const Document&, const Document&) = default;
};

enum class CorpusFormat { kJsonl, kPlainLines };

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name);

// Reads documents in file order. Throws DataError on unreadable files,
// malformed records (with line number), empty text or duplicate ids.
std::vector<Document> LoadCorpus(const std::filesystem::path& path,
                                  CorpusFormat format);
std::vector<Document> ParseCorpus(std::istream& in, CorpusFormat format,
                                  std::string_view source_name);

// Multi-word lexical entities. A phrase is stored as its token sequence;
// Merge() replaces each occurrence in a token stream with a single entity
// whose text is the tokens joined by one space. Longest match wins,
// scanning left to right.
class PhraseList {
 public:
  PhraseList() = default;

  // Each phrase is tokenized with the basic rule; phrases of fewer than
  // two tokens are ignored.
  void Add(std::string_view phrase);
  bool empty() const { return phrases_.empty(); }
  std::size_t size() const { return phrases_.size(); }

  std::vector<std::string> Merge(std::vector<std::string> tokens) const;

 private:
  std::set<std::vector<std::string>> phrases_;
  std::size_t longest_ = 0;
};

struct TokenizerOptions {
  std::set<std::string, std::less<>> stopwords;
  PhraseList phrases;
  // Removes the tokens of Document::term from that document.
  bool drop_defined_term = false;
};

// Lowercases, then splits on every code point that is neither a letter nor
// a digit. Diacritics are kept; no stemming.
std::vector<std::string> Tokenize(std::string_view text);

// Basic rule, then phrase merging, then stopword removal.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerOptions& options);

std::vector<std::string> TokenizeDocument(const Document& doc,
                                          const TokenizerOptions& options);

// One entry per non-empty line, lowercased and trimmed. Lines starting
// with '#' are comments.
std::set<std::string, std::less<>> LoadStopwords(
    const std::filesystem::path& path);
PhraseList LoadPhrases(const std::filesystem::path& path);

// Unique lexical entities in byte-lexicographic order.
class TermDictionary {
 public:
  TermDictionary() = default;
  explicit TermDictionary(std::vector<std::string> entries);

  // Throws std::invalid_argument for an empty document list and DataError
  // when every document tokenizes to nothing.
  static TermDictionary Build(std::span<const Document> docs,
                              const TokenizerOptions& options = {});

  const std::vector<std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<std::size_t> IndexOf(std::string_view entity) const;

 private:
  std::vector<std::string> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// n x p presence/absence matrix, rows bit-packed into 64-bit words.
class BinaryDocTermMatrix {
 public:
  BinaryDocTermMatrix(std::size_t cols, std::vector<std::string> doc_ids);

  std::size_t rows() const { return doc_ids_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }
  const std::vector<std::string>& doc_ids() const { return doc_ids_; }

  bool at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col);
  std::span<const std::uint64_t> row_bits(std::size_t row) const;
  std::size_t RowCount(std::size_t row) const;

  friend bool operator==(const BinaryDocTermMatrix&,
                         const BinaryDocTermMatrix&) = default;

 private:
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<std::string> doc_ids_;
  std::vector<std::uint64_t> bits_;
};

// Cell (j, i) is 1 iff entry i occurs in document j. Throws DataError if a
// token is missing from the dictionary or a document has no tokens.
BinaryDocTermMatrix Vectorize(std::span<const Document> docs,
                              const TermDictionary& dictionary,
                              const TokenizerOptions& options = {});

struct VectorizedCorpus {
  TermDictionary dictionary;
  BinaryDocTermMatrix matrix;
};

VectorizedCorpus Ingest(std::span<const Document> docs,
                        const TokenizerOptions& options = {});

}  // namespace defclust

#endif  // DEFCLUST_CORPUS_H_
