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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defclust/corpus.h"
#include "defclust/distance.h"
#include "defclust/error.h"
#include "defclust/eval.h"
#include "defclust/hac.h"
#include "defclust/patterns.h"

namespace py = pybind11;

namespace defclust {
namespace {

template <typename Enum, typename Parse>
Enum ParseOrThrow(const std::string& name, Parse parse, const char* what) {
  const std::optional<Enum> value = parse(name);
  if (!value) throw py::value_error(std::string("unknown ") + what + ": " + name);
  return *value;
}

TokenizerOptions Options(const std::optional<std::vector<std::string>>& stopwords,
                         const std::optional<std::vector<std::string>>& phrases,
                         bool drop_defined_term) {
  TokenizerOptions options;
  if (stopwords) {
    for (const auto& w : *stopwords) options.stopwords.insert(w);
  }
  if (phrases) {
    for (const auto& p : *phrases) options.phrases.Add(p);
  }
  options.drop_defined_term = drop_defined_term;
  return options;
}

BinaryDocTermMatrix MatrixFromRows(
    const std::vector<std::vector<int>>& rows,
    std::optional<std::vector<std::string>> doc_ids) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  if (!doc_ids) {
    doc_ids.emplace();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      doc_ids->push_back(std::to_string(i));
    }
  }
  if (doc_ids->size() != rows.size()) {
    throw py::value_error("doc_ids and rows differ in length");
  }
  BinaryDocTermMatrix m(cols, std::move(*doc_ids));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw py::value_error("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[i][c] != 0 && rows[i][c] != 1) {
        throw py::value_error("matrix entries must be 0 or 1");
      }
      if (rows[i][c]) m.set(i, c);
    }
  }
  return m;
}

std::vector<PatternTemplate> Templates(
    const std::optional<std::vector<std::pair<std::string, std::string>>>&
        templates) {
  if (!templates) return DefaultTemplates();
  std::vector<PatternTemplate> out;
  for (const auto& [surface, type] : *templates) {
    out.push_back(PatternTemplate::Compile(
        surface, ParseOrThrow<DefinitionType>(type, ParseDefinitionType,
                                              "definition type")));
  }
  return out;
}

GoldAnnotation Gold(const std::map<std::string, std::string>& sense_of) {
  GoldAnnotation gold;
  for (const auto& [id, sense] : sense_of) gold.sense_of.emplace(id, sense);
  return gold;
}

}  // namespace
}  // namespace defclust

PYBIND11_MODULE(_core, m) {
  using namespace defclust;
  m.doc() = "Definition clustering core";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  py::class_<Document>(m, "Document")
      .def(py::init([](std::string id, std::string text,
                       std::optional<std::string> term,
                       std::optional<std::string> def_type,
                       std::optional<std::string> gold_sense) {
             Document d;
             d.id = std::move(id);
             d.text = std::move(text);
             d.term = std::move(term);
             if (def_type) {
               d.def_type = ParseOrThrow<DefinitionType>(
                   *def_type, ParseDefinitionType, "definition type");
             }
             d.gold_sense = std::move(gold_sense);
             return d;
           }),
           py::arg("id"), py::arg("text"), py::arg("term") = py::none(),
           py::arg("def_type") = py::none(),
           py::arg("gold_sense") = py::none())
      .def_readonly("id", &Document::id)
      .def_readonly("text", &Document::text)
      .def_readonly("term", &Document::term)
      .def_property_readonly("def_type",
                             [](const Document& d) -> std::optional<std::string> {
                               if (!d.def_type) return std::nullopt;
                               return std::string(ToString(*d.def_type));
                             })
      .def_readonly("gold_sense", &Document::gold_sense)
      .def("__repr__", [](const Document& d) {
        return "Document(id=" + py::repr(py::str(d.id)).cast<std::string>() + ")";
      });

  m.def(
      "load_corpus",
      [](const std::filesystem::path& path, const std::string& format) {
        return LoadCorpus(path, ParseOrThrow<CorpusFormat>(
                                    format, ParseCorpusFormat, "format"));
      },
      py::arg("path"), py::arg("format") = "jsonl");

  m.def(
      "tokenize",
      [](const std::string& text,
         std::optional<std::vector<std::string>> stopwords,
         std::optional<std::vector<std::string>> phrases) {
        return Tokenize(text, Options(stopwords, phrases, false));
      },
      py::arg("text"), py::arg("stopwords") = py::none(),
      py::arg("phrases") = py::none());

  py::class_<BinaryDocTermMatrix>(m, "BinaryDocTermMatrix")
      .def(py::init(&MatrixFromRows), py::arg("rows"),
           py::arg("doc_ids") = py::none())
      .def_property_readonly("rows", &BinaryDocTermMatrix::rows)
      .def_property_readonly("cols", &BinaryDocTermMatrix::cols)
      .def_property_readonly("doc_ids", &BinaryDocTermMatrix::doc_ids)
      .def("at", &BinaryDocTermMatrix::at, py::arg("row"), py::arg("col"))
      .def("to_list", [](const BinaryDocTermMatrix& x) {
        std::vector<std::vector<int>> out(x.rows(), std::vector<int>(x.cols()));
        for (std::size_t i = 0; i < x.rows(); ++i) {
          for (std::size_t c = 0; c < x.cols(); ++c) out[i][c] = x.at(i, c);
        }
        return out;
      });

  m.def(
      "ingest",
      [](const std::vector<Document>& docs,
         std::optional<std::vector<std::string>> stopwords,
         std::optional<std::vector<std::string>> phrases,
         bool drop_defined_term) {
        VectorizedCorpus c =
            Ingest(docs, Options(stopwords, phrases, drop_defined_term));
        return py::make_tuple(c.dictionary.entries(), std::move(c.matrix));
      },
      py::arg("docs"), py::arg("stopwords") = py::none(),
      py::arg("phrases") = py::none(), py::arg("drop_defined_term") = false,
      "Returns (vocabulary, matrix).");

  m.def(
      "energy_matrix",
      [](const BinaryDocTermMatrix& x) {
        const EnergyMatrix e = ComputeEnergyMatrix(x);
        std::vector<std::vector<double>> out(e.size(),
                                             std::vector<double>(e.size()));
        for (std::size_t i = 0; i < e.size(); ++i) {
          for (std::size_t j = 0; j < e.size(); ++j) out[i][j] = e.energy(i, j);
        }
        return out;
      },
      py::arg("matrix"));

  py::class_<PairwiseDistances>(m, "PairwiseDistances")
      .def(py::init<std::size_t, std::vector<double>>(), py::arg("n"),
           py::arg("values"))
      .def_property_readonly("size", &PairwiseDistances::size)
      .def_property_readonly("values",
                             [](const PairwiseDistances& d) {
                               return std::vector<double>(d.values().begin(),
                                                          d.values().end());
                             })
      .def("at", &PairwiseDistances::at, py::arg("i"), py::arg("j"))
      .def("__len__", [](const PairwiseDistances& d) { return d.values().size(); });

  m.def(
      "energy_distances",
      [](const BinaryDocTermMatrix& x, const std::string& mode) {
        return EnergyDistances(
            ComputeEnergyMatrix(x),
            ParseOrThrow<EnergyMode>(mode, ParseEnergyMode, "energy mode"));
      },
      py::arg("matrix"), py::arg("mode") = "inverted");
  m.def("hamming_distances", &HammingDistances, py::arg("matrix"));

  py::class_<Merge>(m, "Merge")
      .def_readonly("left", &Merge::left)
      .def_readonly("right", &Merge::right)
      .def_readonly("distance", &Merge::distance)
      .def_readonly("id", &Merge::id)
      .def("__iter__", [](const Merge& mg) {
        return py::iter(py::make_tuple(mg.left, mg.right, mg.distance, mg.id));
      });

  py::class_<Dendrogram>(m, "Dendrogram")
      .def_property_readonly("leaf_count", &Dendrogram::leaf_count)
      .def_property_readonly("merges", &Dendrogram::merges);

  m.def("build_dendrogram", &BuildDendrogram, py::arg("distances"));

  py::class_<Clustering>(m, "Clustering")
      .def_readonly("alpha", &Clustering::alpha)
      .def_readonly("min_size", &Clustering::min_size)
      .def_readonly("groups", &Clustering::groups)
      .def_readonly("ungrouped", &Clustering::ungrouped)
      .def_property_readonly("grouped_count", &Clustering::grouped_count);

  m.def("cut_at_threshold", &CutAtThreshold, py::arg("dendrogram"),
        py::arg("alpha"), py::arg("min_size") = 2);
  m.def("recall", &Recall, py::arg("clustering"), py::arg("total"));
  m.def(
      "identify_intruders",
      [](const Clustering& c, const std::vector<std::string>& labels) {
        return IdentifyIntruders(c, labels);
      },
      py::arg("clustering"), py::arg("labels"));
  m.def(
      "precision",
      [](const Clustering& c, const std::vector<std::size_t>& intruders) {
        return Precision(c, intruders);
      },
      py::arg("clustering"), py::arg("intruders"));
  m.def(
      "classify_zone",
      [](double alpha) { return std::string(ToString(ClassifyZone(alpha))); },
      py::arg("alpha"));

  py::class_<EvalRow>(m, "EvalRow")
      .def_readonly("alpha", &EvalRow::alpha)
      .def_readonly("num_groups", &EvalRow::num_groups)
      .def_readonly("precision", &EvalRow::precision)
      .def_readonly("recall", &EvalRow::recall)
      .def_property_readonly(
          "zone", [](const EvalRow& r) { return std::string(ToString(r.zone)); });

  m.def(
      "run_sweep",
      [](const Dendrogram& t, const std::vector<std::string>& doc_ids,
         const std::map<std::string, std::string>& gold,
         const std::string& grid, std::size_t min_size) {
        return RunSweep(t, doc_ids, Gold(gold), SweepGrid::Parse(grid),
                        min_size);
      },
      py::arg("dendrogram"), py::arg("doc_ids"), py::arg("gold"),
      py::arg("grid") = "0.01:1.00:0.01", py::arg("min_size") = 2);

  py::class_<SearchPattern>(m, "SearchPattern")
      .def_readonly("text", &SearchPattern::text)
      .def_readonly("term", &SearchPattern::term)
      .def_property_readonly("template", [](const SearchPattern& p) {
        return p.source.surface();
      });

  m.def(
      "expand_patterns",
      [](const std::vector<std::string>& terms,
         const std::optional<std::vector<std::pair<std::string, std::string>>>&
             templates) { return ExpandPatterns(Templates(templates), terms); },
      py::arg("terms"), py::arg("templates") = py::none(),
      "templates: list of (surface, def_type); the built-in set when None.");

  py::class_<CandidateContext>(m, "CandidateContext")
      .def_readonly("source_id", &CandidateContext::source_id)
      .def_readonly("begin", &CandidateContext::begin)
      .def_readonly("end", &CandidateContext::end)
      .def_readonly("term", &CandidateContext::term)
      .def_property_readonly(
          "pattern", [](const CandidateContext& c) { return c.pattern.surface(); })
      .def_property_readonly("def_type",
                             [](const CandidateContext& c) {
                               return std::string(ToString(c.pattern.def_type()));
                             })
      .def_readonly("tail", &CandidateContext::tail)
      .def_readonly("verified", &CandidateContext::verified);

  m.def(
      "scan_text",
      [](const std::string& text, const std::string& source_id,
         const std::vector<SearchPattern>& patterns) {
        return ScanText(text, source_id, patterns);
      },
      py::arg("text"), py::arg("source_id"), py::arg("patterns"));

  m.def(
      "candidates_to_corpus",
      [](const std::vector<CandidateContext>& cands) {
        CandidateCorpus c = CandidatesToCorpus(cands);
        return py::make_tuple(std::move(c.documents), c.skipped_empty);
      },
      py::arg("candidates"), "Returns (documents, skipped_empty).");
}
