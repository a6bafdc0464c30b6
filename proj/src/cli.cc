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

#include "defclust/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "defclust/error.h"
#include "defclust/hac.h"
#include "defclust/io.h"
#include "defclust/patterns.h"
#include "json.hpp"
#include "unicode.h"

namespace defclust::cli {

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void Emit(const std::optional<std::filesystem::path>& path,
          const std::string& content, std::ostream& out) {
  if (path) {
    WriteFileAtomically(*path, content);
  } else {
    out << content;
  }
}

TokenizerOptions MakeTokenizerOptions(const RunConfig& config) {
  TokenizerOptions options;
  if (config.stopwords) options.stopwords = LoadStopwords(*config.stopwords);
  if (config.phrases) options.phrases = LoadPhrases(*config.phrases);
  options.drop_defined_term = config.drop_defined_term;
  return options;
}

struct Pipeline {
  std::vector<Document> docs;
  VectorizedCorpus corpus;
  PairwiseDistances distances;
  Dendrogram dendrogram;
};

Pipeline BuildPipeline(const RunConfig& config,
                       const std::filesystem::path& corpus_path) {
  std::vector<Document> docs = LoadCorpus(corpus_path, config.format);
  if (docs.size() < 2) {
    throw DataError(corpus_path.string() +
                    ": clustering needs at least two documents");
  }
  VectorizedCorpus corpus = Ingest(docs, MakeTokenizerOptions(config));
  PairwiseDistances distances =
      ComputeDistances(corpus.matrix, config.distance, config.distance_mode);
  Dendrogram dendrogram = BuildDendrogram(distances);
  return {std::move(docs), std::move(corpus), std::move(distances),
          std::move(dendrogram)};
}

GoldAnnotation GoldFor(const RunConfig& config, std::size_t gold_index,
                       const std::vector<Document>& docs) {
  if (config.inputs.size() > gold_index) {
    return GoldAnnotation::Load(config.inputs[gold_index]);
  }
  return GoldAnnotation::FromDocuments(docs);
}

void RunExtract(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<std::string> terms = config.terms;
  if (config.terms_file) {
    std::istringstream lines(ReadFile(*config.terms_file));
    std::string line;
    while (std::getline(lines, line)) {
      const std::string_view term = unicode::Trim(line);
      if (!term.empty() && term.front() != '#') terms.emplace_back(term);
    }
  }
  if (terms.empty()) throw UsageError("extract needs --terms or --terms-file");
  const std::vector<PatternTemplate> templates =
      config.patterns ? LoadTemplates(*config.patterns) : DefaultTemplates();
  if (templates.empty()) throw DataError("no pattern templates loaded");
  const std::vector<SearchPattern> patterns = ExpandPatterns(templates, terms);

  std::vector<CandidateContext> candidates;
  for (const auto& path : config.inputs) {
    std::vector<CandidateContext> found =
        ScanText(ReadFile(path), path.string(), patterns);
    candidates.insert(candidates.end(), std::make_move_iterator(found.begin()),
                      std::make_move_iterator(found.end()));
  }
  std::ostringstream buffer;
  if (config.as_corpus) {
    const CandidateCorpus corpus = CandidatesToCorpus(candidates);
    if (corpus.skipped_empty > 0) {
      err << "skipped " << corpus.skipped_empty
          << " candidate(s) with an empty definition tail\n";
    }
    WriteCorpusJsonl(buffer, corpus.documents);
  } else {
    WriteCandidatesJsonl(buffer, candidates);
  }
  Emit(config.output, buffer.str(), out);
}

void RunCluster(const RunConfig& config, std::ostream& out) {
  const Pipeline p = BuildPipeline(config, config.inputs.at(0));
  const auto& ids = p.corpus.matrix.doc_ids();
  if (config.energy_csv) {
    std::ostringstream dump;
    WriteEnergyCsv(dump, ComputeEnergyMatrix(p.corpus.matrix), ids);
    WriteFileAtomically(*config.energy_csv, dump.str());
  }
  if (config.distances_csv) {
    std::ostringstream dump;
    WriteDistanceCsv(dump, p.distances, ids);
    WriteFileAtomically(*config.distances_csv, dump.str());
  }
  if (config.dendrogram_csv) {
    std::ostringstream dump;
    WriteDendrogramCsv(dump, p.dendrogram);
    WriteFileAtomically(*config.dendrogram_csv, dump.str());
  }
  const Clustering clustering =
      CutAtThreshold(p.dendrogram, *config.alpha, config.min_size);
  std::ostringstream buffer;
  WriteClusteringJson(buffer, clustering, ids);
  Emit(config.output, buffer.str(), out);
}

void RunSweepCommand(const RunConfig& config, std::ostream& out) {
  const Pipeline p = BuildPipeline(config, config.inputs.at(0));
  const GoldAnnotation gold = GoldFor(config, 1, p.docs);
  const SweepGrid grid = config.grid.value_or(SweepGrid::Default());
  const std::vector<EvalRow> rows = RunSweep(
      p.dendrogram, p.corpus.matrix.doc_ids(), gold, grid, config.min_size);
  std::ostringstream buffer;
  WriteSweepCsv(buffer, rows, grid.decimals());
  Emit(config.output, buffer.str(), out);
}

void RunEval(const RunConfig& config, std::ostream& out) {
  std::istringstream in(ReadFile(config.inputs.at(0)));
  const LoadedClustering loaded =
      ParseClusteringJson(in, config.inputs[0].string());
  const GoldAnnotation gold = GoldAnnotation::Load(config.inputs.at(1));
  const std::vector<std::size_t> intruders =
      IdentifyIntruders(loaded.clustering, loaded.doc_ids, gold);

  nlohmann::json result = nlohmann::json::object();
  result["alpha"] = loaded.clustering.alpha;
  result["num_groups"] = loaded.clustering.groups.size();
  result["precision"] = Precision(loaded.clustering, intruders);
  result["recall"] = Recall(loaded.clustering, loaded.doc_ids.size());
  result["zone"] = std::string(ToString(ClassifyZone(loaded.clustering.alpha)));
  nlohmann::json ids = nlohmann::json::array();
  for (std::size_t item : intruders) ids.push_back(loaded.doc_ids[item]);
  result["intruders"] = std::move(ids);
  Emit(config.output, result.dump() + "\n", out);
}

void RunReport(const RunConfig& config, std::ostream& out) {
  const Pipeline p = BuildPipeline(config, config.inputs.at(0));
  const Clustering clustering =
      CutAtThreshold(p.dendrogram, *config.alpha, config.min_size);
  std::optional<std::vector<std::string>> labels;
  const GoldAnnotation gold = GoldFor(config, 1, p.docs);
  if (config.inputs.size() > 1 || gold.sense_of.size() == p.docs.size()) {
    labels = gold.LabelsFor(p.corpus.matrix.doc_ids());
  }
  std::ostringstream buffer;
  if (labels) {
    WriteReport(buffer, clustering, p.docs,
                std::span<const std::string>(*labels));
  } else {
    WriteReport(buffer, clustering, p.docs, std::nullopt);
  }
  Emit(config.output, buffer.str(), out);
}

}  // namespace

void RunConfig::Validate() const {
  const bool wants_alpha =
      command == Command::kCluster || command == Command::kReport;
  if (wants_alpha && !alpha) throw UsageError("--alpha is required");
  if (!wants_alpha && alpha) {
    throw UsageError("--alpha is only valid for cluster and report");
  }
  if (alpha && !(*alpha >= 0.0 && *alpha <= 1.0)) {
    throw UsageError("--alpha must lie in [0, 1]");
  }
  if (grid && command != Command::kSweep) {
    throw UsageError("--grid is only valid for sweep");
  }
  if (grid) {
    try {
      grid->Validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (min_size == 0) throw UsageError("--min-size must be positive");
  std::size_t min_inputs = 1;
  std::size_t max_inputs = 1;
  switch (command) {
    case Command::kExtract:
      max_inputs = SIZE_MAX;
      break;
    case Command::kCluster:
      break;
    case Command::kSweep:
    case Command::kReport:
      max_inputs = 2;
      break;
    case Command::kEval:
      min_inputs = max_inputs = 2;
      break;
  }
  if (inputs.size() < min_inputs || inputs.size() > max_inputs) {
    throw UsageError("wrong number of input files");
  }
  if (command != Command::kExtract &&
      (patterns || !terms.empty() || terms_file || as_corpus)) {
    throw UsageError("pattern options are only valid for extract");
  }
  if (command != Command::kCluster &&
      (dendrogram_csv || energy_csv || distances_csv)) {
    throw UsageError("dump options are only valid for cluster");
  }
  if (energy_csv && distance != DistanceKind::kEnergy) {
    throw UsageError("--dump-energy needs --distance energy");
  }
}

void Execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.Validate();
  switch (config.command) {
    case Command::kExtract:
      RunExtract(config, out, err);
      return;
    case Command::kCluster:
      RunCluster(config, out);
      return;
    case Command::kSweep:
      RunSweepCommand(config, out);
      return;
    case Command::kEval:
      RunEval(config, out);
      return;
    case Command::kReport:
      RunReport(config, out);
      return;
  }
}

namespace {

struct Flags {
  std::string distance = "energy";
  std::string distance_mode = "inverted";
  std::string format = "jsonl";
  std::string grid;
  double alpha = 0.0;
  std::vector<std::string> inputs;
  std::string output;
  std::string stopwords, phrases, patterns, terms_file;
  std::string dendrogram, energy, distances;
};

void AddCorpusOptions(CLI::App* cmd, Flags& f, RunConfig& c) {
  cmd->add_option("--distance", f.distance, "energy or hamming")
      ->check(CLI::IsMember({"energy", "hamming"}));
  cmd->add_option("--distance-mode", f.distance_mode,
                  "inverted (1 - normalized energy) or raw")
      ->check(CLI::IsMember({"inverted", "raw"}));
  cmd->add_option("--format", f.format, "jsonl or plain_lines")
      ->check(CLI::IsMember({"jsonl", "plain_lines"}));
  cmd->add_option("--min-size", c.min_size, "smallest reported group")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--stopwords", f.stopwords, "stopword file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--phrases", f.phrases, "multi-word entity file")
      ->check(CLI::ExistingFile);
  cmd->add_flag("--drop-term", c.drop_defined_term,
                "remove the defined term from its own definitions");
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cluster short definitions by textual energy", "defclust"};
  app.require_subcommand(1);
  RunConfig config;
  Flags f;

  CLI::App* extract =
      app.add_subcommand("extract", "find candidate definitional contexts");
  extract->add_option("files", f.inputs, "text files to scan")->required();
  extract->add_option("--terms", config.terms, "terms, comma separated")
      ->delimiter(',');
  extract->add_option("--terms-file", f.terms_file, "one term per line")
      ->check(CLI::ExistingFile);
  extract->add_option("--patterns", f.patterns, "surface<TAB>def_type file")
      ->check(CLI::ExistingFile);
  extract->add_flag("--as-corpus", config.as_corpus,
                    "write corpus JSONL instead of candidate JSONL");

  CLI::App* cluster = app.add_subcommand("cluster", "cluster at one alpha");
  cluster->add_option("corpus", f.inputs, "corpus file")->required();
  cluster->add_option("--alpha", f.alpha, "distance threshold")->required();
  cluster->add_option("--dendrogram", f.dendrogram, "merge list CSV output");
  cluster->add_option("--dump-energy", f.energy, "energy matrix CSV output");
  cluster->add_option("--dump-distances", f.distances,
                      "pairwise distance CSV output");
  AddCorpusOptions(cluster, f, config);

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a threshold sweep");
  sweep->add_option("inputs", f.inputs, "corpus and optional gold file")
      ->required()
      ->expected(1, 2);
  sweep->add_option("--grid", f.grid, "START:END:STEP (default 0.01:1.00:0.01)");
  AddCorpusOptions(sweep, f, config);

  CLI::App* eval =
      app.add_subcommand("eval", "score a clustering against gold senses");
  eval->add_option("inputs", f.inputs, "clustering JSON, gold JSONL")
      ->required()
      ->expected(2);

  CLI::App* report = app.add_subcommand("report", "print groups with texts");
  report->add_option("inputs", f.inputs, "corpus and optional gold file")
      ->required()
      ->expected(1, 2);
  report->add_option("--alpha", f.alpha, "distance threshold")->required();
  AddCorpusOptions(report, f, config);

  for (CLI::App* cmd : {extract, cluster, sweep, eval, report}) {
    cmd->add_option("-o,--output", f.output, "output file (default stdout)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (extract->parsed()) config.command = Command::kExtract;
    if (cluster->parsed()) config.command = Command::kCluster;
    if (sweep->parsed()) config.command = Command::kSweep;
    if (eval->parsed()) config.command = Command::kEval;
    if (report->parsed()) config.command = Command::kReport;
    if (cluster->parsed() || report->parsed()) config.alpha = f.alpha;
    for (const auto& in : f.inputs) config.inputs.emplace_back(in);
    if (!f.output.empty()) config.output = f.output;
    config.distance = *ParseDistanceKind(f.distance);
    config.distance_mode = *ParseEnergyMode(f.distance_mode);
    config.format = *ParseCorpusFormat(f.format);
    if (!f.grid.empty()) {
      try {
        config.grid = SweepGrid::Parse(f.grid);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--grid: ") + e.what());
      }
    }
    if (!f.stopwords.empty()) config.stopwords = f.stopwords;
    if (!f.phrases.empty()) config.phrases = f.phrases;
    if (!f.patterns.empty()) config.patterns = f.patterns;
    if (!f.terms_file.empty()) config.terms_file = f.terms_file;
    if (!f.dendrogram.empty()) config.dendrogram_csv = f.dendrogram;
    if (!f.energy.empty()) config.energy_csv = f.energy;
    if (!f.distances.empty()) config.distances_csv = f.distances;
    Execute(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace defclust::cli
