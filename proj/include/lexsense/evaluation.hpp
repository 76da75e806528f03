#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexsense/corpus.hpp"
#include "lexsense/disambiguator.hpp"
#include "lexsense/lesk.hpp"
#include "lexsense/semantic_network.hpp"
#include "lexsense/triple_store.hpp"

namespace lexsense {

struct GoldAnnotation {
  std::string document;
  std::size_t paragraph = 0;
  std::size_t token = 0;
  std::string lemma;
  Pos pos = Pos::Noun;
  std::string synset;
};

// doc-id<TAB>paragraph<TAB>token<TAB>lemma<TAB>pos<TAB>synset-id per line.
// Throws ParseError on malformed lines or a repeated (doc, paragraph, token).
std::vector<GoldAnnotation> read_gold(const std::filesystem::path& path);

struct AccuracyCell {
  std::size_t correct = 0;
  std::size_t total = 0;
  // Gold occurrences with no matching result (the token was tagged with
  // another POS or lemma); they are not part of `total`.
  std::size_t missed = 0;

  // 100 * correct / total; nullopt when total is 0.
  std::optional<double> accuracy() const;
  bool pos_error() const { return total == 0 && missed > 0; }
};

struct RunConfig {
  ScorerKind scorer = ScorerKind::LeskExtended;
  std::size_t k = 5;
  double fraction = 1.0;
  std::uint64_t seed = 0;

  std::string subset_label() const;  // e.g. "30%:1"
};

struct EvaluationReport {
  RunConfig config;
  std::map<std::string, AccuracyCell> per_lemma;
  std::map<std::string, Pos> lemma_pos;
  std::map<Pos, AccuracyCell> per_pos;
  AccuracyCell overall;
};

using ResultsByDocument = std::map<std::string, std::vector<DisambiguationResult>>;

// Scores chosen senses against gold. A result counts as correct when its
// chosen id (including the NoNeighbors fallback) equals the gold synset.
// Throws ConsistencyError when a gold entry names a document or position
// that does not exist.
EvaluationReport accuracy(std::span<const NamedDocument> docs, const ResultsByDocument& results,
                          std::span<const GoldAnnotation> gold, RunConfig config = {});

struct CoverageCounts {
  std::uint64_t polysemous = 0;
  std::uint64_t monosemous = 0;
  std::uint64_t unrecognized = 0;

  std::uint64_t total() const { return polysemous + monosemous + unrecognized; }
  // (poly + mono) / total, in percent; 0 for an empty row.
  double global_coverage() const;
  // poly / (poly + mono), in percent; 0 when nothing is recognized.
  double polysemous_coverage() const;
};

struct CoverageRow {
  CoverageCounts tokens;
  CoverageCounts types;  // distinct (lemma, POS)
};

struct CoverageReport {
  std::map<Pos, CoverageRow> per_pos;
  CoverageRow overall;
};

CoverageReport coverage(std::span<const NamedDocument> docs, const SemanticNetwork& net);
std::string render_coverage_tsv(const CoverageReport& report);

struct Aggregate {
  double mean = 0.0;
  double stddev = 0.0;  // population (divisor N)
};

// Throws DomainError on an empty input.
Aggregate aggregate(std::span<const double> values);

// Two decimals, halves rounded up.
std::string format_percent(double value);

// Row and column summaries of a subsets x k accuracy grid. Missing cells are
// skipped; a summary over no values is nullopt.
struct GridSummary {
  std::vector<std::optional<Aggregate>> rows;
  std::vector<std::optional<Aggregate>> columns;
  std::optional<Aggregate> of_column_means;  // mean of all column means, spread of column means
  std::optional<Aggregate> of_row_means;      // spread of row means
};
GridSummary summarize_grid(const std::vector<std::vector<std::optional<double>>>& grid);

struct SubsetSpec {
  double fraction = 1.0;
  std::uint64_t seed = 0;
};

// "0.3:1,0.3:2,1.0:0"
std::vector<SubsetSpec> parse_subset_spec(std::string_view spec);
std::vector<std::size_t> parse_k_list(std::string_view spec);

struct SweepGrid {
  std::vector<ScorerKind> scorers;
  std::vector<std::size_t> ks;
  std::vector<SubsetSpec> subsets;
};

struct SweepInputs {
  const SemanticNetwork* network = nullptr;
  std::vector<DependencyTriple> triples;
  PosLexicon lexicon;
  std::vector<NamedDocument> documents;
  std::vector<GoldAnnotation> gold;
  Tokenizer tokenizer;
  LeskOptions lesk;
  RelationPairs relation_pairs = RelationPairs::all();
  DisambiguatorOptions disambiguator;  // scorer and k are overridden per cell
};

// One report per cell, ordered scorer-major, then subset, then k. Each subset
// rebuilds the triple index from its sample. Only gold lemmas are
// disambiguated.
std::vector<EvaluationReport> sweep(const SweepGrid& grid, const SweepInputs& inputs);

std::string render_report_tsv(const EvaluationReport& report);

// Per scorer and POS: one row per subset with a column per k, row mean and
// spread, then mean and spread rows over subsets.
std::string render_aggregate_tsv(const SweepGrid& grid, const std::vector<EvaluationReport>& reports);

// Writes report_<scorer>_k<k>_<fraction>_<seed>.tsv per cell and
// aggregate.tsv into `dir` (created if needed). Returns the written paths.
std::vector<std::filesystem::path> write_sweep(const std::filesystem::path& dir, const SweepGrid& grid,
                                               const std::vector<EvaluationReport>& reports);

}  // namespace lexsense
