#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexsense/corpus.hpp"
#include "lexsense/distributional.hpp"
#include "lexsense/lesk.hpp"
#include "lexsense/semantic_network.hpp"
#include "lexsense/triple_store.hpp"

namespace lexsense {

enum class ScorerKind { LeskBase, LeskExtended, LeskVariant };

std::string_view to_string(ScorerKind kind) noexcept;  // lesk-base, lesk-ext, lesk-variant
ScorerKind parse_scorer(std::string_view name);        // throws InvalidArgument

enum class ResultStatus { Disambiguated, Monosemous, Unknown, NoNeighbors };
std::string_view to_string(ResultStatus status) noexcept;

struct SenseScore {
  std::string synset_id;
  double score = 0.0;  // integral unless neighbor weighting is on
  std::uint64_t degree = 0;

  bool operator==(const SenseScore&) const = default;
};

struct DisambiguationResult {
  AnnotatedToken token;
  ResultStatus status = ResultStatus::Unknown;
  std::optional<std::string> chosen;  // empty only for Unknown
  std::vector<SenseScore> all_scores;  // in sense order (by id)
  NeighborList neighbors_used;
};

// Relatedness of a target sense to a neighbor sense.
using SenseRelatedness = std::function<double(const Synset&, const Synset&)>;

struct DisambiguatorOptions {
  ScorerKind scorer = ScorerKind::LeskExtended;
  std::size_t k = 5;
  // Multiply each neighbor's contribution by its Lin similarity.
  bool weight_by_similarity = false;
  // Skip neighbors with no senses and pull in the next-ranked candidates.
  bool backfill_neighbors = false;
  // Worker threads for disambiguate_document; results keep document order.
  unsigned threads = 1;
};

// Distinct lemmas of the target's paragraph sharing its POS, minus the
// target lemma.
std::set<std::string> paragraph_candidates(const Document& doc, std::size_t target);

// Content lemmas of the target's paragraph, the target occurrence excluded.
std::vector<std::string> paragraph_context(const Document& doc, std::size_t target,
                                           const Tokenizer& tokenizer);

// Picks, for each content word, the sense maximizing the summed best-match
// relatedness to its distributional neighbors. Ties go to the sense with the
// larger degree, then to the smaller id.
class Disambiguator {
 public:
  Disambiguator(const TripleIndex& index, const LeskScorer& lesk, DisambiguatorOptions options);

  const DisambiguatorOptions& options() const { return options_; }

  // Replaces the Lesk pair scorer used on the neighbor path.
  void set_relatedness(SenseRelatedness relatedness);

  // `target` is a position in `doc`; must be a content word.
  DisambiguationResult disambiguate_token(const Document& doc, std::size_t target) const;

  // Every content token, or only those whose lemma is in `target_filter`.
  std::vector<DisambiguationResult> disambiguate_document(
      const Document& doc, const std::set<std::string>* target_filter = nullptr) const;

 private:
  NeighborList select_neighbors(const Document& doc, std::size_t target) const;
  double relatedness(const Synset& s1, const Synset& s2) const;

  const TripleIndex* index_;
  const LeskScorer* lesk_;
  DisambiguatorOptions options_;
  std::map<Pos, InformationContentTable> ic_;
  SenseRelatedness custom_;
};

// Brute force over every sense combination of the fragment's content tokens,
// maximizing the sum of pairwise relatedness. Ties prefer, token by token,
// larger degree then smaller id. Tokens without senses stay unassigned.
// Throws RefusedError when the number of combinations exceeds `budget`.
// Small-instance oracle only.
std::vector<std::optional<std::string>> exhaustive_disambiguate(
    const SemanticNetwork& net, const Document& fragment, const SenseRelatedness& relatedness,
    std::uint64_t budget = 100000);

}  // namespace lexsense
