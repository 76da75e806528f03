#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexsense/triple_store.hpp"

namespace lexsense {

// -ln(holders / total), in nats. Throws DomainError unless 1 <= holders <= total.
double information_content(std::size_t holders, std::size_t total);

// Information content of `feature` among the lemmas of `pos`.
double information_content(const TripleIndex& index, Pos pos,
                           const SyntacticFeature& feature);

// Information content of every feature held by some lemma of one POS.
class InformationContentTable {
 public:
  InformationContentTable() = default;
  static InformationContentTable build(const TripleIndex& index, Pos pos);

  Pos pos() const { return pos_; }
  std::size_t total_lemmas() const { return total_; }

  // Throws DomainError for a feature no lemma of this POS holds.
  double at(const SyntacticFeature& feature) const;
  const std::map<SyntacticFeature, double>& values() const { return ic_; }

 private:
  Pos pos_ = Pos::Noun;
  std::size_t total_ = 0;
  std::map<SyntacticFeature, double> ic_;
};

// Lin similarity over the distinct feature sets of two words:
//   2 * I(F1 & F2) / (I(F1) + I(F2)), 0 when nothing is shared.
// Throws UnknownWordError when either word is not indexed under `pos`.
double lin_similarity(const TripleIndex& index, const InformationContentTable& ic,
                      std::string_view w1, std::string_view w2, Pos pos);

struct Neighbor {
  std::string lemma;
  double score = 0.0;

  bool operator==(const Neighbor&) const = default;
};

struct NeighborList {
  WordKey target;
  std::vector<Neighbor> neighbors;  // score descending, then lemma ascending
  std::size_t k = 0;
};

// Top-k candidates by Lin similarity to `target`. Candidates not in the index
// and the target itself are ignored. Throws UnknownWordError for an unindexed
// target and InvalidArgument for k == 0.
NeighborList nearest_neighbors(const TripleIndex& index, const InformationContentTable& ic,
                               const WordKey& target, const std::set<std::string>& candidates,
                               std::size_t k);

}  // namespace lexsense
