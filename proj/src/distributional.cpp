#include "lexsense/distributional.hpp"

#include <algorithm>
#include <cmath>

#include "lexsense/error.hpp"

namespace lexsense {

double information_content(std::size_t holders, std::size_t total) {
  if (holders == 0 || holders > total) {
    throw DomainError("information content needs 1 <= holders <= total (got " +
                      std::to_string(holders) + "/" + std::to_string(total) + ")");
  }
  if (holders == total) return 0.0;
  return -std::log(static_cast<double>(holders) / static_cast<double>(total));
}

double information_content(const TripleIndex& index, Pos pos, const SyntacticFeature& feature) {
  return information_content(index.holders(feature, pos), index.vocabulary(pos).size());
}

InformationContentTable InformationContentTable::build(const TripleIndex& index, Pos pos) {
  InformationContentTable table;
  table.pos_ = pos;
  table.total_ = index.vocabulary(pos).size();
  for (const auto& [feature, holders] : index.holder_counts(pos)) {
    table.ic_.emplace_hint(table.ic_.end(), feature, information_content(holders, table.total_));
  }
  return table;
}

double InformationContentTable::at(const SyntacticFeature& feature) const {
  const auto it = ic_.find(feature);
  if (it == ic_.end()) {
    throw DomainError("feature " + feature.relation + "(" + feature.partner +
                      ") has no holder of pos " + std::string(to_string(pos_)));
  }
  return it->second;
}

namespace {

const FeatureCounts& require_word(const TripleIndex& index, std::string_view lemma, Pos pos) {
  const auto* feats = index.features(lemma, pos);
  if (feats == nullptr) {
    throw UnknownWordError("'" + std::string(lemma) + "' is not indexed as " +
                           std::string(to_string(pos)));
  }
  return *feats;
}

double information_sum(const FeatureCounts& feats, const InformationContentTable& ic) {
  double sum = 0.0;
  for (const auto& [feature, count] : feats) sum += ic.at(feature);
  return sum;
}

double lin_over(const FeatureCounts& a, double info_a, const FeatureCounts& b, double info_b,
                const InformationContentTable& ic) {
  const double denominator = info_a + info_b;
  if (denominator == 0.0) return 0.0;
  // Both maps are ordered, so the shared sum is accumulated in the same order
  // whichever word comes first.
  double shared = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      shared += ic.at(ia->first);
      ++ia;
      ++ib;
    }
  }
  return 2.0 * shared / denominator;
}

void require_table(const InformationContentTable& ic, Pos pos) {
  if (ic.pos() != pos) {
    throw InvalidArgument("information content table is for " + std::string(to_string(ic.pos())) +
                          ", not " + std::string(to_string(pos)));
  }
}

}  // namespace

double lin_similarity(const TripleIndex& index, const InformationContentTable& ic,
                      std::string_view w1, std::string_view w2, Pos pos) {
  require_table(ic, pos);
  const auto& f1 = require_word(index, w1, pos);
  const auto& f2 = require_word(index, w2, pos);
  return lin_over(f1, information_sum(f1, ic), f2, information_sum(f2, ic), ic);
}

NeighborList nearest_neighbors(const TripleIndex& index, const InformationContentTable& ic,
                               const WordKey& target, const std::set<std::string>& candidates,
                               std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be positive");
  require_table(ic, target.pos);
  const auto& target_feats = require_word(index, target.lemma, target.pos);
  const double target_info = information_sum(target_feats, ic);

  NeighborList list;
  list.target = target;
  list.k = k;
  list.neighbors.reserve(candidates.size());
  for (const auto& lemma : candidates) {
    if (lemma == target.lemma) continue;
    const auto* feats = index.features(lemma, target.pos);
    if (feats == nullptr) continue;
    const double score = lin_over(target_feats, target_info, *feats, information_sum(*feats, ic), ic);
    list.neighbors.push_back(Neighbor{lemma, score});
  }
  const auto by_rank = [](const Neighbor& a, const Neighbor& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.lemma < b.lemma;
  };
  if (list.neighbors.size() > k) {
    std::partial_sort(list.neighbors.begin(), list.neighbors.begin() + static_cast<std::ptrdiff_t>(k),
                      list.neighbors.end(), by_rank);
    list.neighbors.resize(k);
  } else {
    std::sort(list.neighbors.begin(), list.neighbors.end(), by_rank);
  }
  return list;
}

}  // namespace lexsense
