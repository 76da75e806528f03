#include "lexsense/disambiguator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "lexsense/error.hpp"

namespace lexsense {

std::string_view to_string(ScorerKind kind) noexcept {
  switch (kind) {
    case ScorerKind::LeskBase: return "lesk-base";
    case ScorerKind::LeskExtended: return "lesk-ext";
    case ScorerKind::LeskVariant: return "lesk-variant";
  }
  return "lesk-ext";
}

ScorerKind parse_scorer(std::string_view name) {
  for (const auto kind : {ScorerKind::LeskBase, ScorerKind::LeskExtended, ScorerKind::LeskVariant}) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidArgument("unknown scorer '" + std::string(name) +
                        "' (expected lesk-base, lesk-ext or lesk-variant)");
}

std::string_view to_string(ResultStatus status) noexcept {
  switch (status) {
    case ResultStatus::Disambiguated: return "disambiguated";
    case ResultStatus::Monosemous: return "monosemous";
    case ResultStatus::Unknown: return "unknown";
    case ResultStatus::NoNeighbors: return "no-neighbors";
  }
  return "unknown";
}

namespace {

const AnnotatedToken& content_token(const Document& doc, std::size_t target) {
  if (target >= doc.size()) throw InvalidArgument("target position outside the document");
  const auto& tok = doc[target];
  if (!tok.pos) {
    throw InvalidArgument("token '" + tok.surface + "' (" + tok.tag + ") is not a content word");
  }
  return tok;
}

// (score desc, degree desc, id asc)
bool ranks_before(const SenseScore& a, const SenseScore& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.degree != b.degree) return a.degree > b.degree;
  return a.synset_id < b.synset_id;
}

std::string best_of(const std::vector<SenseScore>& scores) {
  return std::min_element(scores.begin(), scores.end(), ranks_before)->synset_id;
}

}  // namespace

std::set<std::string> paragraph_candidates(const Document& doc, std::size_t target) {
  const auto& tok = content_token(doc, target);
  std::set<std::string> out;
  for (const auto& other : doc) {
    if (other.paragraph_index == tok.paragraph_index && other.pos == tok.pos &&
        other.lemma != tok.lemma) {
      out.insert(other.lemma);
    }
  }
  return out;
}

std::vector<std::string> paragraph_context(const Document& doc, std::size_t target,
                                           const Tokenizer& tokenizer) {
  const auto& tok = content_token(doc, target);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& other = doc[i];
    if (i == target || other.paragraph_index != tok.paragraph_index || !other.is_content()) continue;
    auto words = tokenizer.content_words(other.lemma);
    out.insert(out.end(), std::make_move_iterator(words.begin()), std::make_move_iterator(words.end()));
  }
  return out;
}

Disambiguator::Disambiguator(const TripleIndex& index, const LeskScorer& lesk,
                             DisambiguatorOptions options)
    : index_(&index), lesk_(&lesk), options_(options) {
  if (options_.k == 0) throw InvalidArgument("k must be positive");
  for (const auto pos : kAllPos) ic_.emplace(pos, InformationContentTable::build(index, pos));
}

void Disambiguator::set_relatedness(SenseRelatedness relatedness) {
  custom_ = std::move(relatedness);
}

double Disambiguator::relatedness(const Synset& s1, const Synset& s2) const {
  if (custom_) return custom_(s1, s2);
  if (options_.scorer == ScorerKind::LeskBase) return static_cast<double>(lesk_->base(s1, s2));
  return static_cast<double>(lesk_->extended(s1, s2));
}

NeighborList Disambiguator::select_neighbors(const Document& doc, std::size_t target) const {
  const auto& tok = doc[target];
  const WordKey key{tok.lemma, *tok.pos};
  NeighborList empty{key, {}, options_.k};
  if (!index_->contains(tok.lemma, *tok.pos)) return empty;
  const auto candidates = paragraph_candidates(doc, target);
  if (candidates.empty()) return empty;
  const auto& ic = ic_.at(*tok.pos);
  if (!options_.backfill_neighbors) {
    return nearest_neighbors(*index_, ic, key, candidates, options_.k);
  }
  auto ranked = nearest_neighbors(*index_, ic, key, candidates, candidates.size());
  const auto& net = lesk_->network();
  std::erase_if(ranked.neighbors, [&](const Neighbor& n) { return net.senses(n.lemma, *tok.pos).empty(); });
  if (ranked.neighbors.size() > options_.k) ranked.neighbors.resize(options_.k);
  ranked.k = options_.k;
  return ranked;
}

DisambiguationResult Disambiguator::disambiguate_token(const Document& doc, std::size_t target) const {
  const auto& tok = content_token(doc, target);
  const Pos pos = *tok.pos;
  const auto& net = lesk_->network();

  DisambiguationResult result;
  result.token = tok;
  result.neighbors_used = NeighborList{WordKey{tok.lemma, pos}, {}, options_.k};

  const auto senses = net.senses(tok.lemma, pos);
  if (senses.empty()) {
    result.status = ResultStatus::Unknown;
    return result;
  }
  for (const auto* s : senses) result.all_scores.push_back(SenseScore{s->id, 0.0, s->degree});
  if (senses.size() == 1) {
    result.status = ResultStatus::Monosemous;
    result.chosen = senses.front()->id;
    return result;
  }

  if (options_.scorer == ScorerKind::LeskVariant) {
    const auto context = paragraph_context(doc, target, lesk_->tokenizer());
    for (std::size_t i = 0; i < senses.size(); ++i) {
      result.all_scores[i].score = static_cast<double>(lesk_->variant(context, *senses[i]));
    }
    result.status = ResultStatus::Disambiguated;
    result.chosen = best_of(result.all_scores);
    return result;
  }

  result.neighbors_used = select_neighbors(doc, target);
  if (result.neighbors_used.neighbors.empty()) {
    result.status = ResultStatus::NoNeighbors;
    result.chosen = best_of(result.all_scores);
    return result;
  }

  for (const auto& neighbor : result.neighbors_used.neighbors) {
    const auto neighbor_senses = net.senses(neighbor.lemma, pos);
    if (neighbor_senses.empty()) continue;
    const double weight = options_.weight_by_similarity ? neighbor.score : 1.0;
    for (std::size_t i = 0; i < senses.size(); ++i) {
      double best = 0.0;
      for (const auto* other : neighbor_senses) best = std::max(best, relatedness(*senses[i], *other));
      result.all_scores[i].score += weight * best;
    }
  }
  result.status = ResultStatus::Disambiguated;
  result.chosen = best_of(result.all_scores);
  return result;
}

std::vector<DisambiguationResult> Disambiguator::disambiguate_document(
    const Document& doc, const std::set<std::string>* target_filter) const {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_content()) continue;
    if (target_filter != nullptr && target_filter->count(doc[i].lemma) == 0) continue;
    positions.push_back(i);
  }
  std::vector<DisambiguationResult> results(positions.size());
  const unsigned workers =
      std::min<unsigned>(std::max(1u, options_.threads), static_cast<unsigned>(positions.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < positions.size(); ++i) results[i] = disambiguate_token(doc, positions[i]);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < positions.size();) {
          try {
            results[i] = disambiguate_token(doc, positions[i]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<std::optional<std::string>> exhaustive_disambiguate(
    const SemanticNetwork& net, const Document& fragment, const SenseRelatedness& relatedness,
    std::uint64_t budget) {
  std::vector<std::optional<std::string>> assignment(fragment.size());
  std::vector<std::size_t> slots;  // fragment positions taking part
  std::vector<std::vector<const Synset*>> choices;
  std::uint64_t combinations = 1;
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    if (!fragment[i].pos) continue;
    auto senses = net.senses(fragment[i].lemma, *fragment[i].pos);
    if (senses.empty()) continue;
    if (combinations > budget / senses.size()) {
      throw RefusedError("exhaustive search exceeds the budget of " + std::to_string(budget) +
                         " sense combinations");
    }
    combinations *= senses.size();
    slots.push_back(i);
    choices.push_back(std::move(senses));
  }
  if (slots.empty()) return assignment;

  // pair_scores[a][b][i * |b| + j] = relatedness(choices[a][i], choices[b][j]) for a < b
  const std::size_t n = slots.size();
  std::vector<std::vector<std::vector<double>>> pair_scores(n, std::vector<std::vector<double>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      auto& m = pair_scores[a][b];
      m.reserve(choices[a].size() * choices[b].size());
      for (const auto* sa : choices[a]) {
        for (const auto* sb : choices[b]) m.push_back(relatedness(*sa, *sb));
      }
    }
  }

  auto better_tiebreak = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    for (std::size_t t = 0; t < n; ++t) {
      const auto* sx = choices[t][x[t]];
      const auto* sy = choices[t][y[t]];
      if (sx == sy) continue;
      if (sx->degree != sy->degree) return sx->degree > sy->degree;
      return sx->id < sy->id;
    }
    return false;
  };

  std::vector<std::size_t> current(n, 0), best;
  double best_score = 0.0;
  for (;;) {
    double score = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        score += pair_scores[a][b][current[a] * choices[b].size() + current[b]];
      }
    }
    if (best.empty() || score > best_score || (score == best_score && better_tiebreak(current, best))) {
      best = current;
      best_score = score;
    }
    std::size_t t = 0;
    while (t < n && ++current[t] == choices[t].size()) current[t++] = 0;
    if (t == n) break;
  }
  for (std::size_t t = 0; t < n; ++t) assignment[slots[t]] = choices[t][best[t]]->id;
  return assignment;
}

}  // namespace lexsense
