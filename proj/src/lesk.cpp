#include "lexsense/lesk.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "lexsense/error.hpp"
#include "tsv.hpp"

namespace lexsense {

std::uint64_t bag_overlap(std::span<const std::string> a, std::span<const std::string> b,
                          OverlapMode mode) {
  if (a.empty() || b.empty()) return 0;
  std::unordered_map<std::string_view, std::uint64_t> counts;
  for (const auto& t : a) ++counts[t];
  if (mode == OverlapMode::Set) {
    for (auto& [t, n] : counts) n = 1;
  }
  std::uint64_t overlap = 0;
  for (const auto& t : b) {
    const auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      ++overlap;
      --it->second;
    }
  }
  return overlap;
}

namespace {

// Token ids; removed positions get distinct negative values per side.
std::uint64_t greedy_runs(std::vector<long>& a, std::vector<long>& b) {
  constexpr long kGoneA = -1;
  constexpr long kGoneB = -2;
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  std::uint64_t total = 0;
  for (;;) {
    std::size_t best = 0, best_i = 0, best_j = 0;
    std::fill(prev.begin(), prev.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      cur[0] = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (a[i] >= 0 && a[i] == b[j]) {
          const std::size_t len = prev[j] + 1;
          cur[j + 1] = len;
          // Row-major scan: the first run of a given length has the smallest
          // start in `a`, then in `b`.
          if (len > best) {
            best = len;
            best_i = i + 1 - len;
            best_j = j + 1 - len;
          }
        } else {
          cur[j + 1] = 0;
        }
      }
      std::swap(prev, cur);
    }
    if (best == 0) return total;
    total += static_cast<std::uint64_t>(best) * best;
    std::fill_n(a.begin() + static_cast<std::ptrdiff_t>(best_i), best, kGoneA);
    std::fill_n(b.begin() + static_cast<std::ptrdiff_t>(best_j), best, kGoneB);
  }
}

}  // namespace

std::uint64_t sequence_overlap(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) std::swap(a, b);
  std::unordered_map<std::string_view, long> ids;
  std::vector<long> ia, ib;
  ia.reserve(a.size());
  ib.reserve(b.size());
  for (const auto& t : a) ia.push_back(ids.try_emplace(t, static_cast<long>(ids.size())).first->second);
  bool shared = false;
  for (const auto& t : b) {
    const auto it = ids.find(t);
    // Tokens absent from `a` can never match.
    ib.push_back(it == ids.end() ? -3 : it->second);
    shared = shared || it != ids.end();
  }
  if (!shared) return 0;
  return greedy_runs(ia, ib);
}

RelationPairs::RelationPairs(std::set<Pair> pairs) : pairs_(std::move(pairs)) {
  for (const auto& [r1, r2] : pairs_) {
    if (pairs_.find({r2, r1}) == pairs_.end()) {
      throw ContractError("relation pairs are not swap-closed: (" + std::string(lexsense::to_string(r1)) +
                          ", " + std::string(lexsense::to_string(r2)) + ") has no inverse pair");
    }
  }
}

RelationPairs RelationPairs::all() {
  std::set<Pair> pairs;
  for (const auto r1 : kAllRelations) {
    for (const auto r2 : kAllRelations) pairs.emplace(r1, r2);
  }
  return RelationPairs(std::move(pairs));
}

RelationPairs RelationPairs::gloss_only() {
  return RelationPairs(std::set<Pair>{{RelationType::Gloss, RelationType::Gloss}});
}

RelationPairs RelationPairs::parse(std::string_view spec) {
  spec = detail::trim(spec);
  if (spec == "all") return all();
  std::set<Pair> pairs;
  for (const auto item : detail::split(spec, ',')) {
    const auto parts = detail::split(detail::trim(item), ':');
    if (parts.size() != 2) {
      throw InvalidArgument("relation pair '" + std::string(item) + "' is not of the form r1:r2");
    }
    const auto r1 = parse_relation(detail::trim(parts[0]));
    const auto r2 = parse_relation(detail::trim(parts[1]));
    if (!r1 || !r2) throw InvalidArgument("unknown relation in '" + std::string(item) + "'");
    pairs.emplace(*r1, *r2);
  }
  if (pairs.empty()) throw InvalidArgument("empty relation pair list");
  return RelationPairs(std::move(pairs));
}

std::string RelationPairs::to_string() const {
  std::string out;
  for (const auto& [r1, r2] : pairs_) {
    if (!out.empty()) out += ',';
    out += lexsense::to_string(r1);
    out += ':';
    out += lexsense::to_string(r2);
  }
  return out;
}

LeskScorer::LeskScorer(const SemanticNetwork& net, Tokenizer tokenizer, LeskOptions options,
                       RelationPairs pairs)
    : net_(&net), tokenizer_(std::move(tokenizer)), options_(options), pairs_(std::move(pairs)) {
  definitions_.reserve(net.size());
  for (const auto& [id, s] : net.synsets()) {
    definitions_.emplace(id, definition_bag(s, options_.synonym_fallback, tokenizer_));
  }
}

const TokenStream& LeskScorer::definition(const Synset& s) const {
  const auto it = definitions_.find(s.id);
  if (it == definitions_.end()) {
    throw InvalidArgument("synset " + s.id + " does not belong to the scorer's network");
  }
  return it->second;
}

TokenStream LeskScorer::related_definitions(const Synset& s, RelationType r) const {
  if (r == RelationType::Gloss) return definition(s);
  TokenStream out;
  for (const auto& id : s.related(r)) {
    const auto* target = net_->find(id);
    if (target == nullptr) continue;
    const auto& d = definition(*target);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

std::uint64_t LeskScorer::base(const Synset& s1, const Synset& s2) const {
  return bag_overlap(definition(s1), definition(s2), options_.overlap);
}

std::uint64_t LeskScorer::variant(std::span<const std::string> context, const Synset& sense) const {
  return bag_overlap(context, definition(sense), options_.overlap);
}

std::uint64_t LeskScorer::extended(const Synset& s1, const Synset& s2) const {
  std::array<TokenStream, kAllRelations.size()> left, right;
  std::array<bool, kAllRelations.size()> have_left{}, have_right{};
  auto expand = [&](auto& cache, auto& have, const Synset& s, RelationType r) -> const TokenStream& {
    const auto slot = static_cast<std::size_t>(r);
    if (!have[slot]) {
      cache[slot] = related_definitions(s, r);
      have[slot] = true;
    }
    return cache[slot];
  };
  std::uint64_t total = 0;
  for (const auto& [r1, r2] : pairs_.pairs()) {
    const auto& d1 = expand(left, have_left, s1, r1);
    if (d1.empty()) continue;
    const auto& d2 = expand(right, have_right, s2, r2);
    if (d2.empty()) continue;
    total += options_.extended == ExtendedScoring::SquaredSequences
                 ? sequence_overlap(d1, d2)
                 : bag_overlap(d1, d2, options_.overlap);
  }
  return total;
}

}  // namespace lexsense
