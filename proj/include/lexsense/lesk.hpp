#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexsense/semantic_network.hpp"
#include "lexsense/text.hpp"

namespace lexsense {

using TokenStream = std::vector<std::string>;

enum class OverlapMode { Set, Multiset };

// |a ∩ b| with multiset (min of multiplicities) or set semantics.
std::uint64_t bag_overlap(std::span<const std::string> a, std::span<const std::string> b,
                          OverlapMode mode);

// Sum of squared lengths of common contiguous token runs. Repeatedly takes the
// longest common run (leftmost in the first sequence, then leftmost in the
// second), adds length^2 and blanks it out on both sides so later runs cannot
// bridge it. The lexicographically smaller sequence is always treated as the
// first one, which makes the result symmetric.
std::uint64_t sequence_overlap(std::span<const std::string> a, std::span<const std::string> b);

// A swap-closed set of (R1, R2) relation pairs for extended Lesk.
class RelationPairs {
 public:
  using Pair = std::pair<RelationType, RelationType>;

  // Throws ContractError when some (R1, R2) lacks its (R2, R1).
  explicit RelationPairs(std::set<Pair> pairs);

  static RelationPairs all();         // the 64 pairs over every relation type
  static RelationPairs gloss_only();  // {(gloss, gloss)}

  // "all", or comma-separated "r1:r2" items (e.g. "gloss:gloss,hypernym:hyponym,hyponym:hypernym").
  static RelationPairs parse(std::string_view spec);

  const std::set<Pair>& pairs() const { return pairs_; }
  std::string to_string() const;

 private:
  std::set<Pair> pairs_;
};

// How extended Lesk scores one (R1, R2) text pair.
enum class ExtendedScoring { SquaredSequences, Intersection };

struct LeskOptions {
  OverlapMode overlap = OverlapMode::Multiset;
  bool synonym_fallback = true;
  ExtendedScoring extended = ExtendedScoring::SquaredSequences;
};

// Gloss-overlap scorers over one network. Definition bags of every synset are
// computed once at construction; all scoring methods are const and can be
// called concurrently.
class LeskScorer {
 public:
  LeskScorer(const SemanticNetwork& net, Tokenizer tokenizer, LeskOptions options = {},
             RelationPairs pairs = RelationPairs::all());

  const SemanticNetwork& network() const { return *net_; }
  const Tokenizer& tokenizer() const { return tokenizer_; }
  const LeskOptions& options() const { return options_; }
  const RelationPairs& relation_pairs() const { return pairs_; }

  const TokenStream& definition(const Synset& s) const;

  // Definitions of every synset reached from `s` through `r`, concatenated in
  // id order. Gloss means `s` itself.
  TokenStream related_definitions(const Synset& s, RelationType r) const;

  // |D(s1) ∩ D(s2)|
  std::uint64_t base(const Synset& s1, const Synset& s2) const;

  // |context ∩ D(sense)|; `context` holds content tokens.
  std::uint64_t variant(std::span<const std::string> context, const Synset& sense) const;

  // Sum over the configured relation pairs of the overlap between the
  // expanded definitions of s1 and s2.
  std::uint64_t extended(const Synset& s1, const Synset& s2) const;

 private:
  const SemanticNetwork* net_;
  Tokenizer tokenizer_;
  LeskOptions options_;
  RelationPairs pairs_;
  std::unordered_map<std::string, TokenStream> definitions_;
};

}  // namespace lexsense
