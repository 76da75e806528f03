#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexsense/pos.hpp"

namespace lexsense {

// One (head, relation, modifier) dependency with its corpus frequency.
struct DependencyTriple {
  std::string head;
  std::string relation;
  std::string modifier;
  std::uint64_t count = 1;

  bool operator==(const DependencyTriple&) const = default;
};

// Which side of a triple the described word sits on.
enum class Slot { AsHead, AsModifier };

// A triple seen from one participant. For (h, r, m): h gets (r, m, AsHead),
// m gets (r, h, AsModifier).
struct SyntacticFeature {
  std::string relation;
  std::string partner;
  Slot slot = Slot::AsHead;

  auto operator<=>(const SyntacticFeature&) const = default;
};

struct WordKey {
  std::string lemma;
  Pos pos = Pos::Noun;

  auto operator<=>(const WordKey&) const = default;
};

using PosLexicon = std::unordered_map<std::string, Pos>;

// Feature multiset of one word: feature -> multiplicity (sum of triple counts).
using FeatureCounts = std::map<SyntacticFeature, std::uint64_t>;

// Immutable after construction; safe for concurrent readers.
class TripleIndex {
 public:
  TripleIndex() = default;

  // Lemmas missing from the lexicon are skipped and tallied in skipped().
  static TripleIndex build(std::span<const DependencyTriple> triples,
                           const PosLexicon& lexicon);

  // nullptr when (lemma, pos) was never indexed.
  const FeatureCounts* features(std::string_view lemma, Pos pos) const;
  bool contains(std::string_view lemma, Pos pos) const {
    return features(lemma, pos) != nullptr;
  }

  const std::set<std::string>& vocabulary(Pos pos) const {
    return vocab_[static_cast<std::size_t>(pos)];
  }

  // Number of distinct lemmas of `pos` that possess `feature`.
  std::size_t holders(const SyntacticFeature& feature, Pos pos) const;
  const std::map<SyntacticFeature, std::size_t>& holder_counts(Pos pos) const {
    return holders_[static_cast<std::size_t>(pos)];
  }

  const std::map<WordKey, FeatureCounts>& words() const { return by_word_; }

  // Word occurrences dropped because the lemma had no lexicon entry.
  std::uint64_t skipped() const { return skipped_; }

 private:
  std::map<WordKey, FeatureCounts> by_word_;
  std::array<std::set<std::string>, 4> vocab_;
  std::array<std::map<SyntacticFeature, std::size_t>, 4> holders_;
  std::uint64_t skipped_ = 0;
};

// Triple file: head<TAB>relation<TAB>modifier<TAB>count per line.
std::vector<DependencyTriple> read_triples(const std::filesystem::path& path);
std::vector<DependencyTriple> parse_triples(std::istream& in, const std::string& source);
void write_triples(std::ostream& out, std::span<const DependencyTriple> triples);

// Lexicon file: lemma<TAB>pos per line.
PosLexicon load_pos_lexicon(const std::filesystem::path& path);
PosLexicon parse_pos_lexicon(std::istream& in, const std::string& source);

TripleIndex load_triples(const std::filesystem::path& path, const PosLexicon& lexicon);

// Collapses repeated (head, relation, modifier) entries into one triple with
// the summed count, keeping first-occurrence order.
std::vector<DependencyTriple> distinct_triples(std::span<const DependencyTriple> triples);

// Keeps each distinct triple with probability `fraction` using a
// mt19937_64 stream seeded with `seed`; one draw per distinct triple in
// first-occurrence order. Output is platform independent.
std::vector<DependencyTriple> sample_distinct(std::span<const DependencyTriple> triples,
                                              double fraction, std::uint64_t seed);

// File-to-file form of sample_distinct. Returns `out`.
std::filesystem::path sample_triples(const std::filesystem::path& source,
                                     const std::filesystem::path& out,
                                     double fraction, std::uint64_t seed);

}  // namespace lexsense
