#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexsense/pos.hpp"
#include "lexsense/text.hpp"

namespace lexsense {

// Gloss stands for the synset's own definitions; it is never stored as an
// edge. Hypernym/Hyponym and Meronym/Holonym are inverse pairs, the rest are
// self-inverse.
enum class RelationType { Gloss, Hypernym, Hyponym, Meronym, Holonym, Attribute, SimilarTo, AlsoSee };

inline constexpr std::array<RelationType, 8> kAllRelations = {
    RelationType::Gloss,   RelationType::Hypernym,  RelationType::Hyponym, RelationType::Meronym,
    RelationType::Holonym, RelationType::Attribute, RelationType::SimilarTo, RelationType::AlsoSee};

RelationType inverse(RelationType r) noexcept;
std::string_view to_string(RelationType r) noexcept;
// Accepts the snapshot names plus "gloss".
std::optional<RelationType> parse_relation(std::string_view name) noexcept;

struct Synset {
  std::string id;
  Pos pos = Pos::Noun;
  std::set<std::string> lemmas;
  std::vector<std::string> glosses;
  std::set<std::string> synonyms;
  std::map<RelationType, std::set<std::string>> relations;
  std::uint64_t degree = 0;

  // Targets of `r`; empty for Gloss and for absent relations.
  const std::set<std::string>& related(RelationType r) const;

  bool operator==(const Synset&) const = default;
};

// Sense inventory snapshot. Immutable after construction.
class SemanticNetwork {
 public:
  SemanticNetwork() = default;

  // Validates ids and sizes; dangling relation targets are dropped with a
  // warning, asymmetric inverse edges only warn. Throws ParseError (record
  // number = 1-based position in `synsets`) on duplicate ids or bad records.
  static SemanticNetwork from_synsets(std::vector<Synset> synsets,
                                      const std::string& source = "<memory>");

  const Synset* find(std::string_view id) const;
  const Synset& at(std::string_view id) const;  // throws InvalidArgument

  // Synsets listing `lemma` under `pos`, ordered by id. Empty when unknown.
  std::vector<const Synset*> senses(std::string_view lemma, Pos pos) const;
  std::size_t sense_count(std::string_view lemma, Pos pos) const;

  const std::map<std::string, Synset, std::less<>>& synsets() const { return synsets_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t size() const { return synsets_.size(); }

 private:
  std::map<std::string, Synset, std::less<>> synsets_;
  std::map<std::pair<std::string, Pos>, std::vector<std::string>> sense_index_;
  std::vector<std::string> warnings_;
};

// JSON-lines snapshot, one synset object per line.
SemanticNetwork load_network(const std::filesystem::path& path);
SemanticNetwork parse_network(std::istream& in, const std::string& source);
void write_network(std::ostream& out, const SemanticNetwork& net);

// Content tokens of all glosses, in order. A gloss-less synset yields its
// synonyms when `use_synonym_fallback` is set.
std::vector<std::string> definition_bag(const Synset& synset, bool use_synonym_fallback,
                                        const Tokenizer& tokenizer);

}  // namespace lexsense
