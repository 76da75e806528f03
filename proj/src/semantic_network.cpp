#include "lexsense/semantic_network.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "lexsense/error.hpp"
#include "tsv.hpp"

namespace lexsense {

RelationType inverse(RelationType r) noexcept {
  switch (r) {
    case RelationType::Hypernym: return RelationType::Hyponym;
    case RelationType::Hyponym: return RelationType::Hypernym;
    case RelationType::Meronym: return RelationType::Holonym;
    case RelationType::Holonym: return RelationType::Meronym;
    default: return r;
  }
}

std::string_view to_string(RelationType r) noexcept {
  switch (r) {
    case RelationType::Gloss: return "gloss";
    case RelationType::Hypernym: return "hypernym";
    case RelationType::Hyponym: return "hyponym";
    case RelationType::Meronym: return "meronym";
    case RelationType::Holonym: return "holonym";
    case RelationType::Attribute: return "attribute";
    case RelationType::SimilarTo: return "similar_to";
    case RelationType::AlsoSee: return "also_see";
  }
  return "gloss";
}

std::optional<RelationType> parse_relation(std::string_view name) noexcept {
  for (const auto r : kAllRelations) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

const std::set<std::string>& Synset::related(RelationType r) const {
  static const std::set<std::string> kNone;
  const auto it = relations.find(r);
  return it == relations.end() ? kNone : it->second;
}

SemanticNetwork SemanticNetwork::from_synsets(std::vector<Synset> synsets,
                                              const std::string& source) {
  SemanticNetwork net;
  std::size_t record = 0;
  for (auto& s : synsets) {
    ++record;
    if (detail::trim(s.id).empty()) throw ParseError(source, record, "empty synset id");
    if (s.lemmas.empty()) throw ParseError(source, record, "synset " + s.id + " has no lemmas");
    if (s.relations.count(RelationType::Gloss) != 0) {
      throw ParseError(source, record, "gloss is not a storable relation");
    }
    std::uint64_t edges = 0;
    for (const auto& [r, targets] : s.relations) edges += targets.size();
    if (s.degree < edges) {
      throw ParseError(source, record,
                       "synset " + s.id + " degree " + std::to_string(s.degree) +
                           " is below its " + std::to_string(edges) + " local edges");
    }
    if (net.synsets_.find(s.id) != net.synsets_.end()) {
      throw ParseError(source, record, "duplicate synset id " + s.id);
    }
    std::string id = s.id;
    net.synsets_.emplace(std::move(id), std::move(s));
  }

  for (auto& [id, s] : net.synsets_) {
    for (auto it = s.relations.begin(); it != s.relations.end();) {
      auto& targets = it->second;
      for (auto t = targets.begin(); t != targets.end();) {
        if (net.synsets_.find(*t) == net.synsets_.end()) {
          net.warnings_.push_back("dangling " + std::string(to_string(it->first)) + " target " +
                                  *t + " dropped from " + id);
          t = targets.erase(t);
        } else {
          ++t;
        }
      }
      it = targets.empty() ? s.relations.erase(it) : std::next(it);
    }
  }

  for (const auto& [id, s] : net.synsets_) {
    for (const auto& [r, targets] : s.relations) {
      for (const auto& t : targets) {
        const auto& back = net.synsets_.find(t)->second.related(inverse(r));
        if (back.find(id) == back.end()) {
          net.warnings_.push_back("asymmetric relation: " + id + " " + std::string(to_string(r)) +
                                  " " + t + " without the inverse " +
                                  std::string(to_string(inverse(r))));
        }
      }
    }
    for (const auto& lemma : s.lemmas) {
      auto& list = net.sense_index_[{lemma, s.pos}];
      if (list.empty() || list.back() != id) list.push_back(id);
    }
  }
  return net;
}

const Synset* SemanticNetwork::find(std::string_view id) const {
  const auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

const Synset& SemanticNetwork::at(std::string_view id) const {
  if (const auto* s = find(id)) return *s;
  throw InvalidArgument("unknown synset " + std::string(id));
}

std::vector<const Synset*> SemanticNetwork::senses(std::string_view lemma, Pos pos) const {
  std::vector<const Synset*> out;
  const auto it = sense_index_.find({std::string(lemma), pos});
  if (it == sense_index_.end()) return out;
  out.reserve(it->second.size());
  for (const auto& id : it->second) out.push_back(&synsets_.find(id)->second);
  return out;
}

std::size_t SemanticNetwork::sense_count(std::string_view lemma, Pos pos) const {
  const auto it = sense_index_.find({std::string(lemma), pos});
  return it == sense_index_.end() ? 0 : it->second.size();
}

namespace {

using nlohmann::json;

std::set<std::string> string_set(const json& j, const char* field) {
  std::set<std::string> out;
  if (!j.contains(field)) return out;
  for (const auto& v : j.at(field)) out.insert(v.get<std::string>());
  return out;
}

Synset synset_from_json(const json& j, const std::string& source, std::size_t record) {
  if (!j.is_object()) throw ParseError(source, record, "record is not a JSON object");
  for (const char* field : {"id", "pos", "lemmas", "degree"}) {
    if (!j.contains(field)) {
      throw ParseError(source, record, std::string("missing field \"") + field + "\"");
    }
  }
  Synset s;
  s.id = j.at("id").get<std::string>();
  const auto pos = parse_pos(j.at("pos").get<std::string>());
  if (!pos) throw ParseError(source, record, "bad pos for " + s.id);
  s.pos = *pos;
  s.lemmas = string_set(j, "lemmas");
  if (j.contains("glosses")) s.glosses = j.at("glosses").get<std::vector<std::string>>();
  s.synonyms = string_set(j, "synonyms");
  if (j.contains("relations")) {
    for (const auto& [name, targets] : j.at("relations").items()) {
      const auto r = parse_relation(name);
      if (!r || *r == RelationType::Gloss) {
        throw ParseError(source, record, "unknown relation \"" + name + "\"");
      }
      auto& set = s.relations[*r];
      for (const auto& t : targets) set.insert(t.get<std::string>());
      if (set.empty()) s.relations.erase(*r);
    }
  }
  const auto& degree = j.at("degree");
  if (!degree.is_number_integer() || degree.get<std::int64_t>() < 0) {
    throw ParseError(source, record, "degree must be a non-negative integer");
  }
  s.degree = degree.get<std::uint64_t>();
  return s;
}

}  // namespace

SemanticNetwork parse_network(std::istream& in, const std::string& source) {
  std::vector<Synset> synsets;
  std::string line;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    ++record;
    try {
      synsets.push_back(synset_from_json(json::parse(line), source, record));
    } catch (const json::exception& e) {
      throw ParseError(source, record, e.what());
    }
  }
  return SemanticNetwork::from_synsets(std::move(synsets), source);
}

SemanticNetwork load_network(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_network(in, path.string());
}

void write_network(std::ostream& out, const SemanticNetwork& net) {
  for (const auto& [id, s] : net.synsets()) {
    nlohmann::ordered_json j;
    j["id"] = s.id;
    j["pos"] = std::string(to_string(s.pos));
    j["lemmas"] = s.lemmas;
    j["glosses"] = s.glosses;
    j["synonyms"] = s.synonyms;
    auto relations = nlohmann::ordered_json::object();
    for (const auto& [r, targets] : s.relations) relations[std::string(to_string(r))] = targets;
    j["relations"] = std::move(relations);
    j["degree"] = s.degree;
    out << j.dump() << '\n';
  }
}

std::vector<std::string> definition_bag(const Synset& synset, bool use_synonym_fallback,
                                        const Tokenizer& tokenizer) {
  std::vector<std::string> bag;
  for (const auto& gloss : synset.glosses) {
    auto words = tokenizer.content_words(gloss);
    bag.insert(bag.end(), std::make_move_iterator(words.begin()),
               std::make_move_iterator(words.end()));
  }
  if (synset.glosses.empty() && use_synonym_fallback) {
    for (const auto& synonym : synset.synonyms) {
      auto words = tokenizer.content_words(synonym);
      bag.insert(bag.end(), std::make_move_iterator(words.begin()),
                 std::make_move_iterator(words.end()));
    }
  }
  return bag;
}

}  // namespace lexsense
