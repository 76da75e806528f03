#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lexsense/corpus.hpp"
#include "lexsense/semantic_network.hpp"
#include "lexsense/triple_store.hpp"

namespace lexsense::testing {

inline std::filesystem::path data_dir() { return LEXSENSE_TEST_DATA; }
inline std::filesystem::path fleuve_dir() { return data_dir() / "fleuve"; }

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("lexsense_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream os(p, std::ios::binary | std::ios::trunc);
  os << content;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RandomTriples {
  std::vector<DependencyTriple> triples;
  PosLexicon lexicon;
  std::vector<std::string> nouns;
  std::vector<std::string> verbs;
};

// Nouns n0.. and verbs v0.. linked by random (verb, rel, noun) and
// (noun, rel, noun) triples.
inline RandomTriples random_triples(std::mt19937_64& rng, std::size_t n_nouns, std::size_t n_verbs,
                                    std::size_t n_relations, std::size_t n_triples) {
  RandomTriples out;
  for (std::size_t i = 0; i < n_nouns; ++i) {
    out.nouns.push_back("n" + std::to_string(i));
    out.lexicon.emplace(out.nouns.back(), Pos::Noun);
  }
  for (std::size_t i = 0; i < n_verbs; ++i) {
    out.verbs.push_back("v" + std::to_string(i));
    out.lexicon.emplace(out.verbs.back(), Pos::Verb);
  }
  std::uniform_int_distribution<std::size_t> noun(0, n_nouns - 1), verb(0, n_verbs - 1),
      rel(0, n_relations - 1);
  std::uniform_int_distribution<std::uint64_t> count(1, 4);
  std::bernoulli_distribution verb_head(0.7);
  for (std::size_t i = 0; i < n_triples; ++i) {
    DependencyTriple t;
    t.head = verb_head(rng) ? out.verbs[verb(rng)] : out.nouns[noun(rng)];
    t.relation = "r" + std::to_string(rel(rng));
    t.modifier = out.nouns[noun(rng)];
    t.count = count(rng);
    out.triples.push_back(std::move(t));
  }
  return out;
}

inline Synset make_synset(std::string id, std::vector<std::string> lemmas, std::vector<std::string> glosses,
                          std::uint64_t degree, Pos pos = Pos::Noun) {
  Synset s;
  s.id = std::move(id);
  s.pos = pos;
  s.lemmas = {lemmas.begin(), lemmas.end()};
  s.glosses = std::move(glosses);
  s.degree = degree;
  return s;
}

// Builds a document from "lemma/pos" items; "|" starts a new paragraph.
inline Document make_document(const std::vector<std::string>& items) {
  std::ostringstream text;
  for (const auto& item : items) {
    if (item == "|") {
      text << "#PARA\n";
      continue;
    }
    const auto slash = item.rfind('/');
    const auto lemma = item.substr(0, slash);
    text << lemma << '\t' << lemma << '\t' << item.substr(slash + 1) << '\n';
  }
  std::istringstream in(text.str());
  return parse_corpus(in, "<test>");
}

}  // namespace lexsense::testing
