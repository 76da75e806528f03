#include <doctest.h>

#include <cmath>

#include "lexsense/distributional.hpp"
#include "lexsense/error.hpp"
#include "support.hpp"

using namespace lexsense;

namespace {

// F(a) = {f1, f2}, F(b) = {f1, f3}, two more nouns holding f4 and f5.
TripleIndex small_index() {
  const std::vector<DependencyTriple> triples = {
      {"v1", "obj", "a", 1}, {"v2", "obj", "a", 1}, {"v1", "obj", "b", 1},
      {"v3", "obj", "b", 1}, {"v4", "obj", "c", 1}, {"v5", "obj", "d", 1},
  };
  PosLexicon lexicon;
  for (const auto* n : {"a", "b", "c", "d"}) lexicon.emplace(n, Pos::Noun);
  for (const auto* v : {"v1", "v2", "v3", "v4", "v5"}) lexicon.emplace(v, Pos::Verb);
  return TripleIndex::build(triples, lexicon);
}

TripleIndex fleuve_index() {
  const auto dir = lexsense::testing::fleuve_dir();
  return load_triples(dir / "triples.tsv", load_pos_lexicon(dir / "lexicon.tsv"));
}

}  // namespace

TEST_CASE("information content of the worked features") {
  CHECK(information_content(38, 22168) == doctest::Approx(6.368818926816428).epsilon(1e-12));
  CHECK(information_content(582, 22168) == doctest::Approx(3.6399346388113765).epsilon(1e-12));
  CHECK(information_content(38, 22168) == doctest::Approx(6.37).epsilon(0.005 / 6.37));
  CHECK(information_content(582, 22168) == doctest::Approx(3.64).epsilon(0.005 / 3.64));
  CHECK(information_content(5, 5) == 0.0);
}

TEST_CASE("information content rejects impossible counts") {
  CHECK_THROWS_AS(information_content(0, 10), DomainError);
  CHECK_THROWS_AS(information_content(11, 10), DomainError);
  CHECK_THROWS_AS(information_content(1, 0), DomainError);
}

TEST_CASE("information content table") {
  const auto index = small_index();
  const auto ic = InformationContentTable::build(index, Pos::Noun);
  CHECK(ic.pos() == Pos::Noun);
  CHECK(ic.total_lemmas() == 4);
  const SyntacticFeature f1{"obj", "v1", Slot::AsModifier};
  CHECK(ic.at(f1) == doctest::Approx(std::log(2.0)));
  CHECK(ic.at({"obj", "v2", Slot::AsModifier}) == doctest::Approx(std::log(4.0)));
  CHECK(information_content(index, Pos::Noun, f1) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(ic.at({"obj", "nothing", Slot::AsModifier}), DomainError);
  CHECK_THROWS_AS(information_content(index, Pos::Noun, {"obj", "nothing", Slot::AsModifier}), DomainError);
}

TEST_CASE("lin similarity on the hand-computed fixture") {
  const auto index = small_index();
  const auto ic = InformationContentTable::build(index, Pos::Noun);
  CHECK(lin_similarity(index, ic, "a", "b", Pos::Noun) == doctest::Approx(0.33333333333333337).epsilon(1e-12));
  CHECK(lin_similarity(index, ic, "b", "a", Pos::Noun) == lin_similarity(index, ic, "a", "b", Pos::Noun));
  CHECK(lin_similarity(index, ic, "a", "a", Pos::Noun) == 1.0);
  CHECK(lin_similarity(index, ic, "a", "c", Pos::Noun) == 0.0);
}

TEST_CASE("lin similarity errors") {
  const auto index = small_index();
  const auto ic = InformationContentTable::build(index, Pos::Noun);
  CHECK_THROWS_AS(lin_similarity(index, ic, "a", "zzz", Pos::Noun), UnknownWordError);
  CHECK_THROWS_AS(lin_similarity(index, ic, "v1", "a", Pos::Noun), UnknownWordError);
  CHECK_THROWS_AS(lin_similarity(index, ic, "v1", "v2", Pos::Verb), InvalidArgument);
}

TEST_CASE("lin similarity is 0 when every feature is uninformative") {
  const std::vector<DependencyTriple> triples = {{"v", "obj", "a", 1}, {"v", "obj", "b", 1}};
  const auto index = TripleIndex::build(triples, {{"a", Pos::Noun}, {"b", Pos::Noun}, {"v", Pos::Verb}});
  const auto ic = InformationContentTable::build(index, Pos::Noun);
  CHECK(lin_similarity(index, ic, "a", "b", Pos::Noun) == 0.0);
}

TEST_CASE("neighbors of fleuve in the river paragraph") {
  const auto index = fleuve_index();
  const auto ic = InformationContentTable::build(index, Pos::Noun);
  const WordKey target{"fleuve", Pos::Noun};
  const std::set<std::string> candidates{"rivière", "affluent", "eau", "pont", "regard", "étoile"};

  const auto all = nearest_neighbors(index, ic, target, candidates, 10);
  REQUIRE(all.neighbors.size() == 6);
  const std::vector<std::pair<std::string, double>> expected = {
      {"rivière", 0.662509}, {"eau", 0.525297}, {"affluent", 0.465122},
      {"pont", 0.24446},     {"regard", 0.0},   {"étoile", 0.0}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(all.neighbors[i].lemma == expected[i].first);
    CHECK(all.neighbors[i].score == doctest::Approx(expected[i].second).epsilon(1e-5));
  }

  const auto top3 = nearest_neighbors(index, ic, target, candidates, 3);
  CHECK(top3.k == 3);
  REQUIRE(top3.neighbors.size() == 3);
  CHECK(std::equal(top3.neighbors.begin(), top3.neighbors.end(), all.neighbors.begin()));
}

TEST_CASE("neighbors of fleuve in the sea paragraph break ties by lemma") {
  const auto index = fleuve_index();
  const auto ic = InformationContentTable::build(index, Pos::Noun);
  const auto list = nearest_neighbors(index, ic, {"fleuve", Pos::Noun},
                                      {"mer", "eau", "océan", "ciel", "regard", "bonheur"}, 3);
  REQUIRE(list.neighbors.size() == 3);
  CHECK(list.neighbors[0].lemma == "eau");
  CHECK(list.neighbors[1].lemma == "mer");
  CHECK(list.neighbors[2].lemma == "océan");
  CHECK(list.neighbors[1].score == list.neighbors[2].score);
}

TEST_CASE("neighbor edge cases") {
  const auto index = fleuve_index();
  const auto ic = InformationContentTable::build(index, Pos::Noun);
  const WordKey target{"fleuve", Pos::Noun};
  CHECK(nearest_neighbors(index, ic, target, {}, 3).neighbors.empty());
  CHECK(nearest_neighbors(index, ic, target, {"fleuve", "inconnu"}, 3).neighbors.empty());
  CHECK_THROWS_AS(nearest_neighbors(index, ic, target, {"eau"}, 0), InvalidArgument);
  CHECK_THROWS_AS(nearest_neighbors(index, ic, {"inconnu", Pos::Noun}, {"eau"}, 3), UnknownWordError);
}
