#include <doctest.h>

#include <sstream>

#include "lexsense/error.hpp"
#include "lexsense/semantic_network.hpp"
#include "support.hpp"

using namespace lexsense;
using lexsense::testing::make_synset;

namespace {

SemanticNetwork parse(const std::string& text) {
  std::istringstream in(text);
  return parse_network(in, "<net>");
}

std::size_t error_record(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("relation names and inverses") {
  CHECK(inverse(RelationType::Hypernym) == RelationType::Hyponym);
  CHECK(inverse(RelationType::Holonym) == RelationType::Meronym);
  CHECK(inverse(RelationType::AlsoSee) == RelationType::AlsoSee);
  for (const auto r : kAllRelations) {
    CHECK(parse_relation(to_string(r)) == r);
    CHECK(inverse(inverse(r)) == r);
  }
  CHECK_FALSE(parse_relation("cousin").has_value());
}

TEST_CASE("one synset without relations") {
  const auto net = parse(R"({"id":"eau#1","pos":"noun","lemmas":["eau"],"degree":3})" "\n");
  CHECK(net.size() == 1);
  const auto& s = net.at("eau#1");
  CHECK(s.relations.empty());
  CHECK(s.glosses.empty());
  CHECK(s.related(RelationType::Hypernym).empty());
  CHECK(net.warnings().empty());
}

TEST_CASE("the fleuve snapshot") {
  const auto net = load_network(lexsense::testing::fleuve_dir() / "network.jsonl");
  const auto senses = net.senses("fleuve", Pos::Noun);
  REQUIRE(senses.size() == 2);
  CHECK(senses[0]->id == "fleuve#1");
  CHECK(senses[0]->degree == 2026);
  CHECK(senses[1]->degree == 107);
  CHECK(senses[0]->glosses.size() == 3);
  CHECK(senses[0]->glosses[0] == "Cours d'eau naturel ;");
  CHECK(net.senses("fleuve", Pos::Verb).empty());
  CHECK(net.senses("inconnu", Pos::Noun).empty());
  CHECK(net.senses("rivière", Pos::Noun).size() == 1);
  CHECK(net.find("nothing") == nullptr);
  CHECK_THROWS_AS(net.at("nothing"), InvalidArgument);
}

TEST_CASE("a one-sided hypernym edge loads with a warning") {
  const auto net = parse(
      R"({"id":"a","pos":"noun","lemmas":["a"],"relations":{"hypernym":["b"]},"degree":1})" "\n"
      R"({"id":"b","pos":"noun","lemmas":["b"],"degree":0})" "\n");
  CHECK(net.at("a").related(RelationType::Hypernym) == std::set<std::string>{"b"});
  REQUIRE(net.warnings().size() == 1);
  CHECK(net.warnings()[0].find("asymmetric") != std::string::npos);
}

TEST_CASE("dangling targets are dropped with a warning") {
  const auto net = parse(R"({"id":"a","pos":"noun","lemmas":["a"],"relations":{"also_see":["zz"]},"degree":1})");
  CHECK(net.at("a").relations.empty());
  REQUIRE(net.warnings().size() == 1);
  CHECK(net.warnings()[0].find("dangling") != std::string::npos);
}

TEST_CASE("bad records report their record number") {
  const std::string good = R"({"id":"a","pos":"noun","lemmas":["a"],"degree":0})" "\n";
  CHECK(error_record(good + good) == 2);
  CHECK(error_record(good + "\n" + R"({"id":"b","pos":"noun","lemmas":[],"degree":0})") == 2);
  CHECK(error_record(R"({"id":"b","pos":"noun","lemmas":["b"]})") == 1);
  CHECK(error_record(R"({"id":"b","pos":"nom","lemmas":["b"],"degree":0})") == 1);
  CHECK(error_record(R"({"id":"b","pos":"noun","lemmas":["b"],"degree":-1})") == 1);
  CHECK(error_record(good + R"({"id":"b","pos":"noun","lemmas":["b"],"relations":{"cousin":["a"]},"degree":1})") == 2);
  CHECK(error_record(R"({"id":"b","pos":"noun","lemmas":["b"],"relations":{"gloss":["b"]},"degree":1})") == 1);
  CHECK(error_record(good + R"({"id":"b","pos":"noun","lemmas":["b"],"relations":{"hyponym":["a"]},"degree":0})") == 2);
  CHECK(error_record(good + "{not json\n") == 2);
  CHECK(error_record(R"({"id":"","pos":"noun","lemmas":["b"],"degree":0})") == 1);
  CHECK(error_record("[1,2]") == 1);
  CHECK_THROWS_AS(load_network("/nonexistent/net.jsonl"), IoError);
}

TEST_CASE("from_synsets rejects duplicates") {
  std::vector<Synset> synsets = {make_synset("x#1", {"x"}, {}, 1), make_synset("x#1", {"x"}, {}, 2)};
  CHECK_THROWS_AS(SemanticNetwork::from_synsets(synsets), ParseError);
}

TEST_CASE("write_network round-trips the fixture") {
  const auto net = load_network(lexsense::testing::fleuve_dir() / "network.jsonl");
  std::ostringstream out;
  write_network(out, net);
  const auto again = parse(out.str());
  CHECK(again.synsets() == net.synsets());
  std::ostringstream twice;
  write_network(twice, again);
  CHECK(twice.str() == out.str());
}

TEST_CASE("definition bags") {
  const Tokenizer tok;
  const auto glossed = make_synset("s#1", {"fleuve"}, {"Cours d'eau naturel"}, 1);
  CHECK(definition_bag(glossed, true, tok) == std::vector<std::string>{"cours", "eau", "naturel"});

  auto bare = make_synset("s#2", {"fleuve"}, {}, 1);
  bare.synonyms = {"rivière"};
  CHECK(definition_bag(bare, true, tok) == std::vector<std::string>{"rivière"});
  CHECK(definition_bag(bare, false, tok).empty());

  const auto two = make_synset("s#3", {"x"}, {"eau froide", "eau claire"}, 1);
  CHECK(definition_bag(two, true, tok) == std::vector<std::string>{"eau", "froide", "eau", "claire"});
}
