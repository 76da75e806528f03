#include <doctest.h>

#include <set>
#include <sstream>

#include "lexsense/error.hpp"
#include "lexsense/triple_store.hpp"
#include "support.hpp"

using namespace lexsense;
using lexsense::testing::TempDir;

namespace {

std::vector<DependencyTriple> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_triples(in, "<test>");
}

}  // namespace

TEST_CASE("a single triple yields one feature on each side") {
  const auto triples = parse("recouvrer\tsuj\tregard\t1\n");
  const PosLexicon lexicon{{"recouvrer", Pos::Verb}, {"regard", Pos::Noun}};
  const auto index = TripleIndex::build(triples, lexicon);

  const auto* regard = index.features("regard", Pos::Noun);
  REQUIRE(regard != nullptr);
  CHECK(*regard == FeatureCounts{{SyntacticFeature{"suj", "recouvrer", Slot::AsModifier}, 1}});
  const auto* verb = index.features("recouvrer", Pos::Verb);
  REQUIRE(verb != nullptr);
  CHECK(*verb == FeatureCounts{{SyntacticFeature{"suj", "regard", Slot::AsHead}, 1}});
  CHECK_FALSE(index.contains("regard", Pos::Verb));
  CHECK(index.vocabulary(Pos::Noun) == std::set<std::string>{"regard"});
}

TEST_CASE("empty input gives an empty index") {
  const auto index = TripleIndex::build(parse(""), {});
  CHECK(index.words().empty());
  CHECK(index.vocabulary(Pos::Noun).empty());
}

TEST_CASE("repeated triples add their counts") {
  const auto triples = parse("couler\tsuj\teau\t2\ncouler\tsuj\teau\t3\n");
  const auto index = TripleIndex::build(triples, {{"couler", Pos::Verb}, {"eau", Pos::Noun}});
  CHECK(index.features("eau", Pos::Noun)->at({"suj", "couler", Slot::AsModifier}) == 5);
  CHECK(index.features("couler", Pos::Verb)->at({"suj", "eau", Slot::AsHead}) == 5);
  CHECK(index.holders({"suj", "couler", Slot::AsModifier}, Pos::Noun) == 1);
}

TEST_CASE("lemmas missing from the lexicon are skipped") {
  const auto triples = parse("regard\tdet\tleur\t1\n");
  const auto index = TripleIndex::build(triples, {{"regard", Pos::Noun}});
  CHECK(index.contains("regard", Pos::Noun));
  CHECK(index.skipped() == 1);
}

TEST_CASE("malformed triple lines report their line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("a\tr\tb\t1\na\tr\tb\n") == 2);
  CHECK(line_of("a\tr\tb\tx\n") == 1);
  CHECK(line_of("a\tr\tb\t0\n") == 1);
  CHECK(line_of("a\tr\tb\t1\textra\n") == 1);
  CHECK(line_of("a\tr\tb\t1\r\n") == 0);
}

TEST_CASE("lexicon parsing") {
  std::istringstream ok("fleuve\tnoun\ncouler\tverb\n\n");
  const auto lexicon = parse_pos_lexicon(ok, "<lex>");
  CHECK(lexicon.at("fleuve") == Pos::Noun);
  CHECK(lexicon.at("couler") == Pos::Verb);

  std::istringstream bad_pos("fleuve\tnom\n");
  CHECK_THROWS_AS(parse_pos_lexicon(bad_pos, "<lex>"), ParseError);
  std::istringstream conflict("fleuve\tnoun\nfleuve\tverb\n");
  CHECK_THROWS_AS(parse_pos_lexicon(conflict, "<lex>"), ParseError);
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(read_triples("/nonexistent/triples.tsv"), IoError);
  CHECK_THROWS_AS(load_pos_lexicon("/nonexistent/lexicon.tsv"), IoError);
}

TEST_CASE("write and read triples round-trip") {
  const auto triples = parse("a\tr\tb\t2\nc\ts\td\t7\n");
  std::ostringstream out;
  write_triples(out, triples);
  CHECK(parse(out.str()) == triples);
}

TEST_CASE("distinct_triples merges repeats in first-occurrence order") {
  const auto merged = distinct_triples(parse("b\tr\tc\t1\na\tr\tb\t2\nb\tr\tc\t4\n"));
  REQUIRE(merged.size() == 2);
  CHECK(merged[0] == DependencyTriple{"b", "r", "c", 5});
  CHECK(merged[1] == DependencyTriple{"a", "r", "b", 2});
}

TEST_CASE("sampling") {
  std::mt19937_64 rng(7);
  const auto fixture = lexsense::testing::random_triples(rng, 200, 50, 5, 1000);
  const auto distinct = distinct_triples(fixture.triples);

  SUBCASE("fraction 1 keeps every distinct triple") {
    CHECK(sample_distinct(fixture.triples, 1.0, 42) == distinct);
  }
  SUBCASE("same seed gives the same subset, another seed another one") {
    const auto a = sample_distinct(fixture.triples, 0.3, 1);
    const auto b = sample_distinct(fixture.triples, 0.3, 1);
    const auto c = sample_distinct(fixture.triples, 0.3, 2);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.size() > distinct.size() / 5);
    CHECK(a.size() < distinct.size() * 2 / 5);
  }
  SUBCASE("the sample is a subsequence of the distinct triples") {
    const auto a = sample_distinct(fixture.triples, 0.5, 9);
    std::size_t j = 0;
    for (const auto& t : distinct) {
      if (j < a.size() && a[j] == t) ++j;
    }
    CHECK(j == a.size());
  }
  SUBCASE("bad fractions are rejected") {
    CHECK_THROWS_AS(sample_distinct(fixture.triples, 0.0, 1), InvalidArgument);
    CHECK_THROWS_AS(sample_distinct(fixture.triples, 1.5, 1), InvalidArgument);
    CHECK_THROWS_AS(sample_distinct(fixture.triples, -0.1, 1), InvalidArgument);
  }
}

TEST_CASE("sample_triples writes identical files for one seed") {
  TempDir dir("sample");
  std::mt19937_64 rng(3);
  const auto fixture = lexsense::testing::random_triples(rng, 100, 30, 4, 1000);
  {
    std::ofstream os(dir / "in.tsv");
    write_triples(os, fixture.triples);
  }
  sample_triples(dir / "in.tsv", dir / "a.tsv", 0.3, 1);
  sample_triples(dir / "in.tsv", dir / "b.tsv", 0.3, 1);
  sample_triples(dir / "in.tsv", dir / "c.tsv", 0.3, 2);
  CHECK(lexsense::testing::slurp(dir / "a.tsv") == lexsense::testing::slurp(dir / "b.tsv"));
  CHECK(lexsense::testing::slurp(dir / "a.tsv") != lexsense::testing::slurp(dir / "c.tsv"));
  CHECK(read_triples(dir / "a.tsv") == sample_distinct(fixture.triples, 0.3, 1));
  CHECK_THROWS_AS(sample_triples(dir / "missing.tsv", dir / "d.tsv", 0.3, 1), IoError);
}
