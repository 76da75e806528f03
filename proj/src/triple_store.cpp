#include "lexsense/triple_store.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <unordered_map>

#include "lexsense/error.hpp"
#include "tsv.hpp"

namespace lexsense {

namespace {

std::size_t slot_of(Pos pos) { return static_cast<std::size_t>(pos); }

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

struct TripleKeyHash {
  std::size_t operator()(const DependencyTriple& t) const noexcept {
    std::hash<std::string> h;
    return h(t.head) ^ (h(t.relation) * 31) ^ (h(t.modifier) * 1000003);
  }
};

struct TripleKeyEq {
  bool operator()(const DependencyTriple& a, const DependencyTriple& b) const noexcept {
    return a.head == b.head && a.relation == b.relation && a.modifier == b.modifier;
  }
};

}  // namespace

TripleIndex TripleIndex::build(std::span<const DependencyTriple> triples,
                               const PosLexicon& lexicon) {
  TripleIndex index;
  auto add = [&](const std::string& lemma, SyntacticFeature feature, std::uint64_t count) {
    const auto it = lexicon.find(lemma);
    if (it == lexicon.end()) {
      ++index.skipped_;
      return;
    }
    const Pos pos = it->second;
    auto& feats = index.by_word_[WordKey{lemma, pos}];
    auto [slot, inserted] = feats.try_emplace(feature, 0);
    slot->second += count;
    if (inserted) ++index.holders_[slot_of(pos)][feature];
    index.vocab_[slot_of(pos)].insert(lemma);
  };
  for (const auto& t : triples) {
    add(t.head, SyntacticFeature{t.relation, t.modifier, Slot::AsHead}, t.count);
    add(t.modifier, SyntacticFeature{t.relation, t.head, Slot::AsModifier}, t.count);
  }
  return index;
}

const FeatureCounts* TripleIndex::features(std::string_view lemma, Pos pos) const {
  const auto it = by_word_.find(WordKey{std::string(lemma), pos});
  return it == by_word_.end() ? nullptr : &it->second;
}

std::size_t TripleIndex::holders(const SyntacticFeature& feature, Pos pos) const {
  const auto& table = holders_[slot_of(pos)];
  const auto it = table.find(feature);
  return it == table.end() ? 0 : it->second;
}

std::vector<DependencyTriple> parse_triples(std::istream& in, const std::string& source) {
  std::vector<DependencyTriple> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 4) {
      throw ParseError(source, line_no,
                       "expected 4 tab-separated columns, found " + std::to_string(cols.size()));
    }
    DependencyTriple t;
    t.head = detail::trim(cols[0]);
    t.relation = detail::trim(cols[1]);
    t.modifier = detail::trim(cols[2]);
    if (t.head.empty() || t.relation.empty() || t.modifier.empty()) {
      throw ParseError(source, line_no, "empty head, relation or modifier");
    }
    const auto count = detail::parse_int<std::uint64_t>(detail::trim(cols[3]));
    if (!count || *count == 0) {
      throw ParseError(source, line_no, "count must be a positive integer");
    }
    t.count = *count;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<DependencyTriple> read_triples(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_triples(in, path.string());
}

void write_triples(std::ostream& out, std::span<const DependencyTriple> triples) {
  for (const auto& t : triples) {
    out << t.head << '\t' << t.relation << '\t' << t.modifier << '\t' << t.count << '\n';
  }
}

PosLexicon parse_pos_lexicon(std::istream& in, const std::string& source) {
  PosLexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::trim(line).empty()) continue;
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 2) throw ParseError(source, line_no, "expected lemma<TAB>pos");
    const std::string lemma(detail::trim(cols[0]));
    const auto pos = parse_pos(detail::trim(cols[1]));
    if (lemma.empty() || !pos) throw ParseError(source, line_no, "bad lemma or pos");
    const auto [it, inserted] = lexicon.emplace(lemma, *pos);
    if (!inserted && it->second != *pos) {
      throw ParseError(source, line_no, "conflicting pos for '" + lemma + "'");
    }
  }
  return lexicon;
}

PosLexicon load_pos_lexicon(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_pos_lexicon(in, path.string());
}

TripleIndex load_triples(const std::filesystem::path& path, const PosLexicon& lexicon) {
  const auto triples = read_triples(path);
  return TripleIndex::build(triples, lexicon);
}

std::vector<DependencyTriple> distinct_triples(std::span<const DependencyTriple> triples) {
  std::vector<DependencyTriple> out;
  std::unordered_map<DependencyTriple, std::size_t, TripleKeyHash, TripleKeyEq> seen;
  seen.reserve(triples.size());
  for (const auto& t : triples) {
    const auto [it, inserted] = seen.try_emplace(t, out.size());
    if (inserted) {
      out.push_back(t);
    } else {
      out[it->second].count += t.count;
    }
  }
  return out;
}

std::vector<DependencyTriple> sample_distinct(std::span<const DependencyTriple> triples,
                                              double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InvalidArgument("sampling fraction must lie in (0, 1]");
  }
  auto distinct = distinct_triples(triples);
  std::mt19937_64 rng(seed);
  std::vector<DependencyTriple> kept;
  kept.reserve(static_cast<std::size_t>(static_cast<double>(distinct.size()) * fraction) + 1);
  for (auto& t : distinct) {
    // 53-bit uniform in [0, 1); std distributions are not portable.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < fraction) kept.push_back(std::move(t));
  }
  return kept;
}

std::filesystem::path sample_triples(const std::filesystem::path& source,
                                     const std::filesystem::path& out, double fraction,
                                     std::uint64_t seed) {
  const auto triples = read_triples(source);
  const auto kept = sample_distinct(triples, fraction, seed);
  std::ofstream os(out, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write " + out.string());
  write_triples(os, kept);
  os.flush();
  if (!os) throw IoError("write failed for " + out.string());
  return out;
}

}  // namespace lexsense
