// Command-line front end over the lexsense C API.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "lexsense/lexsense.h"

namespace {

struct Failure {
  lexsense_status status;
};

void check(lexsense_status status) {
  if (status != LEXSENSE_OK) throw Failure{status};
}

struct StringDeleter {
  void operator()(char* s) const { lexsense_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct TriplesDeleter {
  void operator()(lexsense_triples* t) const { lexsense_triples_free(t); }
};
struct NetworkDeleter {
  void operator()(lexsense_network* n) const { lexsense_network_free(n); }
};
struct ConfigDeleter {
  void operator()(lexsense_config* c) const { lexsense_config_free(c); }
};

std::unique_ptr<lexsense_triples, TriplesDeleter> load_triples(const std::string& triples,
                                                               const std::string& lexicon) {
  lexsense_triples* t = nullptr;
  check(lexsense_triples_load(triples.c_str(), lexicon.c_str(), &t));
  return std::unique_ptr<lexsense_triples, TriplesDeleter>(t);
}

std::unique_ptr<lexsense_network, NetworkDeleter> load_network(const std::string& path) {
  lexsense_network* n = nullptr;
  check(lexsense_network_load(path.c_str(), &n));
  auto owned = std::unique_ptr<lexsense_network, NetworkDeleter>(n);
  if (const auto w = lexsense_network_warning_count(n); w > 0) {
    std::cerr << "lexsense: network loaded with " << w << " warning(s)\n";
  }
  return owned;
}

void print(OwnedString s) { std::fputs(s.get(), stdout); }

struct ConfigFlags {
  std::string scorer = "lesk-ext";
  std::size_t k = 5;
  std::string overlap = "multiset";
  std::string relations = "all";
  std::string synonym_fallback = "on";
  bool weight_by_sim = false;
  bool backfill = false;
  unsigned threads = 1;
  std::string stoplist;

  void attach(CLI::App* cmd, bool with_k) {
    cmd->add_option("--scorer", scorer, "lesk-base, lesk-ext or lesk-variant")
        ->check(CLI::IsMember({"lesk-base", "lesk-ext", "lesk-variant"}));
    if (with_k) cmd->add_option("--k", k, "neighbors per target")->check(CLI::PositiveNumber);
    cmd->add_option("--overlap-mode", overlap, "set or multiset")->check(CLI::IsMember({"set", "multiset"}));
    cmd->add_option("--relations", relations, "\"all\" or r1:r2,... (must be swap-closed)");
    cmd->add_option("--synonym-fallback", synonym_fallback, "use synonyms when a synset has no gloss")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_flag("--weight-by-sim", weight_by_sim, "weight neighbor votes by similarity");
    cmd->add_flag("--backfill-neighbors", backfill, "replace neighbors without senses by the next ranked");
    cmd->add_option("--threads", threads, "worker threads");
    cmd->add_option("--stoplist", stoplist, "stopword file replacing the built-in list");
  }

  std::unique_ptr<lexsense_config, ConfigDeleter> build() const {
    lexsense_config* c = nullptr;
    check(lexsense_config_new(&c));
    std::unique_ptr<lexsense_config, ConfigDeleter> cfg(c);
    check(lexsense_config_set_scorer(c, scorer.c_str()));
    check(lexsense_config_set_k(c, k));
    check(lexsense_config_set_overlap_mode(c, overlap.c_str()));
    check(lexsense_config_set_relations(c, relations.c_str()));
    check(lexsense_config_set_synonym_fallback(c, synonym_fallback == "on"));
    check(lexsense_config_set_weight_by_similarity(c, weight_by_sim));
    check(lexsense_config_set_backfill_neighbors(c, backfill));
    check(lexsense_config_set_threads(c, threads));
    if (!stoplist.empty()) check(lexsense_config_set_stoplist(c, stoplist.c_str()));
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-based word sense disambiguation with distributional neighbors"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lexsense_version());

  std::string in, out, triples, lexicon, network, word, pos, candidates, corpus, targets, gold;
  double fraction = 1.0;
  std::uint64_t seed = 0;
  std::size_t k = 5;

  auto* sample = app.add_subcommand("sample-triples", "keep a seeded random fraction of distinct triples");
  sample->add_option("--in", in, "triple file")->required()->check(CLI::ExistingFile);
  sample->add_option("--out", out, "output triple file")->required();
  sample->add_option("--fraction", fraction, "kept fraction in (0, 1]")->required();
  sample->add_option("--seed", seed, "random seed")->required();

  auto* neighbors = app.add_subcommand("neighbors", "rank candidates by Lin similarity");
  neighbors->add_option("--triples", triples)->required()->check(CLI::ExistingFile);
  neighbors->add_option("--lexicon", lexicon)->required()->check(CLI::ExistingFile);
  neighbors->add_option("--word", word)->required();
  neighbors->add_option("--pos", pos)->required();
  neighbors->add_option("--candidates", candidates, "comma separated lemmas")->required();
  neighbors->add_option("--k", k)->check(CLI::PositiveNumber);

  auto* senses = app.add_subcommand("senses", "list the senses of a lemma");
  senses->add_option("--network", network)->required()->check(CLI::ExistingFile);
  senses->add_option("--word", word)->required();
  senses->add_option("--pos", pos)->required();

  ConfigFlags wsd_flags;
  auto* disambiguate = app.add_subcommand("disambiguate", "disambiguate the content words of a corpus");
  disambiguate->add_option("--network", network)->required()->check(CLI::ExistingFile);
  disambiguate->add_option("--triples", triples)->required()->check(CLI::ExistingFile);
  disambiguate->add_option("--lexicon", lexicon)->required()->check(CLI::ExistingFile);
  disambiguate->add_option("--corpus", corpus, "corpus file or directory")->required()->check(CLI::ExistingPath);
  disambiguate->add_option("--targets", targets, "comma separated lemmas");
  wsd_flags.attach(disambiguate, true);

  ConfigFlags eval_flags;
  std::string k_list = "3,5,7";
  std::string subset_spec = "0.3:1,0.3:2,0.5:1,0.5:2,1.0:0";
  std::string out_dir = "reports";
  auto* evaluate = app.add_subcommand("evaluate", "score a k x subset grid against gold annotations");
  evaluate->add_option("--network", network)->required()->check(CLI::ExistingFile);
  evaluate->add_option("--triples", triples)->required()->check(CLI::ExistingFile);
  evaluate->add_option("--lexicon", lexicon)->required()->check(CLI::ExistingFile);
  evaluate->add_option("--corpus", corpus, "corpus file or directory")->required()->check(CLI::ExistingPath);
  evaluate->add_option("--gold", gold)->required()->check(CLI::ExistingFile);
  evaluate->add_option("--k-list", k_list, "comma separated k values");
  evaluate->add_option("--subset-spec", subset_spec, "fraction:seed,...");
  evaluate->add_option("--out", out_dir, "report directory");
  eval_flags.attach(evaluate, false);

  auto* coverage = app.add_subcommand("coverage", "sense coverage of a corpus");
  coverage->add_option("--network", network)->required()->check(CLI::ExistingFile);
  coverage->add_option("--corpus", corpus, "corpus file or directory")->required()->check(CLI::ExistingPath);

  CLI11_PARSE(app, argc, argv);

  try {
    char* text = nullptr;
    if (*sample) {
      check(lexsense_sample_triples(in.c_str(), out.c_str(), fraction, seed));
    } else if (*neighbors) {
      auto t = load_triples(triples, lexicon);
      check(lexsense_neighbors_tsv(t.get(), word.c_str(), pos.c_str(), candidates.c_str(), k, &text));
      print(OwnedString(text));
    } else if (*senses) {
      auto net = load_network(network);
      check(lexsense_senses_tsv(net.get(), word.c_str(), pos.c_str(), &text));
      print(OwnedString(text));
    } else if (*disambiguate) {
      auto net = load_network(network);
      auto t = load_triples(triples, lexicon);
      auto cfg = wsd_flags.build();
      const char* filter = disambiguate->count("--targets") > 0 ? targets.c_str() : nullptr;
      check(lexsense_disambiguate_tsv(net.get(), t.get(), cfg.get(), corpus.c_str(), filter, &text));
      print(OwnedString(text));
    } else if (*evaluate) {
      auto net = load_network(network);
      auto t = load_triples(triples, lexicon);
      auto cfg = eval_flags.build();
      check(lexsense_evaluate(net.get(), t.get(), cfg.get(), corpus.c_str(), gold.c_str(), k_list.c_str(),
                              subset_spec.c_str(), out_dir.c_str(), &text));
      print(OwnedString(text));
    } else if (*coverage) {
      auto net = load_network(network);
      check(lexsense_coverage_tsv(net.get(), corpus.c_str(), &text));
      print(OwnedString(text));
    }
  } catch (const Failure& f) {
    std::cerr << "lexsense: " << lexsense_status_string(f.status) << ": " << lexsense_last_error() << '\n';
    return 1 + static_cast<int>(f.status == LEXSENSE_ERR_INTERNAL ? 9 : f.status);
  }
  return 0;
}
