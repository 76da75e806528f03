#include "lexsense/lexsense.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "lexsense/disambiguator.hpp"
#include "lexsense/error.hpp"
#include "lexsense/evaluation.hpp"
#include "tsv.hpp"

struct lexsense_triples {
  std::vector<lexsense::DependencyTriple> triples;
  lexsense::PosLexicon lexicon;
  lexsense::TripleIndex index;
};

struct lexsense_network {
  lexsense::SemanticNetwork net;
};

struct lexsense_config {
  lexsense::DisambiguatorOptions options;
  lexsense::LeskOptions lesk;
  lexsense::RelationPairs pairs = lexsense::RelationPairs::all();
  lexsense::Stoplist stoplist = lexsense::Stoplist::french();
};

namespace {

std::string& last_error() {
  thread_local std::string message;
  return message;
}

template <class F>
lexsense_status guarded(F&& body) noexcept {
  try {
    body();
    last_error().clear();
    return LEXSENSE_OK;
  } catch (const lexsense::Error& e) {
    last_error() = e.what();
    return static_cast<lexsense_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error() = "out of memory";
  } catch (const std::exception& e) {
    last_error() = e.what();
  } catch (...) {
    last_error() = "unknown failure";
  }
  return LEXSENSE_ERR_INTERNAL;
}

template <class T>
const T& require(const T* p, const char* what) {
  if (p == nullptr) throw lexsense::InvalidArgument(std::string(what) + " is null");
  return *p;
}

std::string text(const char* s, const char* what) {
  if (s == nullptr) throw lexsense::InvalidArgument(std::string(what) + " is null");
  return s;
}

template <class T>
T& out_param(T* p) {
  if (p == nullptr) throw lexsense::InvalidArgument("output pointer is null");
  return *p;
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::set<std::string> split_list(const std::string& csv) {
  std::set<std::string> out;
  for (const auto item : lexsense::detail::split(csv, ',')) {
    const auto t = lexsense::detail::trim(item);
    if (!t.empty()) out.emplace(t);
  }
  return out;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string score_text(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  return fixed6(v);
}

}  // namespace

extern "C" {

const char* lexsense_version(void) { return "1.0.0"; }

const char* lexsense_status_string(lexsense_status status) {
  switch (status) {
    case LEXSENSE_OK: return "ok";
    case LEXSENSE_ERR_IO: return "i/o error";
    case LEXSENSE_ERR_PARSE: return "parse error";
    case LEXSENSE_ERR_DOMAIN: return "domain error";
    case LEXSENSE_ERR_UNKNOWN_WORD: return "unknown word";
    case LEXSENSE_ERR_CONTRACT: return "contract violation";
    case LEXSENSE_ERR_REFUSED: return "refused";
    case LEXSENSE_ERR_CONSISTENCY: return "consistency error";
    case LEXSENSE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LEXSENSE_ERR_INTERNAL: return "internal error";
  }
  return "unrecognized status";
}

const char* lexsense_last_error(void) { return last_error().c_str(); }

void lexsense_string_free(char* s) { std::free(s); }

lexsense_status lexsense_triples_load(const char* triples_path, const char* lexicon_path,
                                      lexsense_triples** out) {
  return guarded([&] {
    auto& slot = out_param(out);
    slot = nullptr;
    auto t = std::make_unique<lexsense_triples>();
    t->triples = lexsense::read_triples(text(triples_path, "triples path"));
    t->lexicon = lexsense::load_pos_lexicon(text(lexicon_path, "lexicon path"));
    t->index = lexsense::TripleIndex::build(t->triples, t->lexicon);
    slot = t.release();
  });
}

void lexsense_triples_free(lexsense_triples* t) { delete t; }

lexsense_status lexsense_triples_vocabulary_size(const lexsense_triples* t, const char* pos, size_t* out) {
  return guarded([&] {
    const auto p = lexsense::require_pos(text(pos, "pos"));
    out_param(out) = require(t, "triples").index.vocabulary(p).size();
  });
}

lexsense_status lexsense_sample_triples(const char* in_path, const char* out_path, double fraction,
                                        uint64_t seed) {
  return guarded([&] {
    lexsense::sample_triples(text(in_path, "input path"), text(out_path, "output path"), fraction, seed);
  });
}

lexsense_status lexsense_information_content(size_t holders, size_t total, double* out) {
  return guarded([&] { out_param(out) = lexsense::information_content(holders, total); });
}

lexsense_status lexsense_lin_similarity(const lexsense_triples* t, const char* w1, const char* w2,
                                        const char* pos, double* out) {
  return guarded([&] {
    const auto& index = require(t, "triples").index;
    const auto p = lexsense::require_pos(text(pos, "pos"));
    const auto ic = lexsense::InformationContentTable::build(index, p);
    out_param(out) = lexsense::lin_similarity(index, ic, text(w1, "word"), text(w2, "word"), p);
  });
}

lexsense_status lexsense_neighbors_tsv(const lexsense_triples* t, const char* word, const char* pos,
                                       const char* candidates, size_t k, char** out) {
  return guarded([&] {
    auto& slot = out_param(out);
    slot = nullptr;
    const auto& index = require(t, "triples").index;
    const auto p = lexsense::require_pos(text(pos, "pos"));
    const auto ic = lexsense::InformationContentTable::build(index, p);
    const auto list = lexsense::nearest_neighbors(index, ic, lexsense::WordKey{text(word, "word"), p},
                                                  split_list(text(candidates, "candidates")), k);
    std::string tsv;
    for (const auto& n : list.neighbors) tsv += n.lemma + '\t' + fixed6(n.score) + '\n';
    slot = dup_string(tsv);
  });
}

lexsense_status lexsense_network_load(const char* path, lexsense_network** out) {
  return guarded([&] {
    auto& slot = out_param(out);
    slot = nullptr;
    auto net = std::make_unique<lexsense_network>();
    net->net = lexsense::load_network(text(path, "network path"));
    slot = net.release();
  });
}

void lexsense_network_free(lexsense_network* net) { delete net; }

size_t lexsense_network_size(const lexsense_network* net) { return net == nullptr ? 0 : net->net.size(); }

size_t lexsense_network_warning_count(const lexsense_network* net) {
  return net == nullptr ? 0 : net->net.warnings().size();
}

lexsense_status lexsense_senses_tsv(const lexsense_network* net, const char* lemma, const char* pos,
                                    char** out) {
  return guarded([&] {
    auto& slot = out_param(out);
    slot = nullptr;
    const auto p = lexsense::require_pos(text(pos, "pos"));
    std::string tsv;
    for (const auto* s : require(net, "network").net.senses(text(lemma, "lemma"), p)) {
      tsv += s->id + '\t' + std::to_string(s->degree) + '\t' + (s->glosses.empty() ? "" : s->glosses.front()) +
             '\n';
    }
    slot = dup_string(tsv);
  });
}

lexsense_status lexsense_config_new(lexsense_config** out) {
  return guarded([&] {
    auto& slot = out_param(out);
    slot = new lexsense_config();
  });
}

void lexsense_config_free(lexsense_config* cfg) { delete cfg; }

lexsense_status lexsense_config_set_scorer(lexsense_config* cfg, const char* scorer) {
  return guarded([&] { out_param(cfg).options.scorer = lexsense::parse_scorer(text(scorer, "scorer")); });
}

lexsense_status lexsense_config_set_k(lexsense_config* cfg, size_t k) {
  return guarded([&] {
    if (k == 0) throw lexsense::InvalidArgument("k must be positive");
    out_param(cfg).options.k = k;
  });
}

lexsense_status lexsense_config_set_overlap_mode(lexsense_config* cfg, const char* mode) {
  return guarded([&] {
    const auto m = text(mode, "overlap mode");
    auto& c = out_param(cfg);
    if (m == "set") {
      c.lesk.overlap = lexsense::OverlapMode::Set;
    } else if (m == "multiset") {
      c.lesk.overlap = lexsense::OverlapMode::Multiset;
    } else {
      throw lexsense::InvalidArgument("overlap mode must be set or multiset, got '" + m + "'");
    }
  });
}

lexsense_status lexsense_config_set_relations(lexsense_config* cfg, const char* pairs) {
  return guarded([&] { out_param(cfg).pairs = lexsense::RelationPairs::parse(text(pairs, "relations")); });
}

lexsense_status lexsense_config_set_synonym_fallback(lexsense_config* cfg, int on) {
  return guarded([&] { out_param(cfg).lesk.synonym_fallback = on != 0; });
}

lexsense_status lexsense_config_set_weight_by_similarity(lexsense_config* cfg, int on) {
  return guarded([&] { out_param(cfg).options.weight_by_similarity = on != 0; });
}

lexsense_status lexsense_config_set_backfill_neighbors(lexsense_config* cfg, int on) {
  return guarded([&] { out_param(cfg).options.backfill_neighbors = on != 0; });
}

lexsense_status lexsense_config_set_threads(lexsense_config* cfg, unsigned threads) {
  return guarded([&] { out_param(cfg).options.threads = threads == 0 ? 1 : threads; });
}

lexsense_status lexsense_config_set_stoplist(lexsense_config* cfg, const char* path) {
  return guarded([&] { out_param(cfg).stoplist = lexsense::Stoplist::load(text(path, "stoplist path")); });
}

lexsense_status lexsense_disambiguate_tsv(const lexsense_network* net, const lexsense_triples* t,
                                          const lexsense_config* cfg, const char* corpus_path,
                                          const char* targets, char** out) {
  return guarded([&] {
    auto& slot = out_param(out);
    slot = nullptr;
    const auto& network = require(net, "network").net;
    const auto& triples = require(t, "triples");
    const auto& c = require(cfg, "config");
    const auto docs = lexsense::read_corpus_collection(text(corpus_path, "corpus path"));
    const lexsense::LeskScorer lesk(network, lexsense::Tokenizer(c.stoplist), c.lesk, c.pairs);
    const lexsense::Disambiguator wsd(triples.index, lesk, c.options);
    std::set<std::string> filter;
    if (targets != nullptr) filter = split_list(targets);

    std::ostringstream tsv;
    tsv << "document\tparagraph\ttoken\tlemma\tpos\tstatus\tchosen\tscore\tneighbors\n";
    for (const auto& doc : docs) {
      const auto results = wsd.disambiguate_document(doc.tokens, targets != nullptr ? &filter : nullptr);
      for (const auto& r : results) {
        std::string score = "-";
        for (const auto& s : r.all_scores) {
          if (r.chosen && s.synset_id == *r.chosen) score = score_text(s.score);
        }
        std::string neighbors;
        for (const auto& n : r.neighbors_used.neighbors) {
          if (!neighbors.empty()) neighbors += ',';
          neighbors += n.lemma + ':' + fixed6(n.score);
        }
        tsv << doc.id << '\t' << r.token.paragraph_index << '\t' << r.token.token_index << '\t'
            << r.token.lemma << '\t' << lexsense::to_string(*r.token.pos) << '\t'
            << lexsense::to_string(r.status) << '\t' << r.chosen.value_or("-") << '\t' << score << '\t'
            << (neighbors.empty() ? "-" : neighbors) << '\n';
      }
    }
    slot = dup_string(tsv.str());
  });
}

lexsense_status lexsense_evaluate(const lexsense_network* net, const lexsense_triples* t,
                                  const lexsense_config* cfg, const char* corpus_path, const char* gold_path,
                                  const char* k_list, const char* subset_spec, const char* out_dir,
                                  char** aggregate_out) {
  return guarded([&] {
    if (aggregate_out != nullptr) *aggregate_out = nullptr;
    const auto& c = require(cfg, "config");
    const auto& triples = require(t, "triples");
    lexsense::SweepGrid grid;
    grid.scorers = {c.options.scorer};
    grid.ks = lexsense::parse_k_list(text(k_list, "k list"));
    grid.subsets = lexsense::parse_subset_spec(text(subset_spec, "subset spec"));

    lexsense::SweepInputs inputs{
        .network = &require(net, "network").net,
        .triples = triples.triples,
        .lexicon = triples.lexicon,
        .documents = lexsense::read_corpus_collection(text(corpus_path, "corpus path")),
        .gold = lexsense::read_gold(text(gold_path, "gold path")),
        .tokenizer = lexsense::Tokenizer(c.stoplist),
        .lesk = c.lesk,
        .relation_pairs = c.pairs,
        .disambiguator = c.options,
    };
    const auto reports = lexsense::sweep(grid, inputs);
    lexsense::write_sweep(text(out_dir, "output directory"), grid, reports);
    if (aggregate_out != nullptr) *aggregate_out = dup_string(lexsense::render_aggregate_tsv(grid, reports));
  });
}

lexsense_status lexsense_coverage_tsv(const lexsense_network* net, const char* corpus_path, char** out) {
  return guarded([&] {
    auto& slot = out_param(out);
    slot = nullptr;
    const auto docs = lexsense::read_corpus_collection(text(corpus_path, "corpus path"));
    slot = dup_string(lexsense::render_coverage_tsv(lexsense::coverage(docs, require(net, "network").net)));
  });
}

lexsense_status lexsense_aggregate(const double* values, size_t n, double* mean, double* stddev) {
  return guarded([&] {
    if (values == nullptr && n > 0) throw lexsense::InvalidArgument("values is null");
    const auto a = lexsense::aggregate(std::span<const double>(values, n));
    out_param(mean) = a.mean;
    out_param(stddev) = a.stddev;
  });
}

}  // extern "C"
