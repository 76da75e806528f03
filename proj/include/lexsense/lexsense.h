#ifndef LEXSENSE_H
#define LEXSENSE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LEXSENSE_BUILDING)
#define LEXSENSE_API __declspec(dllexport)
#else
#define LEXSENSE_API __declspec(dllimport)
#endif
#else
#define LEXSENSE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lexsense_status {
  LEXSENSE_OK = 0,
  LEXSENSE_ERR_IO = 1,
  LEXSENSE_ERR_PARSE = 2,
  LEXSENSE_ERR_DOMAIN = 3,
  LEXSENSE_ERR_UNKNOWN_WORD = 4,
  LEXSENSE_ERR_CONTRACT = 5,
  LEXSENSE_ERR_REFUSED = 6,
  LEXSENSE_ERR_CONSISTENCY = 7,
  LEXSENSE_ERR_INVALID_ARGUMENT = 8,
  LEXSENSE_ERR_INTERNAL = 99
} lexsense_status;

/* Dependency triples, the POS lexicon and the index built from them. */
typedef struct lexsense_triples lexsense_triples;
/* Synset snapshot. */
typedef struct lexsense_network lexsense_network;
/* Scorer and neighbor settings shared by disambiguate and evaluate. */
typedef struct lexsense_config lexsense_config;

LEXSENSE_API const char* lexsense_version(void);
LEXSENSE_API const char* lexsense_status_string(lexsense_status status);
/* Message of the last failed call on this thread; "" after a success. */
LEXSENSE_API const char* lexsense_last_error(void);
/* Strings handed out through char** parameters are released here. */
LEXSENSE_API void lexsense_string_free(char* s);

LEXSENSE_API lexsense_status lexsense_triples_load(const char* triples_path, const char* lexicon_path,
                                                   lexsense_triples** out);
LEXSENSE_API void lexsense_triples_free(lexsense_triples* t);
/* Indexed lemmas of one POS ("noun", "verb", "adj", "adv"). */
LEXSENSE_API lexsense_status lexsense_triples_vocabulary_size(const lexsense_triples* t, const char* pos,
                                                              size_t* out);
LEXSENSE_API lexsense_status lexsense_sample_triples(const char* in_path, const char* out_path,
                                                     double fraction, uint64_t seed);

LEXSENSE_API lexsense_status lexsense_information_content(size_t holders, size_t total, double* out);
LEXSENSE_API lexsense_status lexsense_lin_similarity(const lexsense_triples* t, const char* w1,
                                                     const char* w2, const char* pos, double* out);
/* TSV lines "lemma<TAB>score" with six decimals, best first. `candidates` is
   comma separated. */
LEXSENSE_API lexsense_status lexsense_neighbors_tsv(const lexsense_triples* t, const char* word,
                                                    const char* pos, const char* candidates, size_t k,
                                                    char** out);

LEXSENSE_API lexsense_status lexsense_network_load(const char* path, lexsense_network** out);
LEXSENSE_API void lexsense_network_free(lexsense_network* net);
LEXSENSE_API size_t lexsense_network_size(const lexsense_network* net);
LEXSENSE_API size_t lexsense_network_warning_count(const lexsense_network* net);
/* TSV lines "id<TAB>degree<TAB>first gloss" in id order. */
LEXSENSE_API lexsense_status lexsense_senses_tsv(const lexsense_network* net, const char* lemma,
                                                 const char* pos, char** out);

LEXSENSE_API lexsense_status lexsense_config_new(lexsense_config** out);
LEXSENSE_API void lexsense_config_free(lexsense_config* cfg);
/* "lesk-base", "lesk-ext" or "lesk-variant" */
LEXSENSE_API lexsense_status lexsense_config_set_scorer(lexsense_config* cfg, const char* scorer);
LEXSENSE_API lexsense_status lexsense_config_set_k(lexsense_config* cfg, size_t k);
/* "set" or "multiset" */
LEXSENSE_API lexsense_status lexsense_config_set_overlap_mode(lexsense_config* cfg, const char* mode);
/* "all" or "r1:r2,..."; the list must contain (r2, r1) for every (r1, r2). */
LEXSENSE_API lexsense_status lexsense_config_set_relations(lexsense_config* cfg, const char* pairs);
LEXSENSE_API lexsense_status lexsense_config_set_synonym_fallback(lexsense_config* cfg, int on);
LEXSENSE_API lexsense_status lexsense_config_set_weight_by_similarity(lexsense_config* cfg, int on);
LEXSENSE_API lexsense_status lexsense_config_set_backfill_neighbors(lexsense_config* cfg, int on);
LEXSENSE_API lexsense_status lexsense_config_set_threads(lexsense_config* cfg, unsigned threads);
/* One word per line; replaces the built-in French list. */
LEXSENSE_API lexsense_status lexsense_config_set_stoplist(lexsense_config* cfg, const char* path);

/* Disambiguates every content token of a corpus file or directory, or only
   the lemmas listed in `targets` (comma separated, may be NULL). */
LEXSENSE_API lexsense_status lexsense_disambiguate_tsv(const lexsense_network* net,
                                                       const lexsense_triples* t,
                                                       const lexsense_config* cfg,
                                                       const char* corpus_path, const char* targets,
                                                       char** out);

/* Runs the k-list x subset grid with the configured scorer, writes one report
   per cell plus aggregate.tsv into `out_dir`, and returns the aggregate table. */
LEXSENSE_API lexsense_status lexsense_evaluate(const lexsense_network* net, const lexsense_triples* t,
                                               const lexsense_config* cfg, const char* corpus_path,
                                               const char* gold_path, const char* k_list,
                                               const char* subset_spec, const char* out_dir,
                                               char** aggregate_out);

LEXSENSE_API lexsense_status lexsense_coverage_tsv(const lexsense_network* net, const char* corpus_path,
                                                   char** out);

/* Mean and population standard deviation. */
LEXSENSE_API lexsense_status lexsense_aggregate(const double* values, size_t n, double* mean,
                                                double* stddev);

#ifdef __cplusplus
}
#endif

#endif
