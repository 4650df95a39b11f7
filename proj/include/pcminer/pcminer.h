#ifndef PCMINER_H
#define PCMINER_H

/*
 * C interface to the pcminer library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a pcm_status; on
 * failure pcm_last_error() describes the problem for the calling thread.
 * Pointers handed out by a result stay valid until that result is freed.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PCM_API __declspec(dllexport)
#else
#  define PCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcm_status {
  PCM_OK = 0,
  PCM_ERR_INVALID_ARGUMENT = 1,
  PCM_ERR_IO = 2,
  PCM_ERR_PARSE = 3,
  PCM_ERR_UNKNOWN_ITEM = 4,
  PCM_ERR_DECODE = 5,
  PCM_ERR_GUARD = 6, /* brute-force enumeration refused */
  PCM_ERR_INTERNAL = 7
} pcm_status;

typedef enum pcm_algorithm {
  PCM_ALGO_PCMINER = 0,
  PCM_ALGO_APRIORI = 1,
  PCM_ALGO_BRUTE = 2
} pcm_algorithm;

typedef struct pcm_db pcm_db;
typedef struct pcm_tree pcm_tree;
typedef struct pcm_result pcm_result;

typedef struct pcm_stats_row {
  const char* dataset;
  const char* algorithm;
  uint64_t min_sup;
  uint64_t num_frequent;
  uint64_t num_candidates;
  double runtime_ms;
} pcm_stats_row;

PCM_API const char* pcm_version(void);
PCM_API const char* pcm_last_error(void);
PCM_API const char* pcm_status_name(pcm_status status);

/* Algorithm name ("pcminer", "apriori", "brute") <-> enum. */
PCM_API const char* pcm_algorithm_name(pcm_algorithm algo);
PCM_API pcm_status pcm_algorithm_parse(const char* name, pcm_algorithm* out);

/* Databases */
PCM_API pcm_status pcm_db_load(const char* path, pcm_db** out, size_t* skipped_lines);
PCM_API pcm_status pcm_db_synthetic(uint64_t num_transactions, uint32_t num_items,
                                    double density, uint64_t seed, pcm_db** out);
/* `items` holds the rows back to back; row r has row_lengths[r] ids. */
PCM_API pcm_status pcm_db_from_rows(const uint32_t* items, const size_t* row_lengths,
                                    size_t rows, pcm_db** out);
PCM_API pcm_status pcm_db_write(const pcm_db* db, const char* path);
PCM_API void pcm_db_free(pcm_db* db);
PCM_API size_t pcm_db_transaction_count(const pcm_db* db);
PCM_API size_t pcm_db_item_count(const pcm_db* db);

/* Prime encoding of an itemset under the database's prime table, written as
 * a NUL-terminated decimal string. `*needed` receives the buffer size
 * required including the terminator. */
PCM_API pcm_status pcm_db_encode(const pcm_db* db, const uint32_t* items, size_t n,
                                 char* buf, size_t cap, size_t* needed);

/* Trees */
PCM_API pcm_status pcm_tree_build(const pcm_db* db, pcm_tree** out);
PCM_API void pcm_tree_free(pcm_tree* tree);
PCM_API size_t pcm_tree_node_count(const pcm_tree* tree);
PCM_API size_t pcm_tree_head_count(const pcm_tree* tree);
PCM_API pcm_status pcm_tree_support(const pcm_tree* tree, const uint32_t* items, size_t n,
                                    uint64_t* out);
/* Number of broken structural invariants (0 for a healthy tree). */
PCM_API pcm_status pcm_tree_validate(const pcm_tree* tree, size_t* violations);

/* Mining. `threads` <= 1 runs sequentially. */
PCM_API pcm_status pcm_mine_tree(const pcm_tree* tree, uint64_t min_sup, unsigned threads,
                                 pcm_result** out);
/* Baselines (and PCM_ALGO_PCMINER, which builds a private tree). */
PCM_API pcm_status pcm_mine_db(const pcm_db* db, pcm_algorithm algo, uint64_t min_sup,
                               pcm_result** out);
PCM_API void pcm_result_free(pcm_result* result);

/* Frequent itemsets in lexicographic order. */
PCM_API size_t pcm_result_frequent_count(const pcm_result* result);
PCM_API pcm_status pcm_result_frequent_at(const pcm_result* result, size_t index,
                                          const uint32_t** items, size_t* len,
                                          uint64_t* support);
PCM_API size_t pcm_result_maximal_count(const pcm_result* result);
PCM_API pcm_status pcm_result_maximal_at(const pcm_result* result, size_t index,
                                         const uint32_t** items, size_t* len);
/* Candidates examined (pcminer) or generated (baselines), 1-itemsets excluded
 * except for brute force, which counts every enumerated itemset. */
PCM_API uint64_t pcm_result_candidates(const pcm_result* result);
PCM_API size_t pcm_result_warning_count(const pcm_result* result);
PCM_API const char* pcm_result_warning_at(const pcm_result* result, size_t index);

/* 0 when both frequent maps are identical, 1 otherwise. On a difference the
 * first differing itemset (lexicographic) is described in `buf`, e.g.
 * "0 2 3: 5 vs absent". */
PCM_API int pcm_result_diff(const pcm_result* a, const pcm_result* b, char* buf, size_t cap);

/* Stats CSV with header "dataset,algo,min_sup,num_frequent,num_candidates,runtime_ms". */
PCM_API pcm_status pcm_stats_write(const char* path, const pcm_stats_row* rows, size_t n);
/* Same CSV into `buf` (NUL-terminated); `*needed` gets the required size. */
PCM_API pcm_status pcm_stats_format(const pcm_stats_row* rows, size_t n, char* buf, size_t cap,
                                    size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* PCMINER_H */
