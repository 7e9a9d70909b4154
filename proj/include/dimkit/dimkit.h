/*
 * Copyright 2026 The dimkit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the dimkit library.
 *
 * Every function returns a dimkit_status. On failure the message is
 * available from dimkit_last_error() until the next call on the same
 * thread. Strings returned through `char **` out-parameters are owned by
 * the caller and released with dimkit_string_free(). Structured results are
 * JSON (one object) or JSON-Lines (one object per line). */

#ifndef DIMKIT_DIMKIT_H_
#define DIMKIT_DIMKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DIMKIT_BUILDING_LIBRARY)
#    define DIMKIT_API __declspec(dllexport)
#  else
#    define DIMKIT_API __declspec(dllimport)
#  endif
#else
#  define DIMKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dimkit_status {
  DIMKIT_OK = 0,
  DIMKIT_ERR_PARSE = 1,
  DIMKIT_ERR_VALIDATION = 2,
  DIMKIT_ERR_RANGE = 3,
  DIMKIT_ERR_INCOMPARABLE = 4,
  DIMKIT_ERR_AFFINE_UNSUPPORTED = 5,
  DIMKIT_ERR_UNKNOWN_UNIT = 6,
  DIMKIT_ERR_UNKNOWN_KIND = 7,
  DIMKIT_ERR_DOMAIN = 8,
  DIMKIT_ERR_DEGENERATE = 9,
  DIMKIT_ERR_DUPLICATE_ID = 10,
  DIMKIT_ERR_CONFIGURATION = 11,
  DIMKIT_ERR_GENERATION = 12,
  DIMKIT_ERR_MISALIGNED = 13,
  DIMKIT_ERR_NO_ALTERNATIVE = 14,
  DIMKIT_ERR_IO = 15,
  DIMKIT_ERR_INVALID_ARGUMENT = 16,
  DIMKIT_ERR_EMPTY_RESULT = 17,
  DIMKIT_ERR_INTERNAL = 18
} dimkit_status;

typedef struct dimkit_kb dimkit_kb;
typedef struct dimkit_embedder dimkit_embedder;

DIMKIT_API const char *dimkit_last_error(void);
DIMKIT_API const char *dimkit_status_name(dimkit_status status);
DIMKIT_API void dimkit_string_free(char *s);

/* --- knowledge base ---------------------------------------------------- */

/* `frequency_path` may be NULL; when given, the Frequency column is
 * recomputed from the raw signals it lists. */
DIMKIT_API dimkit_status dimkit_kb_load(const char *path,
                                        const char *frequency_path,
                                        dimkit_kb **out);
DIMKIT_API void dimkit_kb_free(dimkit_kb *kb);
DIMKIT_API size_t dimkit_kb_size(const dimkit_kb *kb);

/* {"unit_id", "label_en", "label_zh", "symbols", "kind", "dimension",
 *  "symbolic", "conversion_val", "affine_offset", "frequency"} */
DIMKIT_API dimkit_status dimkit_unit_info(const dimkit_kb *kb,
                                          const char *unit_id, char **json_out);

/* --- embeddings and linking -------------------------------------------- */

DIMKIT_API dimkit_status dimkit_embedder_trigram(size_t dimension,
                                                 dimkit_embedder **out);
/* word2vec text format: "<count> <dim>" header, then "<word> v1 ... vd". */
DIMKIT_API dimkit_status dimkit_embedder_load(const char *path,
                                              dimkit_embedder **out);
DIMKIT_API void dimkit_embedder_free(dimkit_embedder *emb);

/* Ranked candidates as a JSON array of {"unit_id", "prior", "p_mention",
 * "p_context", "score"}, at most `top_k` (0 for all). A negative threshold
 * selects the default. An empty ranking is DIMKIT_ERR_EMPTY_RESULT. */
DIMKIT_API dimkit_status dimkit_link(const dimkit_kb *kb,
                                     const dimkit_embedder *emb,
                                     double threshold, const char *surface,
                                     const char *context, size_t top_k,
                                     char **json_out);

/* Unit id for a unit id, an exact surface form (most frequent unit on
 * ties) or, failing both, the top-1 link. */
DIMKIT_API dimkit_status dimkit_resolve_unit(const dimkit_kb *kb,
                                             const dimkit_embedder *emb,
                                             double threshold,
                                             const char *surface,
                                             char **unit_id_out);

/* --- dimensions and conversion ----------------------------------------- */

DIMKIT_API dimkit_status dimkit_convert(const dimkit_kb *kb, double value,
                                        const char *from_unit,
                                        const char *to_unit, double *out);

/* Flat unit expression such as "joule * meter". Result:
 * {"dimension", "symbolic", "units": [matching unit ids]} */
DIMKIT_API dimkit_status dimkit_dimension_of(const dimkit_kb *kb,
                                             const char *expression,
                                             char **json_out);

/* --- datasets ---------------------------------------------------------- */

/* `task` is a task type name or "all". `annotated_path` (JSON-Lines of
 * annotated sentences) may be NULL; "all" then skips the two text tasks. */
DIMKIT_API dimkit_status dimkit_generate_tasks(const dimkit_kb *kb,
                                               const char *task,
                                               const char *annotated_path,
                                               uint64_t seed, size_t n,
                                               size_t candidates,
                                               char **jsonl_out);

/* Rule annotation, masked-fill filter and review file over a corpus with
 * one sentence per line. `oracle` is "glued", "constant:<tok>",
 * "table:<path>" or "cmd:<command>". */
DIMKIT_API dimkit_status dimkit_annotate(const dimkit_kb *kb,
                                         const dimkit_embedder *emb,
                                         double threshold,
                                         const char *corpus_path,
                                         const char *oracle,
                                         char **retained_jsonl,
                                         char **rule_jsonl,
                                         char **review_tsv);

DIMKIT_API dimkit_status dimkit_apply_review(const char *rule_jsonl_path,
                                             const char *review_tsv_path,
                                             char **jsonl_out);

/* {"predicates": [...], "mentions": [...], "triplets": [{...}]} */
DIMKIT_API dimkit_status dimkit_bootstrap(const dimkit_kb *kb,
                                          const dimkit_embedder *emb,
                                          double threshold,
                                          const char *store_path, double tau,
                                          int iterations,
                                          size_t seed_unit_count,
                                          char **json_out);

/* Renders each triplet of `triplets_json` (a JSON array of {"subject",
 * "predicate", "object"}, as in the bootstrap result) into a sentence.
 * Output: one {"subject", "predicate", "object", "sentence"} line per
 * triplet. `command` may be NULL. */
DIMKIT_API dimkit_status dimkit_render_sentences(const char *triplets_json,
                                                 uint64_t seed,
                                                 const char *command,
                                                 char **jsonl_out);

/* `methods` is a comma-separated list of method names, or NULL for all. */
DIMKIT_API dimkit_status dimkit_augment(const dimkit_kb *kb,
                                        const dimkit_embedder *emb,
                                        double threshold,
                                        const char *dataset_path, double eta,
                                        const char *methods, uint64_t seed,
                                        int append, char **problems_jsonl,
                                        char **records_jsonl);

DIMKIT_API dimkit_status dimkit_score(const char *gold_path,
                                      const char *predictions_path,
                                      char **json_out);

/* JSON array of single-character tokens. */
DIMKIT_API dimkit_status dimkit_tokenize_equation(const char *equation,
                                                  char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* DIMKIT_DIMKIT_H_ */
