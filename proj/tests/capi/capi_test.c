/* Copyright 2026 The dimkit Authors.
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

/* Plain C client of the shared library: the header must compile as C and
 * every call goes through the exported API. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "dimkit/dimkit.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, \
              #cond);                                             \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char *haystack, const char *needle) {
  return haystack && strstr(haystack, needle) != NULL;
}

int main(void) {
  dimkit_kb *kb = NULL;
  dimkit_embedder *emb = NULL;
  char *out = NULL;
  char *out2 = NULL;
  char *out3 = NULL;
  double value = 0.0;

  EXPECT(dimkit_kb_load("/nonexistent/units.tsv", NULL, &kb) == DIMKIT_ERR_IO);
  EXPECT(kb == NULL);
  EXPECT(strlen(dimkit_last_error()) > 0);
  EXPECT(dimkit_kb_load(NULL, NULL, &kb) == DIMKIT_ERR_INVALID_ARGUMENT);

  EXPECT(dimkit_kb_load(DIMKIT_TEST_DATA_DIR "/units.tsv",
                        DIMKIT_TEST_DATA_DIR "/unit_frequency.tsv",
                        &kb) == DIMKIT_OK);
  if (!kb) return 1;
  EXPECT(dimkit_kb_size(kb) == 90);
  EXPECT(strcmp(dimkit_status_name(DIMKIT_ERR_INCOMPARABLE), "incomparable") == 0);

  EXPECT(dimkit_unit_info(kb, "POUNDAL", &out) == DIMKIT_OK);
  EXPECT(contains(out, "\"symbolic\":\"LMT^-2\""));
  dimkit_string_free(out);
  out = NULL;
  EXPECT(dimkit_unit_info(kb, "NOPE", &out) == DIMKIT_ERR_UNKNOWN_UNIT);
  EXPECT(out == NULL);

  EXPECT(dimkit_convert(kb, 2.06, "M", "CentiM", &value) == DIMKIT_OK);
  EXPECT(fabs(value - 206.0) < 1e-9);
  EXPECT(dimkit_convert(kb, 1, "POUNDAL", "DYN-PER-CentiM", &value) ==
         DIMKIT_ERR_INCOMPARABLE);
  EXPECT(contains(dimkit_last_error(), "POUNDAL"));
  EXPECT(dimkit_convert(kb, 1, "DEG_C", "K", &value) ==
         DIMKIT_ERR_AFFINE_UNSUPPORTED);

  EXPECT(dimkit_embedder_trigram(0, &emb) == DIMKIT_OK);
  EXPECT(dimkit_link(kb, emb, -1.0, "dyne/cm", "", 3, &out) == DIMKIT_OK);
  EXPECT(contains(out, "DYN-PER-CentiM"));
  dimkit_string_free(out);
  EXPECT(dimkit_link(kb, emb, -1.0, "zzzz", "", 3, &out) ==
         DIMKIT_ERR_EMPTY_RESULT);
  EXPECT(dimkit_link(kb, emb, 2.0, "m", "", 3, &out) ==
         DIMKIT_ERR_INVALID_ARGUMENT);

  EXPECT(dimkit_resolve_unit(kb, emb, -1.0, "kilograms", &out) == DIMKIT_OK);
  EXPECT(out && strcmp(out, "KiloGM") == 0);
  dimkit_string_free(out);

  EXPECT(dimkit_dimension_of(kb, "joule * meter", &out) == DIMKIT_OK);
  EXPECT(contains(out, "L^3 M T^-2"));
  dimkit_string_free(out);

  EXPECT(dimkit_generate_tasks(kb, "kind_match", NULL, 7, 3, 4, &out) == DIMKIT_OK);
  EXPECT(contains(out, "kind_match-000002"));
  EXPECT(dimkit_generate_tasks(kb, "kind_match", NULL, 7, 3, 4, &out2) == DIMKIT_OK);
  EXPECT(out && out2 && strcmp(out, out2) == 0);
  dimkit_string_free(out);
  dimkit_string_free(out2);
  EXPECT(dimkit_generate_tasks(kb, "riddle", NULL, 7, 3, 4, &out) ==
         DIMKIT_ERR_INVALID_ARGUMENT);
  EXPECT(dimkit_generate_tasks(kb, "dimension_prediction", NULL, 7, 3, 4, &out) ==
         DIMKIT_ERR_GENERATION);

  EXPECT(dimkit_annotate(kb, emb, -1.0, DIMKIT_TEST_DATA_DIR "/corpus.txt", "glued",
                         &out, &out2, &out3) == DIMKIT_OK);
  EXPECT(contains(out3, "reject:nonquantity"));
  EXPECT(!contains(out, "LPUI"));
  EXPECT(contains(out2, "LPUI"));
  dimkit_string_free(out);
  dimkit_string_free(out2);
  dimkit_string_free(out3);

  EXPECT(dimkit_bootstrap(kb, emb, -1.0, DIMKIT_TEST_DATA_DIR "/triplets.tsv", 0.8, 5,
                          10, &out) == DIMKIT_OK);
  EXPECT(contains(out, "\"melting_point\""));
  EXPECT(dimkit_render_sentences("[{\"subject\": \"Yao Ming\", \"predicate\": "
                                 "\"height\", \"object\": \"2.29 m\"}]",
                                 1, NULL, &out2) == DIMKIT_OK);
  EXPECT(contains(out2, "2.29 m"));
  dimkit_string_free(out);
  dimkit_string_free(out2);
  EXPECT(dimkit_bootstrap(kb, emb, -1.0, DIMKIT_TEST_DATA_DIR "/triplets.tsv", 0.0, 5,
                          10, &out) == DIMKIT_ERR_INVALID_ARGUMENT);

  EXPECT(dimkit_augment(kb, emb, -1.0, DIMKIT_TEST_DATA_DIR "/mwp.jsonl", 1.0,
                        "question_dimension", 3, 0, &out, &out2) == DIMKIT_OK);
  EXPECT(contains(out2, "question_dimension"));
  dimkit_string_free(out);
  dimkit_string_free(out2);
  EXPECT(dimkit_augment(kb, emb, -1.0, DIMKIT_TEST_DATA_DIR "/mwp.jsonl", 1.0,
                        "paraphrase", 3, 0, &out, &out2) ==
         DIMKIT_ERR_INVALID_ARGUMENT);

  EXPECT(dimkit_tokenize_equation("150*20%", &out) == DIMKIT_OK);
  EXPECT(contains(out, "\"*\"") && contains(out, "\"%\""));
  dimkit_string_free(out);
  EXPECT(dimkit_tokenize_equation("1+a", &out) == DIMKIT_ERR_PARSE);
  EXPECT(contains(dimkit_last_error(), "offset 2"));

  EXPECT(dimkit_score("/nonexistent.jsonl", "/nonexistent.jsonl", &out) ==
         DIMKIT_ERR_IO);

  dimkit_embedder_free(emb);
  dimkit_kb_free(kb);
  dimkit_kb_free(NULL);
  dimkit_string_free(NULL);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("C API checks passed\n");
  return failures ? 1 : 0;
}
