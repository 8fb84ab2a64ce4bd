/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "orderlex/orderlex.h"

static int failures = 0;

#define EXPECT(cond)                                                    \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

static const char* figure_eight =
    "{\"label\": \"figure-eight\", \"rank\": 2,\n"
    " \"monodromy\": [\"aba\", \"ba\"], \"monodromy_inverse\": [\"aB\", \"bbA\"],\n"
    " \"homomorphisms\": [{\"label\": \"z2\", \"group\": \"Z2\", \"fiber\": [0, 0], \"stable\": 1}],\n"
    " \"representations\": [{\"label\": \"sign-t\", \"matrices\": [[[1]], [[1]], [[-1]]]}]}";

static olx_manifest* load(const char* text, olx_status* status) {
  olx_manifest* m = NULL;
  *status = olx_manifest_load_string(text, strlen(text), &m);
  return m;
}

static void test_loading(void) {
  olx_status status;
  olx_manifest* m = load(figure_eight, &status);
  EXPECT(status == OLX_OK);
  EXPECT(m != NULL);
  EXPECT(strcmp(olx_manifest_label(m), "figure-eight") == 0);
  EXPECT(olx_manifest_rank(m) == 2);
  EXPECT(olx_manifest_homomorphism_count(m) == 1);
  EXPECT(olx_manifest_representation_count(m) == 1);
  EXPECT(strcmp(olx_last_error(), "") == 0);
  olx_manifest_free(m);

  m = load("{\"rank\": 2,\n \"monodromy\": [\"a\", \"q\"]}", &status);
  EXPECT(status == OLX_PARSE_ERROR);
  EXPECT(m == NULL);
  EXPECT(olx_last_error_line() == 2);
  EXPECT(olx_last_error_column() > 0);
  EXPECT(strstr(olx_last_error(), "line 2") != NULL);

  m = load("{\"rank\": 1, \"monodromy\": [\"aa\"], \"monodromy_inverse\": [\"a\"]}", &status);
  EXPECT(status == OLX_CERTIFICATION_ERROR);
  EXPECT(olx_last_error_line() == 0);

  EXPECT(olx_manifest_load_file("/nonexistent.json", &m) == OLX_INVALID_ARGUMENT);
  EXPECT(olx_manifest_load_string(NULL, 0, &m) == OLX_INVALID_ARGUMENT);
  olx_manifest_free(NULL);
}

static void test_queries(void) {
  olx_status status;
  olx_manifest* m = load(figure_eight, &status);
  char* json = NULL;

  EXPECT(olx_alexander(m, &json) == OLX_OK);
  EXPECT(strstr(json, "\"polynomial\": \"t^2 - 3*t + 1\"") != NULL);
  EXPECT(strstr(json, "biorderable_by_perron_rolfsen") != NULL);
  olx_string_free(json);

  EXPECT(olx_twisted(m, "z2", NULL, 1, &json) == OLX_OK);
  EXPECT(strstr(json, "\"polynomial\": \"t^4 - 7*t^2 + 1\"") != NULL);
  olx_string_free(json);

  EXPECT(olx_twisted(m, NULL, "sign-t", 1, &json) == OLX_OK);
  EXPECT(strstr(json, "\"polynomial\": \"t^2 + 3*t + 1\"") != NULL);
  EXPECT(strstr(json, "obstructed_not_biorderable") != NULL);
  olx_string_free(json);

  EXPECT(olx_twisted(m, NULL, "trivial", 2, &json) == OLX_OK);
  EXPECT(strstr(json, "\"polynomial\": \"t^4 - 3*t^2 + 1\"") != NULL);
  olx_string_free(json);

  EXPECT(olx_twisted(m, "z7", NULL, 1, &json) == OLX_SELECTOR_ERROR);
  EXPECT(json == NULL);
  EXPECT(strstr(olx_last_error(), "z7") != NULL);
  EXPECT(olx_twisted(m, NULL, NULL, 1, &json) == OLX_SELECTOR_ERROR);
  EXPECT(olx_twisted(m, "z2", "trivial", 1, &json) == OLX_INVALID_ARGUMENT);
  EXPECT(olx_twisted(m, "z2", NULL, 0, &json) == OLX_INVALID_ARGUMENT);

  EXPECT(olx_cover(m, NULL, &json) == OLX_OK);
  EXPECT(strstr(json, "\"equal\": true") != NULL);
  EXPECT(strstr(json, "\"d\": 2") != NULL);
  olx_string_free(json);

  olx_manifest_free(m);
}

static void test_verify(void) {
  olx_status status;
  olx_manifest* m = load(figure_eight, &status);
  olx_settings settings;
  char* json = NULL;
  char* again = NULL;

  olx_settings_init(&settings);
  EXPECT(olx_verify(m, "shapiro", NULL, &settings, &json) == OLX_OK);
  EXPECT(strstr(json, "\"failures\": 0") != NULL);
  olx_string_free(json);

  EXPECT(olx_verify(m, "theorem2", "z2", &settings, &json) == OLX_OK);
  EXPECT(strstr(json, "\"gain\": false") != NULL);
  olx_string_free(json);

  settings.trials = 60;
  settings.has_seed = 1;
  settings.seed = 5;
  EXPECT(olx_verify(m, "order-lemmas", NULL, &settings, &json) == OLX_OK);
  EXPECT(olx_verify(m, "order-lemmas", NULL, &settings, &again) == OLX_OK);
  EXPECT(strcmp(json, again) == 0);
  EXPECT(strstr(json, "\"seed\": 5") != NULL);
  EXPECT(strstr(json, "\"unresolved\"") != NULL);
  EXPECT(strstr(json, "\"violations\": 0") != NULL);
  olx_string_free(json);
  olx_string_free(again);

  EXPECT(olx_verify(m, "lemma9", NULL, &settings, &json) == OLX_INVALID_ARGUMENT);
  EXPECT(json == NULL);
  EXPECT(olx_verify(m, "lemma4", NULL, NULL, &json) == OLX_OK);
  olx_string_free(json);

  EXPECT(olx_report(m, NULL, &json) == OLX_OK);
  EXPECT(strstr(json, "\"theorem2\"") != NULL);
  olx_string_free(json);

  olx_manifest_free(m);
}

int main(void) {
  EXPECT(strcmp(olx_status_name(OLX_SELECTOR_ERROR), "selector_error") == 0);
  EXPECT(olx_version()[0] != '\0');
  test_loading();
  test_queries();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return EXIT_FAILURE;
  }
  printf("c api: all checks passed\n");
  return EXIT_SUCCESS;
}
