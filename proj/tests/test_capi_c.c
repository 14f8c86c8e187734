/* The public header must stay valid C; exercise the surface from C11. */

#include <stdint.h>
#include <stdio.h>
#include <string.h>

#include "diatomic.h"

static int g_failures = 0;

#define CHECK(cond)                                                     \
    do {                                                                \
        if (!(cond)) {                                                  \
            fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__,     \
                    #cond);                                             \
            ++g_failures;                                               \
        }                                                               \
    } while (0)

int main(void) {
    CHECK(strcmp(dt_version(), "1.0.0") == 0);

    dt_ctx* ctx = dt_ctx_new();
    CHECK(ctx != NULL);
    if (ctx == NULL) {
        return 1;
    }

    char* out = NULL;
    CHECK(dt_seq_term(ctx, "stern", 11, &out) == DT_OK);
    CHECK(out != NULL && strcmp(out, "5") == 0);
    dt_string_free(out);
    out = NULL;

    CHECK(dt_seq_term(ctx, "b", 0, &out) == DT_ERR_DOMAIN);
    CHECK(strlen(dt_last_error(ctx)) > 0);

    CHECK(dt_bijection_to_index(ctx, "stern", "3", "2", &out) == DT_OK);
    CHECK(out != NULL && strcmp(out, "5") == 0);
    dt_string_free(out);
    out = NULL;

    CHECK(dt_bijection_to_pair(ctx, "oplus", "10", &out) == DT_OK);
    CHECK(out != NULL && strcmp(out, "2 6") == 0);
    dt_string_free(out);
    out = NULL;

    CHECK(dt_bijection_to_index(ctx, "stern", "2", "4", &out) ==
          DT_ERR_DOMAIN);
    CHECK(strstr(dt_last_error(ctx), "not coprime") != NULL);

    char* report = NULL;
    uint64_t failures = 99;
    CHECK(dt_verify_run(ctx, "lemma-3-5", 8, 1, 1, "text", &report,
                        &failures) == DT_OK);
    CHECK(failures == 0);
    CHECK(report != NULL && strstr(report, "pass") != NULL);
    dt_string_free(report);

    CHECK(dt_seq_term(NULL, "stern", 1, &out) == DT_ERR_INVALID_ARG);

    dt_ctx_free(ctx);
    dt_ctx_free(NULL);

    if (g_failures > 0) {
        fprintf(stderr, "%d check(s) failed\n", g_failures);
        return 1;
    }
    printf("all C interface checks passed\n");
    return 0;
}
