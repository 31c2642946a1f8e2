#include <stdio.h>
#include <string.h>
#include "qbinom.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  QbPoly *p = NULL;
  char *s = NULL;

  CHECK(qb_binom(-3, -5, &p) == QB_STATUS_OK);
  CHECK(qb_poly_to_string(p, &s) == QB_STATUS_OK);
  CHECK(strcmp(s, "q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3") == 0);
  qb_string_free(s);

  int64_t lo = 0, hi = 0;
  CHECK(qb_poly_valuation_degree(p, &lo, &hi) == QB_STATUS_OK);
  CHECK(lo == -7 && hi == -3);

  CHECK(qb_poly_eval(p, "1", &s) == QB_STATUS_OK);
  CHECK(strcmp(s, "6") == 0);
  qb_string_free(s);
  CHECK(qb_poly_eval(p, "0", &s) == QB_STATUS_EVAL_AT_ZERO);
  qb_poly_free(p);

  QbPoly *a = NULL, *b = NULL;
  CHECK(qb_binom(-1, 2, &a) == QB_STATUS_OK);
  CHECK(qb_binom(-1, -3, &b) == QB_STATUS_OK);
  bool eq = false;
  CHECK(qb_poly_equal(a, b, &eq) == QB_STATUS_OK && eq);
  qb_poly_free(a);
  qb_poly_free(b);

  CHECK(qb_binom(-1, INT64_MAX, &p) == QB_STATUS_OVERFLOW);
  CHECK(qb_binom(1, 1, NULL) == QB_STATUS_NULL_POINTER);

  bool passed = false;
  CHECK(qb_check("symmetry", "{\"n\":[-3,3],\"k\":[-3,3]}", &s, &passed) == QB_STATUS_OK);
  CHECK(passed);
  CHECK(strstr(s, "\"checked\":49") != NULL);
  qb_string_free(s);
  CHECK(qb_check("nope", NULL, &s, &passed) == QB_STATUS_UNKNOWN_IDENTITY);

  puts(qb_status_message(QB_STATUS_INEXACT_DIVISION));
  return 0;
}
