#include <math.h>
#include <stdio.h>
#include <string.h>

#include "fp5.h"

#define CHECK(cond)                                          \
  do {                                                       \
    if (!(cond)) {                                           \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                              \
    }                                                        \
  } while (0)

int main(void) {
  double t = 0.0;
  CHECK(fp5_tnorm(2.0, 0.5, 0.5, &t) == FP5_STATUS_OK);
  CHECK(fabs(t - 0.22844669683638803) < 1e-12);
  CHECK(fp5_tnorm(2.0, 2.0, 0.5, &t) == FP5_STATUS_OUT_OF_RANGE);
  CHECK(fp5_last_error_message() != NULL);

  Fp5PentaCoords c;
  CHECK(fp5_decompose_lg(0.7, 0.2, &c) == FP5_STATUS_OK);
  CHECK(fabs(c.iota - 0.4) < 1e-12);

  CHECK(fp5_or(FP5_TRUTH_UNDEFINED, FP5_TRUTH_CONTRADICTORY) == FP5_TRUTH_INDETERMINATE);

  Fp5Expr *expr = NULL;
  size_t offset = 0;
  CHECK(fp5_expr_parse("a | !b", &expr, &offset) == FP5_STATUS_OK);
  Fp5Truth value;
  CHECK(fp5_expr_eval(expr, "a=F,b=T", &value) == FP5_STATUS_OK);
  CHECK(value == FP5_TRUTH_FALSE);
  char *text = fp5_expr_to_string(expr);
  CHECK(strcmp(text, "a | !b") == 0);
  fp5_string_free(text);
  fp5_expr_free(expr);

  const char *ids[] = {"e1"};
  Fp5Grade4 grades[] = {{1.0, 0.0, 0.0, 0.0}};
  Fp5Set *set = NULL;
  Fp5Set *flipped = NULL;
  CHECK(fp5_set_new(ids, grades, 1, &set) == FP5_STATUS_OK);
  CHECK(fp5_set_complement(set, &flipped) == FP5_STATUS_OK);
  CHECK(fp5_set_get(flipped, 0, &c) == FP5_STATUS_OK);
  CHECK(c.phi == 1.0 && c.tau == 0.0);
  fp5_set_free(flipped);
  fp5_set_free(set);

  puts("ok");
  return 0;
}
