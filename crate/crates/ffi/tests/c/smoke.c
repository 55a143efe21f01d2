#include <stdio.h>
#include "homlie.h"

int main(void) {
    HlAlgebra *alg = NULL;
    HlSolution *sol = NULL;
    if (hl_algebra_builtin("sl2", &alg) != HL_STATUS_OK) return 1;
    if (hl_solve(alg, "hom-lie", &sol) != HL_STATUS_OK) return 2;
    printf("%zu %zu\n", hl_algebra_dim(alg), hl_solution_dim(sol));
    hl_solution_free(sol);
    hl_algebra_free(alg);
    if (hl_algebra_builtin("e8", &alg) != HL_STATUS_UNKNOWN_ALGEBRA) return 3;
    printf("%s\n", hl_last_error_message());
    return 0;
}
