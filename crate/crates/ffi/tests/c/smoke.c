#include <math.h>
#include <stdio.h>

#include "tangential.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    const double sides[5] = {1, 1, 1, 1, 1};
    TpSolution *solution = NULL;
    CHECK(tp_solve(sides, 5, NAN, 0.0, &solution) == TP_STATUS_OK);
    CHECK(tp_solution_root_count(solution) == 2);

    TpRoot root;
    CHECK(tp_solution_root(solution, 1, &root) == TP_STATUS_OK);
    CHECK(root.winding == 2);
    CHECK(fabs(root.radius - 0.5 / tan(2 * M_PI / 5)) < 1e-12);

    double xy[10];
    CHECK(tp_solution_vertices(solution, 0, xy, 10) == TP_STATUS_OK);
    CHECK(tp_solution_vertices(solution, 0, xy, 9) == TP_STATUS_BUFFER_TOO_SMALL);
    tp_solution_free(solution);

    const double flat[3] = {1, 1, 5};
    CHECK(tp_solve(flat, 3, NAN, 0.0, &solution) == TP_STATUS_INFEASIBLE);
    CHECK(solution == NULL);
    printf("%s\n", tp_last_error_message());

    const double square[4] = {1, 1, 1, 1};
    TpBicentric *quad = NULL;
    TpBicentricInfo info;
    CHECK(tp_bicentric_build(square, 0.0, &quad) == TP_STATUS_OK);
    CHECK(tp_bicentric_info(quad, &info) == TP_STATUS_OK);
    CHECK(fabs(info.circumradius - sqrt(0.5)) < 1e-12);
    tp_bicentric_free(quad);
    return 0;
}
