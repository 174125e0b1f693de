#include <stdio.h>
#include <string.h>
#include "qwhittaker.h"

int main(void) {
    int64_t point[2] = {1, 0};
    QwPoly *p = NULL;
    if (qw_whittaker(point, 2, false, &p) != QW_STATUS_OK) return 10;
    if (qw_poly_nvars(p) != 2 || qw_poly_nterms(p) != 2) return 11;
    char *json = NULL;
    if (qw_poly_to_json(p, &json) != QW_STATUS_OK) return 12;
    printf("%s\n", json);
    qw_string_free(json);
    qw_poly_free(p);

    int64_t bad[2] = {0, 2};
    if (qw_macdonald(bad, 2, 2, 1, 2, 1, 3, &p) != QW_STATUS_INVALID_INPUT) return 13;
    if (strlen(qw_last_error()) == 0) return 14;
    return 0;
}
