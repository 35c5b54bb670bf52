// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int matrix_trace(int n, int seed) {
    int m[6][6];
    int tr = 0;
    if (n > 6) {
        n = 6;
    }
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            m[r][c] = (r * 5 + c * seed) % 9;
        }
    }
    for (int r = 0; r < n; r++) {
        tr += m[r][r];
    }
    return tr;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
3 2
6 7
1 1
9 4
