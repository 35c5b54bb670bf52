// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int array_max_ptr(int n, int seed) {
    int values[12];
    int *best = NULL;
    if (n < 1 || n > 12) {
        return -1;
    }
    for (int i = 0; i < n; i++) {
        values[i] = (seed * (i + 3)) % 17;
    }
    best = &values[0];
    for (int i = 1; i < n; i++) {
        if (values[i] > *best) {
            best = &values[i];
        }
    }
    return *best;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
4 5
12 11
1 2
0 3
