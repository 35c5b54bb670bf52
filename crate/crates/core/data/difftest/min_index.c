// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int min_index(int n, int seed) {
    int v[15];
    int idx = 0;
    if (n < 1 || n > 15) {
        return -1;
    }
    for (int i = 0; i < n; i++) {
        v[i] = (seed * 13 + i * i * 7) % 19;
    }
    for (int i = 1; i < n; i++) {
        if (v[i] < v[idx]) {
            idx = i;
        }
    }
    return idx;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
5 2
15 3
1 8
10 11
