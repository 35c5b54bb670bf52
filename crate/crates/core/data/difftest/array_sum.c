// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int array_sum(int n, int seed) {
    int values[16];
    int total = 0;
    if (n > 16) {
        n = 16;
    }
    for (int i = 0; i < n; i++) {
        values[i] = (seed + i * 7) % 11;
    }
    for (int i = 0; i < n; i++) {
        total += values[i];
    }
    return total;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
5 3
16 9
0 4
30 1
