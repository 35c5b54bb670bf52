// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int count_in_range(int lo, int hi) {
    int hits = 0;
    for (int k = 0; k < 50; k++) {
        int v = (k * 37) % 101;
        if (v >= lo && v < hi) {
            hits++;
        }
    }
    return hits;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
0 50
10 20
60 40
0 101
