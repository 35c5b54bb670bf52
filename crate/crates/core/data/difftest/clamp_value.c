// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int clamp_value(int x, int bound) {
    int lower = -bound;
    int upper = bound;
    int y = x < lower ? lower : x;
    y = y > upper ? upper : y;
    return y;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
5 10
-20 10
30 10
0 0
