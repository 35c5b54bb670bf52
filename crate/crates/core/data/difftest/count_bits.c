// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int count_bits(int x) {
    unsigned int v = (unsigned int) x;
    int ones = 0;
    while (v != 0) {
        ones += v & 1;
        v >>= 1;
    }
    return ones;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
0
7
255
-1
