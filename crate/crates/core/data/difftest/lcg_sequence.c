// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int lcg_sequence(int seed, int rounds) {
    unsigned int state = (unsigned int) seed;
    unsigned int mult = 1103515245u;
    unsigned int inc = 12345u;
    int last = 0;
    for (int i = 0; i < rounds; i++) {
        state = state * mult + inc;
        last = (int) ((state >> 16) % 1000u);
    }
    return last;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
1 1
42 10
7 0
99 25
