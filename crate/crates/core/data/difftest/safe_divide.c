// @prelude
#include <stdio.h>
#include <stdlib.h>
#include <assert.h>
// @function
int safe_divide(int num, int den) {
    int q = 0;
    assert(den >= 0);
    if (den == 0) {
        return -1;
    }
    q = num / den;
    return q;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
10 2
7 0
-9 4
100 7
