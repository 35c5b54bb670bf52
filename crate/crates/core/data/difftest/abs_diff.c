// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int abs_diff(int a, int b) {
    int d = a - b;
    int r = d < 0 ? -d : d;
    if (r > 1000) {
        r = 1000;
    }
    return r;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
3 9
9 3
-500 700
4 4
