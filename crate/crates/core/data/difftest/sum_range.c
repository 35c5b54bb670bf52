// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int sum_range(int lo, int hi) {
    int total = 0;
    int step = 1;
    for (int i = lo; i <= hi; i++) {
        total += i * step;
    }
    return total;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
1 10
-5 5
7 3
0 0
