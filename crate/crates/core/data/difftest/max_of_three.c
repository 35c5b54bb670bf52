// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int max_of_three(int a, int b, int c) {
    int best = a;
    if (b > best) {
        best = b;
    }
    if (c > best) {
        best = c;
    } else {
        best = best + 0;
    }
    return best;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2]), atoi(argv[3])));
    return 0;
}
// @inputs
1 2 3
3 2 1
-1 -7 -3
5 5 5
