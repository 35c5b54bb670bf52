// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int factorial_mod(int n, int m) {
    long acc = 1;
    if (m <= 0) {
        return -1;
    }
    for (int i = 2; i <= n; i++) {
        acc = (acc * i) % m;
    }
    return (int) (acc % m);
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
5 1000
10 997
0 7
20 13
