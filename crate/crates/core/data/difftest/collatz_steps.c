// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int collatz_steps(int n) {
    int steps = 0;
    if (n < 1) {
        return -1;
    }
    while (n != 1) {
        if (n % 2 == 0) {
            n = n / 2;
        } else {
            n = 3 * n + 1;
        }
        steps++;
    }
    return steps;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
1
6
27
0
