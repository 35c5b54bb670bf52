// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int even_digit_sum(int n) {
    int acc = 0;
    if (n < 0) {
        n = -n;
    }
    while (n != 0) {
        int dgt = n % 10;
        if (dgt % 2 == 0) {
            acc += dgt;
        }
        n = n / 10;
    }
    return acc;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
2468
13579
-402
0
