// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int count_digits(int n) {
    int digits = 0;
    if (n == 0) {
        return 1;
    }
    if (n < 0) {
        n = -n;
    }
    while (n > 0) {
        n = n / 10;
        digits++;
    }
    return digits;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
0
7
12345
-900
