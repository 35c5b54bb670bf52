// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int power_mod(int base, int exp) {
    long result = 1;
    long b = base % 1000;
    int m = 1000;
    while (exp > 0) {
        if (exp % 2 == 1) {
            result = (result * b) % m;
        }
        b = (b * b) % m;
        exp = exp / 2;
    }
    return (int) result;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
2 10
3 7
7 0
13 45
