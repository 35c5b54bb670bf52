// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int reverse_digits(int n) {
    int reversed = 0;
    int sign = n < 0 ? -1 : 1;
    n = n * sign;
    while (n > 0) {
        int last = n % 10;
        reversed = reversed * 10 + last;
        n /= 10;
    }
    return reversed * sign;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
123
-450
7
0
