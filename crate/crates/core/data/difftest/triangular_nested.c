// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int triangular_nested(int n) {
    int acc = 0;
    if (n > 200) {
        n = 200;
    }
    for (int i = 1; i <= n; i++) {
        int row = 0;
        for (int j = 1; j <= i; j++) {
            row += j;
        }
        acc += row;
    }
    return acc;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
1
4
10
0
