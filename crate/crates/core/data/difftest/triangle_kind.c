// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int triangle_kind(int a, int b, int c) {
    if (a <= 0 || b <= 0 || c <= 0) {
        return -1;
    }
    if (a + b <= c || a + c <= b || b + c <= a) {
        return 0;
    }
    if (a == b && b == c) {
        return 3;
    }
    if (a == b || b == c || a == c) {
        return 2;
    }
    return 1;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2]), atoi(argv[3])));
    return 0;
}
// @inputs
3 3 3
3 4 5
2 2 3
1 2 8
0 1 1
