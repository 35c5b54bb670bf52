// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int sign_product(int a, int b) {
    int sa = 0;
    int sb = 0;
    if (a > 0) {
        sa = 1;
    } else if (a < 0) {
        sa = -1;
    }
    if (b > 0) {
        sb = 1;
    } else if (b < 0) {
        sb = -1;
    }
    return sa * sb;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
3 4
-3 4
0 9
-2 -8
