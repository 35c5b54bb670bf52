// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int swap_pair(int a, int b) {
    int x = a;
    int y = b;
    int *p = &x;
    int *q = &y;
    int t = *p;
    *p = *q;
    *q = t;
    return x * 100 + y;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
1 2
9 3
0 5
-1 4
