// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
double scale_double(int a, int b) {
    double ratio = 1.5;
    double offset = 0.25;
    double v = a * ratio + offset;
    if (b != 0) {
        v = v / b;
    }
    return v;
}
// @driver
int main(int argc, char **argv) {
    printf("%.4f\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
2 4
-3 1
10 0
7 3
