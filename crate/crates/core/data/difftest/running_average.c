// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
double running_average(int n, int seed) {
    double mean = 0.0;
    int seen = 0;
    for (int i = 0; i < n; i++) {
        double x = (seed * (i + 1)) % 13;
        seen++;
        mean += (x - mean) / seen;
    }
    return mean;
}
// @driver
int main(int argc, char **argv) {
    printf("%.4f\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
5 3
10 7
0 2
1 12
