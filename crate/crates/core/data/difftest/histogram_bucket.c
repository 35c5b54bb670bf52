// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int histogram_bucket(int n, int width) {
    int buckets[5] = {0, 0, 0, 0, 0};
    int peak = 0;
    if (width <= 0) {
        return -1;
    }
    for (int i = 0; i < n; i++) {
        int v = (i * 29 + 3) % 50;
        int b = v / width;
        if (b > 4) {
            b = 4;
        }
        buckets[b]++;
    }
    for (int b = 1; b < 5; b++) {
        if (buckets[b] > buckets[peak]) {
            peak = b;
        }
    }
    return peak * 1000 + buckets[peak];
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
20 10
50 7
5 100
10 0
