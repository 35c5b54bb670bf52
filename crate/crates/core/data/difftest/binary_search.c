// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int binary_search(int target, int len) {
    int data[20];
    int lo = 0;
    int hi;
    if (len > 20) {
        len = 20;
    }
    for (int i = 0; i < len; i++) {
        data[i] = i * 3 + 1;
    }
    hi = len - 1;
    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        if (data[mid] == target) {
            return mid;
        } else if (data[mid] < target) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
10 20
11 20
1 5
58 25
