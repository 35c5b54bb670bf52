// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int fib_iter(int n) {
    int prev = 0;
    int cur = 1;
    if (n <= 0) {
        return 0;
    }
    for (int i = 1; i < n; i++) {
        int next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
0
1
2
10
20
