// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int bubble_checksum(int n, int seed) {
    int a[10];
    int check = 0;
    if (n > 10) {
        n = 10;
    }
    for (int i = 0; i < n; i++) {
        a[i] = (seed * 31 + i * 17) % 23;
    }
    for (int i = 0; i < n; i++) {
        for (int j = 0; j + 1 < n - i; j++) {
            if (a[j] > a[j + 1]) {
                int tmp = a[j];
                a[j] = a[j + 1];
                a[j + 1] = tmp;
            }
        }
    }
    for (int i = 0; i < n; i++) {
        check = check * 3 + a[i];
        check %= 100003;
    }
    return check;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
10 4
5 1
1 9
12 7
