// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int char_shift(int shift, int which) {
    char buf[8] = "abcxyz";
    int check = 0;
    int k = shift % 26;
    if (k < 0) {
        k += 26;
    }
    for (int i = 0; buf[i] != '\0'; i++) {
        buf[i] = (char) ('a' + (buf[i] - 'a' + k) % 26);
        check = check * 7 + buf[i];
    }
    return which > 0 ? check % 10007 : buf[0];
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1]), atoi(argv[2])));
    return 0;
}
// @inputs
1 1
3 0
-1 1
26 1
