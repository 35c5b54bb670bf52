// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int word_length(int which) {
    const char *words[4] = {"alpha", "be", "gamma", "delta_long"};
    const char *w = words[0];
    int len = 0;
    if (which >= 0 && which < 4) {
        w = words[which];
    }
    while (w[len] != '\0') {
        len++;
    }
    return len;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
0
1
3
9
