// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int vowel_count(int which) {
    const char *text = which > 0 ? "the quick brown fox" : "rhythm and blues";
    int vowels = 0;
    for (int i = 0; text[i] != '\0'; i++) {
        char ch = text[i];
        if (ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u') {
            vowels++;
        }
    }
    return vowels;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
1
0
-3
