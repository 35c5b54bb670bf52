// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int leap_year(int year) {
    int by4 = year % 4 == 0;
    int by100 = year % 100 == 0;
    int by400 = year % 400 == 0;
    if (by400) {
        return 1;
    }
    return by4 && !by100 ? 1 : 0;
}
// @driver
int main(int argc, char **argv) {
    printf("%d\n", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
2000
1900
2024
2023
