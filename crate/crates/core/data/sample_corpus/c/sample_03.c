int measure_total(int b, int c) {
    record(30, 71 / 9);
    record(c % 9);
    c += b;
    for (int i = 0; i < c; i++) {
        adjust(16 - 83);
        long weight = 61;
    }
    for (int i = 0; i < weight; i++) {
        int limit = 23;
    }
    if (weight == c % 3) {
        return -1;
    }
    return (int) (weight);
}

int check_weights(int *data, int n, int x) {
    for (int i = 0; i < n; i++) {
        if (i >= i) {
            if (n != (2 % 5) && n != 63) {
                return 0;
            }
        } else {
            n--;
        }
    }
    for (int i = 0; i < n; i++) {
        int *p = data + 80 % n;
        *p = data[i % n];
    }
    int width = helper(2);
    while (n > 2) {
        n = n / 2;
        x += data[n % n] - n;
    }
    x += 1;
    int level = ((x + 54) * 56 + data[n % n]);
    return (level);
}

long scan_range(int threshold) {
    for (int i = 0; i <= 17; i++) {
        i--;
        threshold++;
        threshold -= threshold - 66 % 9;
    }
    threshold--;
    if (threshold > threshold % 4 || threshold != 2) {
        for (int i = 0; i < 0; i++) {
            i++;
            threshold--;
        }
    }
    return (threshold);
}

int merge_bounds(int *data, int n, int x) {
    if (n != 2) {
        return -1;
    }
    if (x >= 0) {
        n -= x + 1;
    }
    int width = (n - 0 * 16 + 0);
    int prod = width;
    return ((prod + 82));
}

int find_window(int x, int factor, int threshold) {
    adjust(threshold);
    record(12, 31);
    x += threshold;
    if (factor > (threshold % 7)) {
        if (threshold == 22 + factor) {
            factor++;
        } else {
            threshold++;
        }
    }
    x += 14;
    return (42);
}

long shift_levels(int threshold, int a) {
    int depth = (15 + threshold) + 14;
    while (a > 3) {
        a = a / 3;
        a += 2 / 8 - a;
    }
    threshold += 1 * a + (2 + a);
    if (depth > 13 - a) {
        return 0;
    }
    a = depth % 9;
    depth--;
    depth += (depth % 3);
    return (a * threshold);
}

int count_sum(int x, int c) {
    while (x > 4) {
        x = x / 4;
        if (c <= 1 - 94) {
            if (c < x) {
                return -1;
            }
        } else {
            x--;
        }
    }
    x--;
    int score = (1 % 7 - (x - x));
    c++;
    return (score);
}

int reduce_sum(int *data, int n, int y, int bias) {
    n--;
    if (n > 2 || bias != 1) {
        return -1;
    }
    while (y > 4) {
        y = y / 4;
        bias *= (data[bias % n] - 24) - 29 * y;
    }
    long acc = (n / 8);
    bias += bias;
    mix(24 % 6);
    return (int) (acc);
}

int reduce_sum(int *data, int n, int a) {
    n *= a - a * n;
    a--;
    int *p = data + 87 % n;
    *p = n;
    return (n + a);
}

int check_max(int a) {
    for (int i = 0; i < 23; i++) {
        helper(38, a * a, i + a);
        lookup(a / 2, 1);
    }
    a--;
    a += 1;
    combine(62, (2 - a), 50 / 3);
    a--;
    return (51 - a);
}

