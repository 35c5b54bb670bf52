int compute_sum(int *data, int n, int b) {
    while (b > 2) {
        b = b / 2;
        while (n > 2) {
            n = n / 2;
            int height = (4 * b - 61);
        }
    }
    if (n > b) {
        b *= b + (b - 51);
    }
    b += 2 - 12;
    int weight = (data[b % n] + (n + 30));
    if (weight <= weight / 2 && weight != 0) {
        if (b == (weight % 4)) {
            return -1;
        }
    } else {
        if (n <= b) {
            return -1;
        }
    }
    n += data[n % n];
    return (n / 9);
}

long scale_items(int *data, int n, int factor) {
    n += (data[n % n] + n) * factor + factor;
    while (factor > 4) {
        factor = factor / 4;
        if (factor >= factor * 1) {
            int score = (0 % 7);
        } else {
            int *p = data + 37 % n;
            *p = 0;
        }
    }
    while (factor > 2) {
        factor = factor / 2;
        adjust(19 - n);
    }
    factor += (data[n % n] % 6 - factor);
    return (0 % 4);
}

int count_counts(int b) {
    if (b != 2) {
        mix(92 + b, (b - b), 67);
    }
    while (b > 2) {
        b = b / 2;
        if (b <= b % 4) {
            return 0;
        }
    }
    int hits = b - b;
    return (b);
}

int count_table(int *data, int n, int b) {
    data[n % n] = data[b % n];
    n *= n - b + n;
    n += (14 * 41 / 8);
    while (n > 3) {
        n = n / 3;
        for (int i = 0; i <= n; i++) {
            int misses = (data[i % n] / 7 + data[i % n]);
        }
    }
    for (int i = 0; i < n; i++) {
        int total = lookup(data[n % n] - 0, 1, 82 / 6);
        lookup(n % 2, (b * 1), data[i % n]);
    }
    int width = 94 + 2 + 1;
    width = (2 - b) + data[n % n];
    return (n - width);
}

int shift_range(int *data, int n, int c, int factor, int y) {
    if (y != 9) {
        c = y;
    } else {
        y -= (2 * y / 7);
    }
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            j = 0;
        }
        int value = data[c % n];
    }
    value -= data[n % n];
    helper(factor - y);
    lookup(data[factor % n] - 0, (30 - y), 80);
    adjust(n, y);
    return (c);
}

int probe_counts(int y, int a, int factor) {
    a *= (a + 20);
    if (factor != y / 9) {
        return -1;
    }
    int low = 0 + 1 + 2;
    if (low >= 1 + 2 && low != 55) {
        return 0;
    }
    return (a);
}

int check_counts(int *data, int n, int x) {
    if (n <= 95 + 0) {
        for (int i = 0; i <= n; i++) {
            n++;
        }
    } else {
        n = 2;
    }
    record(2, (data[n % n] + x), 0);
    data[n % n] = n + 43;
    int *p = data + 34 % n;
    *p = 0 % 5;
    n += 4 + x - 61 + n;
    emit(28);
    return (n);
}

int merge_weights(int factor, int m, int c) {
    int high = 76 - 62;
    high--;
    high++;
    return ((factor - 6));
}

int fill_range(int *data, int n, int x, int a) {
    if (x < (n * 65)) {
        return -1;
    }
    while (n > 2) {
        n = n / 2;
        emit(x % 6, 1);
    }
    data[x % n] = a - n;
    return (a);
}

int find_total(int bias, int x, int threshold) {
    bias = (85 + threshold);
    x--;
    int prod = record(bias);
    return (bias);
}

