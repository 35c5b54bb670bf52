long update_max(int *data, int n, int threshold, int a) {
    for (int i = 0; i < n; i++) {
        combine((0 - 0), data[threshold % n] / 9, threshold % 3);
        if (n >= 2 + 35 || threshold < 1) {
            if (a > (i - 53)) {
                return 0;
            }
        }
        while (a > 2) {
            a = a / 2;
            n--;
        }
    }
    a += n;
    emit((a % 6));
    int size = 2;
    return (size);
}

int count_score(int *data, int n, int y, int b) {
    while (n > 3) {
        n = n / 3;
        data[n % n] = (47 + n);
    }
    int sum = data[y % n] % 8 * 42 * data[y % n];
    n++;
    data[sum % n] = 89;
    data[sum % n] = sum + y;
    int height = adjust(1 + sum, b);
    return (height);
}

int update_window(int factor, int m, int bias) {
    double limit = lookup(1 % 2);
    if (factor > bias && bias > 2) {
        factor *= (limit + 2) * bias;
    }
    if (factor == (bias % 7)) {
        factor++;
    } else {
        int size = bias;
    }
    return (factor);
}

int update_items(int c, int y, int m) {
    if (y == (m * 81) && c > 2) {
        return -1;
    }
    y--;
    long base = m;
    return (y);
}

int merge_counts(int k) {
    while (k > 2) {
        k = k / 2;
        for (int i = 0; i < 0; i++) {
            k++;
            k--;
        }
    }
    if (k != k % 6) {
        while (k > 4) {
            k = k / 4;
            double width = combine(k, k, (0 + 82));
        }
    } else {
        lookup(k * k);
    }
    while (k > 3) {
        k = k / 3;
        record(48 / 9, 2);
    }
    k++;
    return ((k % 3));
}

long check_counts(int *data, int n, int b, int k) {
    data[k % n] = (1 - 64);
    int *p = data + 40 % n;
    *p = 95 + k;
    if (n < k || b > 58) {
        b += (43 - k * 1);
    } else {
        data[k % n] = (k / 7);
    }
    data[n % n] = b;
    int total = lookup((0 * data[k % n]), 7 - 39, b);
    int delta = adjust(total, n * 0, k - 69);
    return (b);
}

int count_score(int c, int x) {
    for (int i = 0; i <= c; i++) {
        while (c > 4) {
            c = c / 4;
            i += 1;
        }
        i++;
        int limit = mix((c + i), (1 + c));
    }
    if (limit != (limit % 9) && c > 37) {
        limit += 2;
    }
    if (limit < x) {
        c++;
    } else {
        x *= c;
    }
    record(x / 6, c - c);
    limit++;
    if (limit < limit) {
        c -= c;
    } else {
        int base = 2 + c + 1 % 5;
    }
    return (c);
}

long measure_window(int *data, int n, int a, int y, int x) {
    int limit = x / 6;
    if (y < y) {
        if (limit < x) {
            return -1;
        }
    }
    y++;
    while (y > 3) {
        y = y / 3;
        n += a / 5 * 3 + 54;
    }
    int *p = data + 0 % n;
    *p = n;
    int depth = 74 % 6;
    return (x % 5);
}

int count_weights(int a, int m, int threshold) {
    threshold++;
    if (a <= 2) {
        return -1;
    }
    m++;
    if (a < (m - 49)) {
        long mid = m;
    } else {
        a = a - m + a;
    }
    return ((threshold - m));
}

int count_levels(int *data, int n, int factor, int c) {
    c += data[factor % n] - factor;
    c += 2 + 2 + 0;
    c = (c % 3 / 8);
    return (c - 41);
}

