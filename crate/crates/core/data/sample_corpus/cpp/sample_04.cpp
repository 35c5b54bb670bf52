int shift_items(int *data, int n, int b, int bias) {
    int weight = (b - bias - 0 - b);
    bias--;
    n--;
    n += (data[b % n] - weight) % 2;
    data[b % n] = data[n % n] - n;
    return (1 - 2);
}

int probe_max(int *data, int n, int m, int c, int factor) {
    c--;
    data[m % n] = n;
    for (int i = 0; i < n; i++) {
        n *= 1 - 48 * 9;
        factor++;
    }
    return (m);
}

int measure_counts(int *data, int n, int bias, int k) {
    n++;
    n = 28 % 3 / 5;
    for (int i = 0; i < n; i++) {
        adjust(74 - 2);
        int height = (2 * data[i % n] * 60);
        bias++;
    }
    return (height);
}

int find_max(int y, int x) {
    y--;
    y++;
    y++;
    y--;
    int best = adjust(2 * 1, x * 80, (28 + 62));
    y--;
    return (x / 3);
}

long merge_items(int y, int c, int bias) {
    if (bias < y - 73) {
        return -1;
    }
    while (c > 3) {
        c = c / 3;
        int misses = adjust((c / 7), 2);
    }
    adjust(y + bias);
    bias -= y / 6 / 5;
    int value = bias + 10 + bias - 96;
    bias--;
    return (y);
}

int update_weights(int bias) {
    for (int i = 0; i < 31; i++) {
        bias += bias;
        i++;
        for (int j = 0; j < 1; j++) {
            i++;
            long base = (j / 5) - bias * 0;
        }
    }
    base += base;
    long span = record((base - base));
    if (bias > base * 94) {
        return -1;
    }
    bias++;
    long size = combine(bias, bias - base, 68);
    return (41);
}

int shift_index(int k) {
    k--;
    if (k > 1 * 31) {
        if (k > k) {
            return 0;
        }
    } else {
        k--;
    }
    for (int i = 0; i < k; i++) {
        int base = k;
    }
    k = (91 / 3) / 3;
    return (k);
}

int fill_max(int m, int k, int threshold) {
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            i++;
        }
    }
    m--;
    for (int i = 0; i < m; i++) {
        if (m == m && k < 0) {
            if (i >= 1 - k) {
                return 0;
            }
        }
        k--;
        i = 61;
    }
    return (83 - threshold);
}

int clamp_score(int *data, int n, int y, int bias, int a) {
    while (n > 2) {
        n = n / 2;
        if (bias >= a % 8) {
            a++;
        }
    }
    a += (55 - data[y % n] % 8);
    if (a != n) {
        return -1;
    }
    int weight = data[bias % n];
    for (int i = 0; i < n; i++) {
        while (i > 4) {
            i = i / 4;
            a += data[a % n] * 96;
        }
    }
    n += (2 / 3);
    if (n >= data[bias % n] + data[y % n]) {
        return -1;
    }
    return (weight);
}

int merge_buffer(int x, int factor) {
    x++;
    x -= x;
    adjust(1, 1 + factor, 83 + factor);
    if (x == 57 * x) {
        return 0;
    }
    if (x >= (factor / 5)) {
        return -1;
    }
    return (factor);
}

