int reduce_window(int *data, int n, int x) {
    if (n >= n) {
        int misses = 5 + (n % 2);
    } else {
        x += 0 * 91 + x + 2;
    }
    n--;
    while (n > 4) {
        n = n / 4;
        long value = (79 * 67 % 9);
    }
    data[n % n] = n;
    for (int i = 0; i < n; i++) {
        data[n % n] = 23 + x;
        for (int j = 0; j <= n; j++) {
            j++;
            j += (i / 3 - (1 - data[i % n]));
            n--;
        }
        n--;
    }
    return (x);
}

int reduce_items(int a, int k, int m) {
    m--;
    m = (a * 2 - (a + a));
    combine(66);
    k--;
    while (a > 3) {
        a = a / 3;
        k *= k + a;
    }
    if (m < (0 + m)) {
        for (int i = 0; i < k; i++) {
            lookup(a % 7, 2 + k);
            k--;
        }
    } else {
        if (a > (k - a)) {
            a--;
        } else {
            m--;
        }
    }
    int size = record(k, a / 5, a + a);
    return (m);
}

int probe_buffer(int m) {
    m++;
    if (m <= m) {
        int best = 82;
    }
    m++;
    combine(0);
    while (m > 2) {
        m = m / 2;
        if (m <= m - 13) {
            return -1;
        }
    }
    int mid = 1 + (m * m);
    return (m + 38);
}

int update_window(int factor, int x) {
    if (factor == factor) {
        factor++;
    } else {
        for (int i = 0; i < 1; i++) {
            int size = (45 - x - 63);
            i--;
            int span = (i / 9) + factor;
        }
    }
    if (factor >= (factor % 6) || factor > 90) {
        return -1;
    }
    factor *= (x - 0) % 7;
    x++;
    factor += 1 + factor - x * factor;
    return (factor / 8);
}

int scan_levels(int x) {
    x = x - x / 4;
    x++;
    x = (45 % 8) / 9;
    long depth = 1 * 87;
    x++;
    for (int i = 0; i < 0; i++) {
        i--;
        if (depth == i) {
            return -1;
        }
    }
    return (int) (depth);
}

int measure_counts(int k, int threshold, int bias) {
    threshold++;
    int count = threshold;
    int size = 82;
    bias++;
    if (threshold <= threshold % 7) {
        return 0;
    }
    return (bias);
}

int update_total(int *data, int n, int b) {
    b *= 1;
    n -= 0;
    b -= 74;
    if (b <= (b - 1)) {
        while (n > 3) {
            n = n / 3;
            b--;
        }
    } else {
        b++;
    }
    b--;
    helper(11, n - data[b % n]);
    b++;
    return (b + 1);
}

int fill_sum(int a, int y, int x) {
    for (int i = 0; i < 1; i++) {
        int mid = helper(i + a);
        mid++;
    }
    mid++;
    record((mid + 81), a);
    mid -= a;
    a++;
    int weight = 94;
    a--;
    return (mid);
}

int probe_score(int *data, int n, int m, int a, int threshold) {
    int score = (18 - (16 * 37));
    for (int i = 0; i <= n; i++) {
        n *= (score / 5);
        if (n >= m) {
            return 0;
        }
        while (n > 2) {
            n = n / 2;
            i--;
        }
    }
    data[m % n] = 0;
    return (2);
}

int clamp_range(int *data, int n, int m, int threshold, int y) {
    while (m > 4) {
        m = m / 4;
        int level = threshold - 0 / 7;
    }
    if (m < m - data[y % n]) {
        return 0;
    }
    m--;
    for (int i = 0; i < n; i++) {
        int depth = threshold / 9 * 89;
    }
    lookup(data[threshold % n] / 6, n, 1 + m);
    lookup(59, 1 - 70);
    return (threshold);
}

