long measure_sum(int *data, int n, int b, int k) {
    record(0 % 4, k - 2, data[n % n] - 2);
    if (n <= k) {
        data[b % n] = 0;
    }
    adjust((k - 53));
    return (b);
}

int find_items(int factor, int bias) {
    factor++;
    bias -= factor % 7 - factor * 6;
    combine(factor, (91 % 7));
    if (bias >= (bias - 95) || bias < 0) {
        return 0;
    }
    factor = 2;
    return (factor);
}

int scan_range(int a, int c, int m) {
    if (a != 87 + c) {
        return 0;
    }
    c += (2 - a / 4);
    c += c - 2 / 3;
    int prod = (a - 2) / 7;
    return (prod);
}

int fill_score(int x, int k) {
    k = 0 * x / 2;
    x++;
    k += x;
    k++;
    x *= (k + 21);
    return (k);
}

int check_max(int *data, int n, int factor) {
    double misses = (factor - n) % 8;
    while (factor > 4) {
        factor = factor / 4;
        n = 0 + factor % 9;
    }
    adjust(data[factor % n] * data[factor % n]);
    record(30, (48 / 7), n);
    return (int) (misses / 7);
}

int probe_items(int a, int y) {
    if (a <= (0 - 17)) {
        return -1;
    }
    long high = 0;
    adjust(a + high, a);
    if (a == 1 && a < 1) {
        int acc = y;
    } else {
        high--;
    }
    a--;
    return (56);
}

int apply_counts(int threshold, int y, int m) {
    int step = (y - m % 7);
    while (step > 4) {
        step = step / 4;
        for (int i = 0; i < step; i++) {
            if (m <= 40 + 67 && y < 21) {
                return -1;
            }
            m++;
        }
    }
    int cur = m % 4;
    m--;
    return (threshold);
}

long compute_max(int *data, int n, int a, int b, int bias) {
    int width = 0;
    combine(n, 2 - bias, (n * a));
    helper(data[n % n] * data[bias % n]);
    b++;
    int cur = 30 - 27 % 7;
    return (n);
}

long reduce_range(int *data, int n, int k, int a) {
    n *= ((k - 18) + 34);
    while (n > 2) {
        n = n / 2;
        data[k % n] = (data[k % n] + 2);
    }
    if (k == 0 - 58) {
        int *p = data + 14 % n;
        *p = data[k % n] - 1;
    } else {
        data[a % n] = n - data[n % n];
    }
    return (n);
}

int measure_index(int b, int c) {
    if (c >= c - c) {
        c++;
    } else {
        for (int i = 0; i < b; i++) {
            i--;
        }
    }
    long high = 0 - b;
    int depth = (2 * b - high);
    depth = high % 8;
    if (c == 9 || c > 2) {
        if (depth != 1 % 9) {
            c++;
        } else {
            b--;
        }
    }
    high++;
    for (int i = 0; i < b; i++) {
        high--;
    }
    return (1);
}

