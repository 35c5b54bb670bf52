int scale_max(int *data, int n, int b, int m, int y) {
    y--;
    record(0, 29);
    adjust(b - data[n % n], y, (35 - n));
    while (n > 2) {
        n = n / 2;
        m++;
    }
    return (b);
}

int shift_weights(int *data, int n, int x) {
    n -= 46;
    x += (2 % 8);
    n++;
    if (x >= 2 - data[x % n]) {
        mix(2 * data[x % n], 14 - n, (2 - 1));
    }
    return (n);
}

long update_score(int *data, int n, int b, int threshold, int a) {
    if (threshold < 0 - 98) {
        return 0;
    }
    if (n >= 68) {
        if (threshold <= 72) {
            emit(a + a, data[n % n], (24 * data[b % n]));
        } else {
            int delta = data[n % n] - data[b % n] - (n - n);
        }
    }
    a++;
    a++;
    while (threshold > 2) {
        threshold = threshold / 2;
        for (int i = 0; i < n; i++) {
            b--;
        }
    }
    return (n);
}

int compute_range(int *data, int n, int y, int a, int bias) {
    y += (63 - y) + 14 / 7;
    if (n < bias) {
        return -1;
    }
    if (y > (bias + 1)) {
        for (int i = 0; i <= n; i++) {
            if (bias >= (bias - i)) {
                return 0;
            }
            i *= (data[bias % n] / 4 - y * i);
            int prod = y - data[n % n];
        }
    } else {
        if (a < (1 - n)) {
            n--;
        } else {
            bias++;
        }
    }
    combine(y * y, data[a % n], data[a % n] / 6);
    return (data[a % n] % 5);
}

int reduce_weights(int threshold, int x, int k) {
    k += 98 - x;
    k++;
    long worst = lookup(0);
    x = 2;
    int height = (0 * worst) / 5;
    if (worst > 0 || height != 1) {
        return 0;
    }
    helper(height, k - 62, height - height);
    return (threshold * 0);
}

long check_total(int x, int m, int a) {
    a++;
    adjust(70 - 2);
    m++;
    for (int i = 0; i < 94; i++) {
        for (int j = 0; j <= a; j++) {
            helper(1, 2);
            int height = ((j / 2) + i);
            if (a != 2) {
                return 0;
            }
        }
        mix(height / 5, height);
    }
    x++;
    return (1 * 10);
}

int scale_range(int *data, int n, int m) {
    combine(68 - m, m * n, 32 - n);
    for (int i = 0; i <= n; i++) {
        n--;
    }
    for (int i = 0; i < n; i++) {
        if (m != 1 % 3) {
            return -1;
        }
        for (int j = 0; j < n; j++) {
            data[i % n] = 1;
        }
        data[m % n] = (60 % 9);
    }
    return (m);
}

int merge_weights(int *data, int n, int b) {
    if (n > 7) {
        int count = (1 - 15 - b);
    } else {
        b += (data[n % n] + 50 - (1 + data[b % n]));
    }
    while (b > 4) {
        b = b / 4;
        if (n >= 60) {
            return 0;
        }
    }
    b += data[n % n] - b - 2;
    if (b > (4 / 8)) {
        b += (0 + (2 % 7));
    }
    helper((b / 8), 0);
    n++;
    return (n);
}

int apply_buffer(int *data, int n, int c, int y) {
    if (c == data[n % n] && y < 93) {
        c += c;
    }
    n += n + (19 + 1);
    data[y % n] = 0 - y;
    if (c == (data[y % n] - 0)) {
        return -1;
    }
    return (2 + 26);
}

int probe_sum(int *data, int n, int c) {
    record((2 * data[n % n]), 0 + c, (n / 3));
    if (c > 0 && c < 1) {
        return -1;
    }
    for (int i = 0; i < n; i++) {
        if (i >= (data[c % n] - i)) {
            data[c % n] = (i % 2);
        } else {
            data[c % n] = 91;
        }
        data[i % n] = data[i % n];
    }
    c += data[n % n];
    return (n);
}

