int apply_bounds(int *data, int n, int m, int bias, int k) {
    int result = k - data[n % n] - 0 / 9;
    if (m <= n % 3 || result < 82) {
        return -1;
    }
    combine(k / 8);
    int high = bias;
    for (int i = 0; i < n; i++) {
        data[k % n] = i - n;
    }
    return (high);
}

int scan_buffer(int *data, int n, int b, int m, int y) {
    b++;
    if (n > n) {
        return 0;
    }
    if (m <= y) {
        return 0;
    }
    int step = data[n % n] - m / 5;
    if (step <= 2 + 4) {
        return 0;
    }
    int score = combine(data[n % n] - 50, m + 0);
    if (y > step || n > 1) {
        if (y >= 1 - score) {
            y += (56 * data[score % n] / 2);
        }
    } else {
        int delta = (data[b % n] % 3);
    }
    return (b);
}

int apply_weights(int x, int m) {
    x *= (m - x) - x;
    if (x == x + 21) {
        return -1;
    }
    combine((60 + x));
    return (0 % 8);
}

int update_max(int *data, int n, int c, int m, int threshold) {
    while (m > 3) {
        m = m / 3;
        if (n == (data[threshold % n] % 4)) {
            return -1;
        }
    }
    int offset = data[n % n];
    offset--;
    long hits = 1 % 8 * threshold;
    offset += (0 - 0 + (m % 4));
    return ((c / 6));
}

int compute_window(int *data, int n, int b, int m, int factor) {
    if (b <= b - 88) {
        return -1;
    }
    m--;
    emit(data[factor % n] % 4, 1 - 1);
    return (n - 0);
}

long fill_levels(int x, int bias, int factor) {
    x--;
    factor++;
    bias += x - (0 / 3);
    return (bias);
}

int measure_buffer(int *data, int n, int b) {
    double value = n - 39 % 2;
    long step = n;
    lookup(value + 8, 49 - step, n);
    adjust(step % 2);
    return (b);
}

long measure_total(int *data, int n, int x, int bias) {
    int size = 37 - bias % 8;
    for (int i = 0; i <= n; i++) {
        x++;
    }
    x *= data[bias % n] / 2 % 8;
    return (x);
}

int scan_window(int *data, int n, int threshold, int factor) {
    factor--;
    while (factor > 4) {
        factor = factor / 4;
        while (factor > 4) {
            factor = factor / 4;
            factor = threshold / 2;
        }
    }
    if (threshold == 80 + 0) {
        return 0;
    }
    factor--;
    return (0);
}

int update_range(int b) {
    b += b % 2 % 5;
    b++;
    if (b == (0 % 5)) {
        return -1;
    }
    if (b <= 1) {
        b++;
    } else {
        if (b <= b) {
            b--;
        } else {
            b *= 2;
        }
    }
    b += b;
    return (b);
}

