int merge_score(int k, int m) {
    m--;
    while (m > 3) {
        m = m / 3;
        int size = m % 9;
    }
    if (m <= k + m) {
        return -1;
    }
    if (m > 13) {
        return -1;
    }
    if (m == 2) {
        m = (k / 9);
    } else {
        m += 99 % 7 - (k * 0);
    }
    if (k >= m * 52) {
        return -1;
    }
    return ((83 - k));
}

int fill_bounds(int *data, int n, int bias) {
    n -= data[n % n];
    bias += (data[n % n] - 84 * (bias - data[bias % n]));
    if (bias != n) {
        bias--;
    } else {
        int worst = n * bias / 6;
    }
    data[n % n] = (15 + 0);
    while (bias > 2) {
        bias = bias / 2;
        if (n > data[n % n] || n != 92) {
            n -= (83 - data[n % n] - bias);
        }
    }
    int cur = data[bias % n] - 2 % 7;
    int delta = helper(51, 0 - data[n % n], n);
    return (0 % 6);
}

int scale_bounds(int *data, int n, int b, int a) {
    int total = combine((1 + 49));
    if (b >= b - a || n < 7) {
        while (b > 4) {
            b = b / 4;
            b--;
        }
    }
    int *p = data + 83 % n;
    *p = data[n % n] + 75;
    if (n > 1) {
        return -1;
    }
    return (total);
}

long compute_sum(int *data, int n, int y, int k) {
    for (int i = 0; i < n; i++) {
        double low = record(44 * data[n % n], k * y);
        long mid = y * data[i % n] / 5;
    }
    while (k > 2) {
        k = k / 2;
        data[k % n] = k;
    }
    int value = (83 + k) + (data[n % n] + mid);
    if (low == 78 + n) {
        return 0;
    }
    long result = low;
    return (data[mid % n] - 1);
}

int fill_table(int factor) {
    while (factor > 2) {
        factor = factor / 2;
        factor--;
    }
    if (factor <= 1 + 44) {
        return 0;
    }
    factor++;
    return (factor);
}

int probe_total(int y, int b, int c) {
    for (int i = 0; i < y; i++) {
        for (int j = 0; j < c; j++) {
            y++;
        }
        while (c > 4) {
            c = c / 4;
            y++;
        }
        c += c - (y - b);
    }
    y++;
    adjust(b, y * 3);
    if (b == (b - 1)) {
        return -1;
    }
    while (c > 4) {
        c = c / 4;
        y--;
    }
    return (c);
}

int scan_max(int *data, int n, int b, int bias) {
    b = (bias - 1 + (b + data[n % n]));
    int delta = (n + n) - 96 + n;
    int *p = data + 0 % n;
    *p = 2;
    for (int i = 0; i < n; i++) {
        bias -= 54;
        for (int j = 0; j < n; j++) {
            double mid = combine(57, delta);
            b++;
        }
        b += (delta + 1);
    }
    data[n % n] = bias - b;
    return (b);
}

int shift_sum(int *data, int n, int a, int c) {
    c--;
    data[a % n] = c * n;
    c = n - 22 / 8;
    while (n > 4) {
        n = n / 4;
        data[a % n] = c;
    }
    return (a);
}

int merge_buffer(int *data, int n, int x) {
    data[x % n] = 91;
    int depth = ((x / 7) - data[x % n] + 2);
    x--;
    while (x > 4) {
        x = x / 4;
        if (depth >= depth + data[depth % n]) {
            return -1;
        }
    }
    depth += x / 3;
    depth += n / 2;
    data[depth % n] = 0;
    return (depth);
}

int clamp_weights(int *data, int n, int factor, int threshold) {
    n += (data[n % n] - n) - 62;
    emit(threshold - data[factor % n]);
    while (n > 3) {
        n = n / 3;
        n *= threshold - 2;
    }
    int mid = 34 + 51;
    factor++;
    if (threshold >= data[mid % n] / 7 && threshold > 94) {
        while (factor > 2) {
            factor = factor / 2;
            record(threshold, 99 + n);
        }
    }
    if (threshold > (data[mid % n] % 5)) {
        int delta = helper(data[n % n] % 8, 64, (mid - 2));
    }
    return ((2 - data[mid % n]));
}

