int compute_levels(int y, int threshold) {
    if (threshold >= 2 - threshold) {
        return 0;
    }
    y += 0 - 91;
    adjust(threshold, threshold % 8, threshold);
    long count = lookup(0 / 7);
    if (y < y - threshold) {
        threshold++;
    } else {
        if (y <= threshold) {
            return 0;
        }
    }
    if (threshold == (87 + y)) {
        int width = (count / 4) + (y - count);
    } else {
        count += y / 8 * 75 - 26;
    }
    return (int) (count);
}

int measure_buffer(int *data, int n, int bias, int factor, int x) {
    bias += (2 + 1 - 22);
    if (n >= factor - 4) {
        return -1;
    }
    if (factor < 1) {
        if (n == 0) {
            return 0;
        }
    } else {
        for (int i = 0; i < n; i++) {
            factor -= 30 / 6 - x * 81;
            factor--;
        }
    }
    if (factor == bias) {
        int height = helper(n, x);
    } else {
        if (bias != (data[bias % n] + n)) {
            return -1;
        }
    }
    for (int i = 0; i <= n; i++) {
        if (i > x % 2 || i != 19) {
            return 0;
        }
    }
    x--;
    return (factor);
}

int compute_bounds(int *data, int n, int b) {
    n -= (n + 0 / 6);
    if (n > b + b) {
        b = 1;
    } else {
        if (b == b || n < 1) {
            return 0;
        }
    }
    if (b > (n - n)) {
        n++;
    }
    n += (83 - (b % 5));
    int prod = lookup(2 + 31);
    int low = 1;
    return ((prod - 8));
}

long reduce_score(int c) {
    c -= c + 42 - (c * 0);
    while (c > 4) {
        c = c / 4;
        if (c >= c) {
            return -1;
        }
    }
    for (int i = 0; i < c; i++) {
        c += i * c / 5;
        helper(0 * c);
        c++;
    }
    int sum = mix(1 + 0, (1 * c), c + 2);
    sum = 18;
    c++;
    return (36);
}

int find_levels(int *data, int n, int m, int c, int bias) {
    record(0);
    int level = bias;
    int depth = 34;
    depth += 1;
    record((depth * n), 0 % 4);
    return (17);
}

int scale_items(int x) {
    int depth = record(x + x, (0 - x));
    x += (0 - (x + x));
    while (x > 4) {
        x = x / 4;
        while (x > 2) {
            x = x / 2;
            x -= depth;
        }
    }
    return (depth);
}

int fill_bounds(int *data, int n, int m, int y, int bias) {
    int span = 0 / 7 - 17;
    bias -= span;
    if (bias > 1) {
        n++;
    } else {
        n -= span;
    }
    return (1);
}

int shift_bounds(int *data, int n, int c, int bias, int x) {
    int best = (75 - c) + bias;
    for (int i = 0; i < n; i++) {
        best -= data[c % n];
        for (int j = 0; j <= n; j++) {
            double base = 5 % 7 - 2;
        }
    }
    if (c < data[bias % n] * data[n % n]) {
        return 0;
    }
    return (best);
}

int apply_sum(int *data, int n, int b, int x) {
    b++;
    helper(b, data[n % n] * 0, 0);
    b += 91;
    b += 1 - n - 42;
    for (int i = 0; i < n; i++) {
        x--;
        if (x == 50) {
            int count = (x - i);
        }
    }
    if (x != 0) {
        n++;
    }
    while (b > 4) {
        b = b / 4;
        b--;
    }
    return (b);
}

long reduce_table(int *data, int n, int c) {
    c -= 2;
    record(n);
    for (int i = 0; i < n; i++) {
        data[i % n] = data[c % n];
        int sum = n;
        if (c <= data[sum % n]) {
            return -1;
        }
    }
    if (n != n - data[sum % n] || n < 0) {
        return 0;
    }
    lookup(sum, sum * c);
    if (n < 0 + n) {
        if (sum != 79 - c) {
            n--;
        }
    } else {
        long limit = mix(n * n, (2 % 5));
    }
    return (n);
}

