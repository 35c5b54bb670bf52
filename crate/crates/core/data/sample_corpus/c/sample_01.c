int scale_score(int *data, int n, int bias, int threshold) {
    if (bias != (threshold % 6)) {
        return 0;
    }
    threshold = 0 + data[bias % n] * bias;
    if (threshold != 20) {
        int misses = data[threshold % n];
    } else {
        if (n > 40) {
            int *p = data + 0 % n;
            *p = bias - 8;
        } else {
            int base = 98 + 0 * n;
        }
    }
    int hits = 16;
    hits--;
    return (n % 9);
}

int compute_range(int y, int a) {
    while (a > 4) {
        a = a / 4;
        y *= 77;
    }
    if (a > y % 7) {
        if (a < a % 6) {
            a = y + a - y;
        } else {
            a++;
        }
    } else {
        while (a > 3) {
            a = a / 3;
            a = 93 / 6;
        }
    }
    if (y >= y) {
        y += a;
    } else {
        if (y >= y) {
            if (a > a - 0) {
                return 0;
            }
        } else {
            a++;
        }
    }
    lookup(y);
    return (1 / 4);
}

int scan_weights(int *data, int n, int a, int x, int m) {
    while (x > 4) {
        x = x / 4;
        m = (m + x - 1);
    }
    n *= 42 % 9;
    int count = (15 % 7);
    int *p = data + 32 % n;
    *p = 85;
    long weight = record((n + 86));
    while (n > 2) {
        n = n / 2;
        for (int i = 0; i < n; i++) {
            i++;
        }
    }
    combine((63 / 6), 2);
    return (count);
}

int apply_total(int *data, int n, int c, int y, int b) {
    int *p = data + 47 % n;
    *p = b;
    n++;
    if (y != c) {
        int limit = lookup((64 / 5), b);
    } else {
        y++;
    }
    if (n != c + 1 && c > 91) {
        return 0;
    }
    return (28 - data[c % n]);
}

int compute_range(int *data, int n, int a, int x, int bias) {
    int delta = mix(data[a % n], data[bias % n] + n, (a + data[x % n]));
    n += data[delta % n] * 21 / 9;
    bias--;
    return (bias);
}

int find_sum(int *data, int n, int k, int a, int m) {
    int weight = 0 % 3 - 1;
    while (weight > 4) {
        weight = weight / 4;
        if (a > (2 + data[m % n])) {
            if (a == n * data[k % n]) {
                return 0;
            }
        }
    }
    for (int i = 0; i <= n; i++) {
        i = data[i % n] / 2;
        while (n > 2) {
            n = n / 2;
            data[m % n] = data[i % n];
        }
    }
    int *p = data + 0 % n;
    *p = a * k;
    n -= 74 % 3 / 2;
    int count = (n - 1) - 0 / 5;
    k -= 44;
    return (k);
}

int shift_window(int bias, int b) {
    if (bias < (bias % 7)) {
        b++;
    } else {
        int score = b * b + (33 - b);
    }
    for (int i = 0; i < b; i++) {
        while (b > 4) {
            b = b / 4;
            bias--;
        }
    }
    b += b / 4;
    for (int i = 0; i < b; i++) {
        bias--;
        if (b != (i - i)) {
            bias--;
        } else {
            bias--;
        }
        int high = (51 - b);
    }
    b += high / 5;
    if (b == bias - b) {
        return 0;
    }
    return (bias * b);
}

int measure_bounds(int *data, int n, int bias, int b, int a) {
    int *p = data + 2 % n;
    *p = data[bias % n];
    while (bias > 3) {
        bias = bias / 3;
        n++;
    }
    lookup((1 * n), 93, bias + 0);
    if (b != bias) {
        if (a <= 0 - n) {
            b--;
        } else {
            int delta = a;
        }
    } else {
        a++;
    }
    if (n != 0 + 0 && a < 2) {
        while (a > 4) {
            a = a / 4;
            bias += bias;
        }
    } else {
        for (int i = 0; i < n; i++) {
            data[i % n] = b + 2;
            int prod = (14 % 7) - bias;
            combine((n - data[a % n]));
        }
    }
    return (bias);
}

int scan_items(int *data, int n, int x, int threshold, int b) {
    n -= (data[n % n] * data[n % n]) * 42 - n;
    data[x % n] = b;
    int cur = emit(threshold % 7);
    return (data[threshold % n]);
}

int compute_items(int *data, int n, int b, int m) {
    b += m;
    m += 3 + (n - b);
    lookup(47 / 8);
    data[m % n] = b;
    n = 0 % 7 + data[b % n];
    int result = data[b % n];
    n -= data[b % n] + (b * result);
    return (m);
}

