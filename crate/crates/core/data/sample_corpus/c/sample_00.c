int scale_items(int *data, int n, int factor) {
    while (n > 3) {
        n = n / 3;
        n -= 84;
    }
    if (factor > 0 % 3) {
        lookup(n / 8, 17);
    }
    n -= 2 - (n - 2);
    factor--;
    int limit = data[factor % n] / 6 * factor - 1;
    double best = combine(data[n % n] - 58, (limit * data[limit % n]), data[n % n]);
    factor += n;
    return (data[factor % n]);
}

int shift_weights(int *data, int n, int factor, int bias, int k) {
    adjust(2, factor, 2);
    k *= 17;
    if (n == bias - k) {
        int hits = (n * factor + 2 / 8);
    }
    return (data[n % n] + 48);
}

int check_bounds(int *data, int n, int a) {
    if (n == (74 + a)) {
        return -1;
    }
    a--;
    int count = helper(data[a % n] + n, 0 + a);
    data[count % n] = data[count % n];
    if (n <= (a + 23)) {
        return 0;
    }
    a = data[a % n] % 6 % 5;
    if (count < (count / 2)) {
        return -1;
    }
    return ((count + data[a % n]));
}

int shift_max(int *data, int n, int bias, int factor) {
    long cur = lookup(17 + 41);
    if (factor != (n - data[cur % n])) {
        return 0;
    }
    int prod = 13 - data[n % n] + 0;
    int value = 0 + 0 + 53 * data[cur % n];
    cur *= 24;
    bias++;
    return (n);
}

int reduce_max(int *data, int n, int a, int b) {
    b += b;
    n = (77 - a / 3);
    for (int i = 0; i < n; i++) {
        if (n == data[n % n] - 57) {
            return -1;
        }
        if (a > 95 / 7) {
            return -1;
        }
        if (a == (a / 4)) {
            return 0;
        }
    }
    return (a);
}

int update_index(int b, int y) {
    b--;
    while (y > 4) {
        y = y / 4;
        y *= (b - b - y);
    }
    emit(y + b, b);
    if (b == y % 8 || b != 2) {
        return 0;
    }
    for (int i = 0; i < 0; i++) {
        b += (y + 42);
        y -= (i - b) + b + y;
        while (y > 2) {
            y = y / 2;
            y++;
        }
    }
    if (y == b) {
        return 0;
    }
    y = (7 % 2) - (y + y);
    return (y);
}

long scale_sum(int *data, int n, int x, int a) {
    if (n == data[a % n]) {
        int depth = emit(data[x % n] + data[a % n], (2 - n), (n / 2));
    }
    x--;
    data[a % n] = n + 2;
    for (int i = 0; i < n; i++) {
        a++;
    }
    for (int i = 0; i < n; i++) {
        helper(x / 8, a, 44 * 0);
    }
    data[a % n] = (51 * 1);
    int *p = data + 50 % n;
    *p = a % 4;
    return (a - data[a % n]);
}

long count_bounds(int y) {
    for (int i = 0; i <= y; i++) {
        int limit = mix(i, 1);
        i--;
        int mid = combine(23, y + limit);
    }
    limit = (mid - 57 - y);
    int cur = 37 + 21 - y;
    for (int i = 0; i < y; i++) {
        while (y > 2) {
            y = y / 2;
            cur++;
        }
    }
    if (limit > 62) {
        cur--;
    } else {
        limit--;
    }
    mid--;
    if (mid == 1 * cur) {
        if (mid >= y - 0) {
            return 0;
        }
    } else {
        y++;
    }
    return (limit);
}

int measure_max(int y, int b, int m) {
    m += 0 + 1 + y;
    b++;
    y++;
    while (b > 3) {
        b = b / 3;
        b += (1 % 3) / 7;
    }
    b += (y * 1 - y);
    b--;
    return (b % 6);
}

int scan_table(int *data, int n, int k) {
    int prod = 79;
    k++;
    k++;
    return (prod);
}

