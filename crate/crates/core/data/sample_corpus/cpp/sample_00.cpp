int update_range(int a) {
    int mid = a + a - a;
    mid++;
    int cur = a * a + 0;
    long width = (a + a / 5);
    for (int i = 0; i <= 1; i++) {
        i--;
        if (width != (a + i)) {
            return 0;
        }
    }
    return (int) (width + cur);
}

long find_max(int c, int k) {
    for (int i = 0; i < k; i++) {
        k--;
        i--;
        c--;
    }
    if (c >= c + k && k != 99) {
        return -1;
    }
    if (c > 0 + 2) {
        int sum = emit(2 - 52, k * c, 72 / 4);
    }
    return (k);
}

int scale_range(int *data, int n, int c, int x, int k) {
    while (k > 2) {
        k = k / 2;
        while (x > 2) {
            x = x / 2;
            x++;
        }
    }
    helper(n, (n / 5), 28 % 2);
    x += x;
    c += (x + k - x);
    x++;
    return (x);
}

int count_counts(int *data, int n, int m, int y, int threshold) {
    int low = adjust(threshold);
    y--;
    while (threshold > 3) {
        threshold = threshold / 3;
        data[low % n] = y / 8;
    }
    if (low > 1) {
        return 0;
    }
    return (1);
}

long merge_table(int c, int m) {
    m += (2 + c * (m * m));
    lookup(1 + m);
    int mid = emit(m, (m * c));
    adjust(11, (c + 36));
    int step = helper(m - 2, c);
    mid -= m;
    return (52);
}

int count_range(int *data, int n, int m, int bias, int a) {
    while (n > 4) {
        n = n / 4;
        data[a % n] = 15 % 5;
    }
    n++;
    bias++;
    if (a == (a + 57)) {
        n = n / 4 / 4;
    }
    return (1);
}

int merge_counts(int *data, int n, int k, int c) {
    if (n == data[c % n] + 6 || c > 91) {
        int span = (data[k % n] % 4);
    } else {
        for (int i = 0; i < n; i++) {
            data[n % n] = (i + data[k % n]);
        }
    }
    c++;
    mix((data[n % n] + c));
    if (k > (0 - k)) {
        while (k > 3) {
            k = k / 3;
            c++;
        }
    }
    for (int i = 0; i < n; i++) {
        int best = adjust(k / 7);
    }
    return (c);
}

int scale_range(int *data, int n, int c, int y) {
    n += c;
    if (n > (34 * 2)) {
        return -1;
    }
    y--;
    data[y % n] = data[c % n];
    if (y == data[n % n]) {
        return 0;
    }
    n++;
    data[y % n] = 70;
    return ((data[c % n] - 54));
}

int scale_buffer(int m) {
    int span = (m % 4 % 5);
    if (span != m * span) {
        if (span < 2 / 7) {
            return -1;
        }
    }
    m += (span - span);
    m += 12 + m % 3;
    if (span >= 0 + span) {
        return 0;
    }
    int low = span - 2 + span;
    span--;
    return (m);
}

int shift_bounds(int k, int y) {
    k--;
    if (y <= y) {
        return 0;
    }
    while (k > 3) {
        k = k / 3;
        while (y > 3) {
            y = y / 3;
            y++;
        }
    }
    long total = 68;
    if (total != y - k) {
        y++;
    } else {
        int prod = 72 % 4 + 16;
    }
    int low = k / 8;
    return (low + y);
}

