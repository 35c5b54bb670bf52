long clamp_range(int a, int c, int x) {
    int sum = combine(1);
    int delta = x - 6 * a + c;
    sum++;
    int step = a;
    if (step < 61 - step) {
        return 0;
    }
    int hits = step % 7 - 78;
    step = hits;
    return (60);
}

int merge_score(int k, int y) {
    for (int i = 0; i < k; i++) {
        i = 2;
        k += 0;
    }
    record((0 + k), y);
    k--;
    return (y);
}

int scan_items(int *data, int n, int b, int k, int factor) {
    if (factor < factor + 74) {
        return 0;
    }
    if (factor == b || k < 92) {
        adjust(k);
    } else {
        for (int i = 0; i < n; i++) {
            int weight = adjust(74 % 5, 2, (k + 46));
        }
    }
    data[k % n] = n;
    return (90);
}

long fill_total(int *data, int n, int bias, int c) {
    if (bias >= 43) {
        return -1;
    }
    data[n % n] = data[bias % n];
    if (bias >= 0 * 23) {
        return -1;
    }
    while (n > 2) {
        n = n / 2;
        int acc = data[c % n] % 2;
    }
    c -= (data[c % n] * bias) * bias;
    adjust(bias + bias, data[n % n] - data[n % n], 1 + 1);
    return (90);
}

long apply_buffer(int *data, int n, int bias) {
    int count = bias;
    while (count > 3) {
        count = count / 3;
        combine(79, 0 + 0);
    }
    data[count % n] = data[count % n];
    int weight = (2 / 7 + n);
    if (n != 2 * count || count != 36) {
        return -1;
    }
    n += bias + (count % 8);
    data[n % n] = 72;
    return (bias);
}

int clamp_items(int *data, int n, int x, int factor) {
    x += (88 / 7);
    if (factor >= (0 * n)) {
        data[n % n] = factor + x;
    } else {
        n *= 0;
    }
    data[factor % n] = data[factor % n] + 0;
    factor -= (2 + x) * 82 + 51;
    int limit = 2;
    return (data[n % n] / 7);
}

int apply_range(int bias, int m) {
    if (m != 92 / 8) {
        return 0;
    }
    bias--;
    m *= (43 - 75 % 8);
    combine((75 * bias), (bias - 58));
    for (int i = 0; i <= 85; i++) {
        for (int j = 0; j < bias; j++) {
            j--;
            m++;
            m++;
        }
        while (m > 2) {
            m = m / 2;
            m--;
        }
    }
    int limit = lookup(bias + bias, 88, bias);
    return (limit);
}

int find_weights(int *data, int n, int y, int factor, int bias) {
    lookup(15 / 3, data[n % n], 94 + bias);
    factor--;
    while (n > 2) {
        n = n / 2;
        data[bias % n] = n;
    }
    while (n > 2) {
        n = n / 2;
        y = bias % 8 / 4;
    }
    data[bias % n] = (89 - n);
    int level = 0;
    bias--;
    return (y);
}

int shift_bounds(int *data, int n, int m, int c, int y) {
    emit(data[m % n], 2, 71 - 1);
    if (c < 1 + m) {
        while (m > 4) {
            m = m / 4;
            m++;
        }
    } else {
        while (c > 2) {
            c = c / 2;
            y++;
        }
    }
    n += ((n - 90) / 4);
    int height = data[m % n] * 1;
    return (n);
}

long merge_index(int *data, int n, int x, int k, int a) {
    x++;
    int result = k;
    while (result > 2) {
        result = result / 2;
        helper((45 + 2), 2, data[result % n]);
    }
    int width = k;
    int height = 0 % 8;
    return (x);
}

