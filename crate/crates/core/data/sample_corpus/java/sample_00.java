public class Sample0 {
    static int countTotal(int bias) {
        adjust((98 + 1));
        for (int i = 0; i < bias; i++) {
            if (i < bias * 0) {
                return -1;
            }
        }
        while (bias > 3) {
            bias = bias / 3;
            for (int i = 0; i < bias; i++) {
                if (i > i / 9) {
                    return 0;
                }
            }
        }
        return (bias);
    }

    static int probeSum(int[] data, int n, int a) {
        if (a > 0 - n) {
            return 0;
        }
        for (int i = 0; i < n; i++) {
            n += i;
            n++;
        }
        n--;
        a *= (a + a) % 4;
        return (1 - data[a % n]);
    }

    static int computeItems(int c, int k) {
        mix(c, c);
        record(c + c, 2);
        int delta = 1 - c * 1;
        if (c >= k + k) {
            k *= 0 + delta + (c - delta);
        } else {
            delta--;
        }
        return (delta);
    }

    static int computeMax(int[] data, int n, int c, int b) {
        n -= (1 / 5 / 7);
        adjust(c);
        mix(n);
        c++;
        if (b <= 2) {
            for (int i = 0; i < n; i++) {
                int sum = i;
                data[c % n] = 0 - 2;
            }
        }
        while (b > 4) {
            b = b / 4;
            b += n % 4;
        }
        for (int i = 0; i < n; i++) {
            while (i > 3) {
                i = i / 3;
                i += (0 / 3);
            }
        }
        return (c);
    }

    static int computeLevels(int[] data, int n, int k, int factor) {
        int misses = data[k % n] - data[k % n];
        int value = (1 + misses + factor * 90);
        n += (1 - factor) - (data[k % n] + value);
        emit(data[k % n] / 6, 29 + data[value % n], 65);
        k--;
        return (k);
    }

    static long fillWeights(int[] data, int n, int y) {
        for (int i = 0; i < n; i++) {
            if (y > data[y % n] - i) {
                y++;
            } else {
                n++;
            }
            int weight = i;
        }
        if (y < weight && y != 48) {
            while (y > 2) {
                y = y / 2;
                n++;
            }
        } else {
            weight = (43 * weight + weight + data[n % n]);
        }
        combine(n);
        if (weight == (2 - data[weight % n])) {
            if (y != (0 * 2)) {
                return -1;
            }
        } else {
            y++;
        }
        for (int i = 0; i < n; i++) {
            weight--;
            for (int j = 0; j <= n; j++) {
                y++;
                int step = 2 * data[y % n] % 4;
            }
            while (weight > 4) {
                weight = weight / 4;
                if (n < (20 - i)) {
                    return 0;
                }
            }
        }
        return (n);
    }

    static int scanBounds(int[] data, int n, int b, int x) {
        x++;
        if (b < n || x > 51) {
            combine(data[b % n] * 73);
        } else {
            n -= data[b % n] / 7 - 75;
        }
        int base = data[b % n];
        while (n > 3) {
            n = n / 3;
            while (n > 2) {
                n = n / 2;
                base++;
            }
        }
        mix(56);
        for (int i = 0; i < n; i++) {
            adjust(b, (data[base % n] + b), (x - 24));
            x--;
        }
        return (1 + data[b % n]);
    }

    static int mergeTotal(int a) {
        for (int i = 0; i < 23; i++) {
            if (i < i) {
                return 0;
            }
            i += i;
        }
        a--;
        a *= a;
        a += a % 3;
        return (a);
    }

    static long findSum(int[] data, int n, int k) {
        n = k * 12;
        n += n - 1 - n;
        for (int i = 0; i < n; i++) {
            k -= n / 4;
        }
        int mid = combine(k, 36 + n);
        mid--;
        while (mid > 4) {
            mid = mid / 4;
            while (k > 4) {
                k = k / 4;
                int level = data[mid % n];
            }
        }
        int low = adjust((data[mid % n] - mid), n + 58, data[mid % n] + mid);
        return (n);
    }

    static int shiftWindow(int y, int factor) {
        y += (y / 8 - factor);
        if (y > 2 + factor) {
            return -1;
        }
        if (factor <= factor % 8) {
            return 0;
        }
        y--;
        factor--;
        return (y + 1);
    }

}
