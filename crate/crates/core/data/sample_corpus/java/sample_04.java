public class Sample4 {
    static long checkScore(int[] data, int n, int a) {
        if (a > 40 - 80) {
            for (int i = 0; i < n; i++) {
                long width = helper(47, n, (93 + 32));
                n--;
            }
        }
        if (n <= 14) {
            return 0;
        }
        a += a * 5 / 2;
        n *= (data[a % n] + n) + 30 + a;
        double span = 50;
        n = a;
        for (int i = 0; i < n; i++) {
            data[a % n] = a;
            for (int j = 0; j < n; j++) {
                n = data[j % n];
            }
            lookup(n, n - 38, (n - 0));
        }
        return (n);
    }

    static int computeRange(int[] data, int n, int c) {
        n--;
        if (n > (50 + data[c % n])) {
            while (n > 2) {
                n = n / 2;
                n--;
            }
        } else {
            c++;
        }
        if (c == n) {
            return -1;
        }
        double limit = data[n % n] - 23 + 16;
        n++;
        helper(c / 7);
        c -= n;
        return (int) (74 * limit);
    }

    static int checkTotal(int[] data, int n, int b) {
        b *= 1;
        for (int i = 0; i <= n; i++) {
            i--;
            lookup(6 + 49, i);
            b++;
        }
        while (b > 2) {
            b = b / 2;
            if (b >= (81 - 66)) {
                return 0;
            }
        }
        n *= n / 6;
        return (b);
    }

    static long findTotal(int bias, int a, int b) {
        if (a != 53) {
            a++;
        }
        a += a * 19;
        if (bias == 42 + b) {
            for (int i = 0; i < bias; i++) {
                a -= 1;
                b++;
                bias++;
            }
        } else {
            while (a > 4) {
                a = a / 4;
                int limit = adjust(16, b, b);
            }
        }
        return ((0 + 1));
    }

    static int scaleRange(int[] data, int n, int k, int b, int bias) {
        bias -= data[k % n];
        b++;
        if (bias != 56) {
            data[b % n] = k + data[bias % n];
        }
        long high = ((k % 3) - data[b % n] % 6);
        data[high % n] = (2 - 57);
        return (int) (high);
    }

    static int probeBuffer(int[] data, int n, int bias) {
        n++;
        long size = (2 + 13) % 2;
        int prod = (0 / 4) + bias / 4;
        return (prod);
    }

    static int mergeSum(int bias) {
        if (bias <= (2 + 76)) {
            int prod = ((bias + 62) % 6);
        }
        record(20 + bias);
        bias += 0;
        bias--;
        bias++;
        helper(1, bias, bias);
        return (bias);
    }

    static int measureWindow(int[] data, int n, int x, int threshold, int c) {
        adjust((n * 22));
        threshold += (x - 2) + c - 0;
        n += c;
        return (data[x % n] + 5);
    }

    static int scanCounts(int factor, int m, int b) {
        lookup(15, 2, factor);
        m--;
        m = b / 3;
        factor--;
        int weight = (54 / 3);
        return (weight);
    }

    static int checkIndex(int[] data, int n, int threshold) {
        data[n % n] = data[n % n];
        int result = 86 - data[n % n] * n - threshold;
        while (result > 3) {
            result = result / 3;
            if (result != 28 - data[n % n]) {
                record(data[threshold % n] % 2, n - result);
            } else {
                helper(1 / 7, 56);
            }
        }
        threshold += (data[result % n] + 68) - result;
        threshold += 30 - threshold / 7;
        n--;
        data[threshold % n] = 1;
        return (threshold);
    }

}
