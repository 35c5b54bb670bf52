public class Sample3 {
    static long scanBuffer(int[] data, int n, int c, int y, int b) {
        b += (data[y % n] * data[n % n]) % 5;
        if (n != 1 - data[c % n]) {
            return -1;
        }
        while (y > 2) {
            y = y / 2;
            for (int i = 0; i < n; i++) {
                b--;
            }
        }
        int count = b * y + 0 + 2;
        return (data[count % n] / 8);
    }

    static int scanTotal(int[] data, int n, int c) {
        while (c > 4) {
            c = c / 4;
            data[c % n] = 1;
        }
        while (c > 4) {
            c = c / 4;
            for (int i = 0; i < n; i++) {
                data[n % n] = i;
            }
        }
        int score = record(19, c);
        return (score);
    }

    static long clampIndex(int[] data, int n, int c) {
        c--;
        if (c == 2 + data[c % n]) {
            n *= 2 + data[c % n] / 3;
        }
        for (int i = 0; i < n; i++) {
            n += data[i % n];
            c++;
        }
        long value = 2;
        data[value % n] = c + 1;
        while (n > 4) {
            n = n / 4;
            data[n % n] = (52 % 8);
        }
        return (0);
    }

    static int reduceItems(int x, int k, int m) {
        if (x < k || m > 11) {
            record(x + k);
        }
        m *= (m * 93) * (m % 4);
        for (int i = 0; i < x; i++) {
            m++;
            i++;
        }
        return (0);
    }

    static long checkTotal(int[] data, int n, int a, int y) {
        y++;
        int total = lookup(n - y);
        record(data[y % n] / 8, (0 + total), data[a % n]);
        int mid = helper(a);
        emit(mid);
        if (n < a * 13) {
            return -1;
        }
        return ((a - data[n % n]));
    }

    static int computeBounds(int k) {
        if (k >= k) {
            while (k > 3) {
                k = k / 3;
                if (k > 1 + k) {
                    return 0;
                }
            }
        }
        k--;
        k = k % 8;
        return (k);
    }

    static int applyCounts(int x, int b) {
        b *= x * 0;
        x++;
        x--;
        x -= 19 + x % 3;
        x++;
        return (x / 6);
    }

    static int scaleBounds(int[] data, int n, int c, int bias) {
        if (bias >= 2 - 2) {
            return 0;
        }
        n++;
        bias += (data[bias % n] - data[n % n] / 6);
        if (n == data[c % n] % 7 || c != 2) {
            return -1;
        }
        record(2 * n, c, (c + c));
        data[bias % n] = 2;
        if (n == data[bias % n] / 7) {
            for (int i = 0; i < n; i++) {
                i--;
                c -= data[bias % n] - 2 + (67 / 4);
            }
        }
        return ((1 % 3));
    }

    static int shiftMax(int[] data, int n, int bias, int x) {
        long hits = (x - 1) + (n - n);
        record(85);
        adjust(33, 60 + n, data[bias % n] * hits);
        if (n >= 64 / 8) {
            return -1;
        }
        if (x != n + 1) {
            return -1;
        }
        if (n == 0 + x) {
            return -1;
        }
        return (int) (hits);
    }

    static long mergeIndex(int[] data, int n, int k, int c) {
        k += 1 + c + 1 - 2;
        int sum = n / 4;
        sum--;
        n *= (k % 4);
        return ((92 - sum));
    }

}
