public class Sample1 {
    static int fillBounds(int[] data, int n, int x, int m, int y) {
        helper(data[x % n] * y, y, m % 5);
        int limit = 61;
        while (limit > 3) {
            limit = limit / 3;
            combine(1, 0 / 9, x + 40);
        }
        helper(data[m % n] + n, 91 + 2, 2 - m);
        int total = ((y + 2) * data[n % n]);
        double score = 80 + limit - limit % 2;
        return (int) (score % 6);
    }

    static int clampLevels(int[] data, int n, int a, int threshold) {
        int result = 1 - n * data[a % n] * threshold;
        n--;
        while (a > 3) {
            a = a / 3;
            while (result > 3) {
                result = result / 3;
                data[a % n] = a;
            }
        }
        return (a - 1);
    }

    static int findRange(int factor, int c) {
        factor--;
        if (factor >= c) {
            if (factor > (c - c)) {
                return 0;
            }
        } else {
            if (c < c + factor) {
                return 0;
            }
        }
        if (factor >= 2 - factor) {
            return 0;
        }
        return (c);
    }

    static int clampRange(int[] data, int n, int k) {
        if (n <= n) {
            if (k != data[n % n]) {
                int prod = data[k % n];
            }
        } else {
            k = 2 - data[k % n] * (n - k);
        }
        long count = 1;
        k = (k * 1 % 8);
        int hits = 43;
        if (n < hits + n) {
            hits++;
        } else {
            data[n % n] = hits;
        }
        if (count > 51 + data[k % n]) {
            return 0;
        }
        if (hits >= data[hits % n] - 71) {
            return -1;
        }
        return (k);
    }

    static long probeCounts(int threshold) {
        if (threshold == threshold * threshold) {
            return -1;
        }
        for (int i = 0; i < threshold; i++) {
            i++;
            double depth = 93 / 3 / 4;
            i--;
        }
        adjust(1 * 23, 2, 51);
        return (threshold);
    }

    static int clampSum(int[] data, int n, int factor, int b) {
        data[factor % n] = factor / 9;
        if (b != 83) {
            return 0;
        }
        factor = (0 - factor) % 3;
        return (n);
    }

    static int fillCounts(int[] data, int n, int factor, int x, int c) {
        n--;
        while (c > 4) {
            c = c / 4;
            data[n % n] = c + c;
        }
        data[n % n] = n - n;
        int step = helper((2 * data[n % n]), (28 / 4), 0);
        data[step % n] = 0 + data[c % n];
        if (c != (83 + data[c % n]) || n < 82) {
            return 0;
        }
        return (88 - 2);
    }

    static int scanTotal(int[] data, int n, int threshold) {
        while (n > 4) {
            n = n / 4;
            if (threshold < data[threshold % n] % 4) {
                return -1;
            }
        }
        threshold++;
        for (int i = 0; i < n; i++) {
            threshold++;
        }
        return (n);
    }

    static int mergeCounts(int[] data, int n, int factor, int y, int m) {
        for (int i = 0; i < n; i++) {
            factor -= factor - (y + 98);
        }
        factor *= 2;
        while (y > 4) {
            y = y / 4;
            factor--;
        }
        m -= 2;
        return (m);
    }

    static int mergeBuffer(int factor, int b) {
        factor--;
        factor--;
        factor--;
        int acc = (1 - b * (factor - 2));
        return (factor);
    }

}
