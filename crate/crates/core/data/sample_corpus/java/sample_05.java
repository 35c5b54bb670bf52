public class Sample5 {
    static int probeCounts(int[] data, int n, int k, int factor) {
        int sum = emit(data[k % n] % 9, n + 72);
        while (sum > 3) {
            sum = sum / 3;
            factor--;
        }
        for (int i = 0; i < n; i++) {
            k -= sum - 1 + (n * n);
        }
        sum--;
        helper((0 + factor), (0 / 8));
        return (42 + factor);
    }

    static int findTotal(int a, int c, int y) {
        c = a % 3;
        a--;
        y *= (72 / 3 * 98);
        y += c;
        y -= c;
        y--;
        return ((y + c));
    }

    static int checkTotal(int x, int k, int b) {
        int worst = b % 5;
        k += 2;
        b--;
        b -= 77;
        b--;
        k++;
        return (k);
    }

    static long probeWeights(int[] data, int n, int bias, int factor) {
        for (int i = 0; i < n; i++) {
            i *= 2 + 2;
        }
        int weight = mix(n, 1 - data[factor % n]);
        n++;
        return (data[factor % n]);
    }

    static int computeTable(int[] data, int n, int x) {
        n++;
        if (n > 66 && x != 2) {
            return 0;
        }
        if (x > n - 56 || x < 0) {
            return -1;
        }
        combine(x * x);
        long high = data[n % n];
        high++;
        return (int) (high);
    }

    static int clampBounds(int[] data, int n, int b) {
        int span = n;
        if (span >= n) {
            return -1;
        }
        data[b % n] = b;
        if (n == span % 2) {
            return 0;
        }
        while (span > 3) {
            span = span / 3;
            if (span != b) {
                return -1;
            }
        }
        n--;
        data[span % n] = 1;
        return (data[b % n]);
    }

    static int computeWeights(int m, int c, int a) {
        c = c - 19 * c;
        if (m != c / 2) {
            return 0;
        }
        if (a < m) {
            int prod = (m - m % 9);
        }
        return (m - 67);
    }

    static int scaleBounds(int[] data, int n, int bias, int c, int k) {
        n--;
        int score = data[n % n];
        int total = score % 9 % 9;
        score = 21;
        while (c > 4) {
            c = c / 4;
            mix(score);
        }
        for (int i = 0; i < n; i++) {
            int weight = 33 - data[total % n] % 7;
        }
        weight--;
        return (bias);
    }

    static int updateBounds(int[] data, int n, int x) {
        n -= (data[n % n] / 9) - data[x % n];
        data[x % n] = (73 - 0);
        n -= 58 * n * x;
        n += 34 - data[x % n];
        return (83);
    }

    static int scanLevels(int k, int bias) {
        k--;
        k -= 2 - k / 3;
        while (k > 2) {
            k = k / 2;
            k--;
        }
        k = (0 / 4 + (k + k));
        for (int i = 0; i < k; i++) {
            if (k <= i % 7) {
                return -1;
            }
            for (int j = 0; j < i; j++) {
                j--;
            }
            i++;
        }
        for (int i = 0; i < 0; i++) {
            i--;
            k += 0;
        }
        if (k <= (bias + k)) {
            int width = (k % 8);
        } else {
            k--;
        }
        return (k);
    }

}
