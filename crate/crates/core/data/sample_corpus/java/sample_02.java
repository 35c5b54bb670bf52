public class Sample2 {
    static int computeMax(int factor) {
        for (int i = 0; i < factor; i++) {
            factor += i;
        }
        for (int i = 0; i < factor; i++) {
            i++;
        }
        lookup(factor, factor + factor, (factor % 2));
        factor *= factor;
        return (factor);
    }

    static int computeRange(int[] data, int n, int x, int b, int k) {
        int offset = b;
        b++;
        if (offset == 66) {
            return 0;
        }
        for (int i = 0; i < n; i++) {
            if (offset != k - 0) {
                int size = combine(n, (data[k % n] % 6), i * b);
            }
        }
        return (n);
    }

    static int shiftScore(int m) {
        m++;
        for (int i = 0; i < m; i++) {
            i--;
            m += m / 3 / 3;
        }
        m++;
        m = 0;
        while (m > 2) {
            m = m / 2;
            m++;
        }
        return (m);
    }

    static int applyScore(int[] data, int n, int a, int x) {
        while (n > 2) {
            n = n / 2;
            int low = (n + n + 52);
        }
        mix(16 + 2);
        a++;
        n *= x + data[n % n] * n + x;
        while (x > 3) {
            x = x / 3;
            x++;
        }
        return (n);
    }

    static int updateTotal(int c, int y, int b) {
        b += y;
        helper(69, 1 / 8);
        while (b > 4) {
            b = b / 4;
            int high = (1 % 9) - y;
        }
        b--;
        c--;
        if (c <= y - y) {
            return 0;
        }
        if (b != 0) {
            if (c != b / 2) {
                return 0;
            }
        }
        return (1);
    }

    static int findSum(int[] data, int n, int y, int c) {
        while (y > 4) {
            y = y / 4;
            y++;
        }
        for (int i = 0; i < n; i++) {
            for (int j = 0; j <= n; j++) {
                int sum = data[i % n];
                int base = j;
                j = (data[n % n] - i) - n;
            }
            combine(60 - 1);
            y--;
        }
        int best = (n + data[sum % n]);
        return (2 + 43);
    }

    static int mergeIndex(int k, int a, int threshold) {
        int sum = (84 * 2);
        sum--;
        int high = combine(a);
        a++;
        for (int i = 0; i < 2; i++) {
            while (threshold > 3) {
                threshold = threshold / 3;
                threshold = (k + sum);
            }
        }
        high += threshold % 7;
        return (a);
    }

    static int reduceMax(int[] data, int n, int bias, int m, int threshold) {
        if (m > data[n % n] / 9) {
            return -1;
        }
        data[n % n] = (bias % 8);
        if (m <= bias % 3) {
            return -1;
        }
        return (threshold);
    }

    static long findIndex(int[] data, int n, int bias, int factor) {
        helper((bias * data[n % n]), 2);
        n++;
        if (n != n) {
            n -= (data[factor % n] - data[bias % n]);
        }
        emit(0 * 1, 0);
        return (2);
    }

    static long measureIndex(int[] data, int n, int m, int x, int b) {
        n += 1;
        if (m != 0 || n != 26) {
            int span = m;
        } else {
            x++;
        }
        b += m + 94 - 0;
        while (b > 2) {
            b = b / 2;
            int value = 65;
        }
        b += data[n % n];
        return (2);
    }

}
