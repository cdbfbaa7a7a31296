class Widened {
    long f(int a, int b) {
        long x = (long) a * b;
        return x;
    }
}
