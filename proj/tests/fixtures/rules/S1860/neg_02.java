class Dedicated {
    private final Object lock = new Object();
    private int n;

    void bump() {
        synchronized (lock) {
            n++;
        }
    }
}
