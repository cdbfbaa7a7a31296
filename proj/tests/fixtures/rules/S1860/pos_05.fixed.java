class Twice {
    private Long stamp = 0L; // shared
    private final Object lockStamp = new Object();

    void a() {
        synchronized (lockStamp) {
            stamp++;
        }
    }

    void b() {
        synchronized (lockStamp) {
            stamp--;
        }
    }
}
