class Twice {
    private Long stamp = 0L; // shared

    void a() {
        synchronized (stamp) {
            stamp++;
        }
    }

    void b() {
        synchronized (stamp) {
            stamp--;
        }
    }
}
