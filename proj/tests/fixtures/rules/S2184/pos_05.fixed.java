class Buffer {
    private long total;

    void grow(int count, int size) {
        total = (long) count * size;
    }
}
