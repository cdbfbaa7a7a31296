class Named {
    private String name = "n";
    private Object lockName;

    void rename(String next) {
        synchronized (this.name) {
            name = next;
        }
    }
}
