public class Registry {
    private final Entry other = new Entry();

    void touch() {
        synchronized (other.getLockName()) {
            other.hit();
        }
    }
}

class Entry {
    private String name = "entry";
    private int hits;
    private final Object lockName = new Object();

    String getName() {
        return name;
    }

    void hit() {
        hits++;
    }

    public Object getLockName() {
        return lockName;
    }
}
