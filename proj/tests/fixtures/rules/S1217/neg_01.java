class Starter {
    void go(Runnable r) {
        Thread t = new Thread(r);
        t.start();
    }
}
