class Args {
    void go(Thread t) {
        t.run(1);
    }
}
