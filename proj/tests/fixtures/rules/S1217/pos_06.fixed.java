class Param {
    static void fire(Thread thread) {
        thread.start();
    }
}
