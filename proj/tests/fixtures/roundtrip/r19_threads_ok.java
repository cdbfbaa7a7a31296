/* r19 threads ok */
class Threads {  // opens
    void go(Runnable r) throws InterruptedException {
        Thread t = new Thread(r);
        t.start();
        try {
            t.join();
        } catch (InterruptedException e) {
            Thread.currentThread().interrupt();
        }
    }
}
// end of file
