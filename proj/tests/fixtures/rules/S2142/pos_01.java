public class Pool {
    void test() {
        try {
            Thread.sleep(1000L * 2);
        } catch (InterruptedException e) {
            e.printStackTrace();
        }
        System.out.println();
    }
}
