package demo.threads;

public class Worker extends Thread {
    @Override
    public void run() {
        System.out.println("working");
    }
}

class Launcher {
    void launch() {
        Worker w = new Worker();
        w.run();
    }
}
