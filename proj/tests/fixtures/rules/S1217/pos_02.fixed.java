class Spawner {
  void go(Runnable r) {
    new Thread(r).start(); // runs inline
  }
}
