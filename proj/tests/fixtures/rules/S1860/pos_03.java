class Stats {
  static Integer total = 0;

  static void add(int n) {
    synchronized (total) {
      total += n;
    }
  }
}
