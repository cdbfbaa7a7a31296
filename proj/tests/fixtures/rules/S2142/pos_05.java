class Crlf {
	void join(Thread t) {
		try {
			t.join();
		} catch (java.lang.InterruptedException ex) {
			System.err.println(ex);
		}
	}
}
