public class Tabs {
	private final Thread t = new Thread(() -> {});

	void kick() {
		this.t.run();
	}
}
