import java.util.Iterator;
import java.util.NoSuchElementException;

/* tabs iterator ok */
class Range implements Iterator<Integer> {  // opens
	private int i;
	private final int n;

	Range(int n) { this.n = n; }

	public boolean hasNext() { return i < n; }

	public Integer next() {
		if (!hasNext()) throw new NoSuchElementException();
		return i++;
	}
}
// end of file
