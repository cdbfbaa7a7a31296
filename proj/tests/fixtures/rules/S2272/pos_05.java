import java.util.Iterator;

class Cycle implements Iterator<Object> {
	public boolean hasNext() {
		return true;
	}

	public Object next() {
		return this;
	}
}
