import java.util.Iterator;

class ArrayIter implements Iterator<Integer> {
    private final int[] data = {1, 2, 3};
    private int i;

    public boolean hasNext() {
        return i < data.length;
    }

    public Integer next() {
        return data[i++];
    }
}
