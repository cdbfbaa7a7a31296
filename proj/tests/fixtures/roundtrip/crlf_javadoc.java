package demo;

/**
 * A documented type.
 *
 * @param <T> element type
 */
public class Doc<T> {
    /**
     * Returns the value.
     *
     * @return the value, never {@code null}
     */
    public T get() {
        return value; /* inline */ // and a line comment
    }

    private T value;
}
