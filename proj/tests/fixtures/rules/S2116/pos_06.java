// Utility helpers.
// Second header line.

public class Header {
    String s(Object[] xs) {
        return xs.toString();
    }
}
