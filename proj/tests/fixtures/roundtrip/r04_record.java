package demo;

/* r04 record */
public record Point(int x, int y) {  // opens
    public Point {
        if (x < 0) throw new IllegalArgumentException("x");
    }

    public int sum() { return x + y; }
}
// end of file
