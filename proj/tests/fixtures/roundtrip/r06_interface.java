import java.util.Iterator;

/* r06 interface */
public interface Shape extends Comparable<Shape> {  // opens
    double area();

    default int compareTo(Shape o) {
        return Double.compare(area(), o.area());
    }

    static Shape unit() {
        return () -> 1.0;
    }
}
// end of file
