/* r43 constructor chain */
class Chained extends Object {  // opens
    private final int a, b;

    Chained() {
        this(1);
    }

    Chained(int a) {
        this(a, 2);
    }

    Chained(int a, int b) {
        super();
        this.a = a;
        this.b = b;
    }
}
// end of file
