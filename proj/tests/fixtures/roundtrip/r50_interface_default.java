/* r50 interface default */
interface Greeter {  // opens
    String name();

    default String greet() {
        return "Hello, " + name();
    }

    private String secret() {
        return "s";
    }
}
// end of file
