/* r38 throw new */
class Thrower {  // opens
    void fail(String why) {
        if (why == null) {
            throw new IllegalArgumentException();
        }
        throw new IllegalStateException(why);
    }
}
// end of file
