/* r30 string ops */
class Strings {  // opens
    boolean same(String a, String b) {
        return a != null && a.equals(b) && !b.isEmpty() && a.compareTo(b) == 0;
    }

    String join(String[] xs) {
        return String.join(",", xs) + java.util.Arrays.toString(xs);
    }
}
// end of file
