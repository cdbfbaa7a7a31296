class Concat {
    String f(int a, int b) {
        String s = "" + a + b;
        return s;
    }
}
