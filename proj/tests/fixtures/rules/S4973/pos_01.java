class Compare {
    boolean same(String s1, String s2) {
        return s1 == s2;
    }
}
