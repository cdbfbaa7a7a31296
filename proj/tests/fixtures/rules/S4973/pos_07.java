class Unknowable {
    boolean eq(String s) {
        String t = lookup();
        return s == t || s == lookup();
    }
}
