class Nulls {
    boolean empty(String s) {
        return s == null || null != s;
    }
}
