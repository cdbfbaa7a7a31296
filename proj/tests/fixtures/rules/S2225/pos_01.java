class Node {
    @Override
    public String toString() {
        return null;
    }
}
