class Overload {
    public String toString(int indent) {
        return null;
    }
}
