class Split implements Cloneable {
    @Override
    protected Object clone() {
        return null;
    }

    @Override
    public String toString() {
        return "";
    }
}
