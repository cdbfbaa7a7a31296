class Sheep implements Cloneable {
    @Override
    public Object clone() {
        return null;
    }

    @Override
    public String toString() {
        return "sheep";
    }
}
