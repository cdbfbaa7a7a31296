class Field {
    private String name;

    public String toString() {
        return name;
    }
}
