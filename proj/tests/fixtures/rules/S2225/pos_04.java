class Outer {
    Object make() {
        return new Object() {
            @Override
            public String toString() {
                return null;
            }
        };
    }
}
