class Dump {
    String show(int[] arr) {
        return arr.toString();
    }
}
