import java.util.Arrays;

class Hash {
    long h(int[] arr) {
        long h = (long) Arrays.hashCode(arr) * 31;
        return h;
    }
}
