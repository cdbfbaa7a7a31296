import java.util.Arrays;

class Hash {
    long h(int[] arr) {
        long h = Arrays.hashCode(arr) * 31;
        return h;
    }
}
