import java.util.Arrays;

class Fine {
    String s(int[] arr) {
        return Arrays.toString(arr);
    }
}
