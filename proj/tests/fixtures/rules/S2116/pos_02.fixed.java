import java.util.Arrays;
import java.util.List;

class Key {
    private final String[] arr = {"a", "b"};

    @Override
    public int hashCode() {
        return Arrays.hashCode(arr);
    }
}
