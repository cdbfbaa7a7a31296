import java.util.ArrayList;
import java.util.List;

class Shared {
    private final List<String> items = new ArrayList<>();

    void add(String s) {
        synchronized (items) {
            items.add(s);
        }
    }
}
