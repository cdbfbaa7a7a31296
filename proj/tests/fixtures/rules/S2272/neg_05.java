import java.util.ListIterator;

abstract class Walker implements ListIterator<String> {
    private int i;

    public String previous() {
        return "p" + i--;
    }
}
