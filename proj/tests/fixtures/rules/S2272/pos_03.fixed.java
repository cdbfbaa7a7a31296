import java.util.*;

class Words implements Iterator<String> {
    private final String[] words;
    private int at;

    Words(String... words) { this.words = words; }

    public boolean hasNext() { return at < words.length; }

    public String next() {
        if (!hasNext()) {
            throw new NoSuchElementException();
        }
        // advance
        return words[at++];
    }
}
