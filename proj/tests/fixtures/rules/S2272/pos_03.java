import java.util.*;

class Words implements Iterator<String> {
    private final String[] words;
    private int at;

    Words(String... words) { this.words = words; }

    public boolean hasNext() { return at < words.length; }

    public String next() {
        // advance
        return words[at++];
    }
}
