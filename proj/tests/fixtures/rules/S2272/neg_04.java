import java.util.Iterator;

interface Source extends Iterator<String> {
    String peek();
}
