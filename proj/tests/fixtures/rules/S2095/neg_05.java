import java.io.FileInputStream;
import java.io.IOException;

class Holder {
    private FileInputStream in;

    void open(String p) throws IOException {
        in = new FileInputStream(p);
    }
}
