import java.io.FileInputStream;
import java.io.IOException;

class Escapes {
    FileInputStream open(String p) throws IOException {
        FileInputStream in = new FileInputStream(p);
        in.skip(4);
        return in;
    }
}
