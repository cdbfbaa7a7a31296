import java.io.FileInputStream;
import java.io.IOException;

class Factory {
    FileInputStream open(String p) throws IOException {
        return new FileInputStream(p);
    }
}
