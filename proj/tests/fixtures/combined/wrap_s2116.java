import java.io.File;
import java.io.FileInputStream;
import java.io.IOException;

class Probe {
    void probe(File f, int[] buf) throws IOException {
        FileInputStream in = new FileInputStream(f);
        System.out.println(buf.toString() + in.read());
        System.out.println("done");
    }
}
