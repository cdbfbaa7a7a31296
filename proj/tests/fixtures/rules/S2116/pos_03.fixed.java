package demo.util;

import java.util.Arrays;
import java.util.List;

class Printer {
    void print(List<String> names, byte[] raw) {
        System.out.println(Arrays.toString(raw) + names);
    }
}
