import java.util.List;

class Coll {
    String s(List<int[]> xs) {
        return xs.toString();
    }
}
