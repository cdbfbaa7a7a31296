import java.util.List;
import java.util.stream.Collectors;

/* r07 lambdas */
class Lambdas {  // opens
    List<String> upper(List<String> xs) {
        return xs.stream()
                 .filter(s -> !s.isEmpty())
                 .map(String::toUpperCase)
                 .collect(Collectors.toList());
    }

    Runnable r = () -> {
        int n = 0;
        n++;
    };
}
// end of file
