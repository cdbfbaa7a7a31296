import static java.lang.Math.max;
import static java.util.Objects.requireNonNull;

import java.util.Objects;

/* r42 static imports */
class Statics {  // opens
    int m(int a, int b) {
        requireNonNull(Objects.toString(a));
        return max(a, b);
    }
}
// end of file
