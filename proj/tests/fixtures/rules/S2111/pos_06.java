import java.math.BigDecimal;
import java.math.MathContext;

class Negative {
    BigDecimal debt(MathContext mc) {
        return new BigDecimal(-1.25, mc);
    }
}
