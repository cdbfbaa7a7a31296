import java.math.BigDecimal;
import java.math.MathContext;

class Rates {
    static final MathContext MC = MathContext.DECIMAL64;
    BigDecimal tax = new BigDecimal(0.19d, MC);
    BigDecimal big = new BigDecimal(1_000.5, MC);
}
