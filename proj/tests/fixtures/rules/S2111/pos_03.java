import java.math.BigDecimal;

class Ratio {
    BigDecimal of(double d, float f) {
        BigDecimal a = new BigDecimal(d);
        BigDecimal b = new BigDecimal(f * 2);
        return a.add(b);
    }
}
