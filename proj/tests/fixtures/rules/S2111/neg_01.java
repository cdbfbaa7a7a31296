import java.math.BigDecimal;

class FromString {
    BigDecimal v = new BigDecimal("2.5");
}
