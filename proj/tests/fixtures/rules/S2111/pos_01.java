import java.math.BigDecimal;

class Price {
    BigDecimal base() {
        return new BigDecimal(2.5);
    }
}
