import java.math.BigDecimal;

class Price {
    BigDecimal base() {
        return BigDecimal.valueOf(2.5);
    }
}
