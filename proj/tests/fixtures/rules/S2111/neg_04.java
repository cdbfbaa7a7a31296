import java.math.BigInteger;

class OtherNumber {
    BigInteger v = new BigInteger("10");
    Double d = new Double(2.5);
}
