class MixedBoxes {
    boolean eq(Integer c, int d, Long e, long f) {
        return c == d && e != f;
    }
}
