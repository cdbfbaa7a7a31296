class Third {
    float third = 1f / 3;
    double half = 1d / 2; // zero
}
