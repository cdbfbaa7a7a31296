class Mean {
    double mean(int sum, int n) {
        double avg = (double) (sum + 1) / n;
        return avg;
    }
}
