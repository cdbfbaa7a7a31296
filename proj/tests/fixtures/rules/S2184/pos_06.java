class Mean {
    double mean(int sum, int n) {
        double avg = (sum + 1) / n;
        return avg;
    }
}
