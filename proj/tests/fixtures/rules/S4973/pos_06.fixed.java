class Two {
    int count(String a, String b, String c) {
        int n = 0;
        if (a.equals(b)) n++;
        if (b.equals(c)) n++;
        if (a == null) n++;
        return n;
    }
}
