/* r47 multi decl */
class Multi {  // opens
    int a = 1, b, c = 3;
    String[] x, y[];

    void m() {
        int i = 0, j = i + 1;
        for (int p = 0, q = 10; p < q; p++, q--) {}
    }
}
// end of file
