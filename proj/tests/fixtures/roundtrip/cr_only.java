class OldMac {    int a;}