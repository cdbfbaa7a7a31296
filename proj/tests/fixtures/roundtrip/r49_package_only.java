package demo.only;
// end of file
