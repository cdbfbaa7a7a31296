


package demo;



/* r27 blank lines */
class Blank {  // opens


    int x;



}



// end of file
