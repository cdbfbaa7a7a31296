package demo;

import java.util.NoSuchElementException;

class Owner {
    java.util.Iterator<String> names() {
        return new java.util.Iterator<String>() {
            private boolean done;

            public boolean hasNext() {
                return !done;
            }

            public String next() {
                if (!hasNext()) {
                    throw new NoSuchElementException();
                }
                done = true;
                return "only";
            }
        };
    }
}
