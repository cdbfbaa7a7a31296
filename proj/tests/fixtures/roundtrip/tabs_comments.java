/*
 * Block header with a * star column.
 */
package demo.comments;

// line comment before import
import java.util.List; // trailing

/** Javadoc on the class. */
public class Comments {
	/* inline */ private int a; /* after */

	// orphan comment at the end of a body
}
// trailing comment at end of file
