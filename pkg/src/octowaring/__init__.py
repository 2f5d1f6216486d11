"""Split octonion algebra and Waring-type equation solvers."""
