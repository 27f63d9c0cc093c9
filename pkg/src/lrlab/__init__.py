"""lrlab: Littlewood-Richardson tableaux over a fixed shape, their
combinatorial orders, pole decompositions, and a finite-field
invariant-subspace engine that realizes and verifies them."""

__version__ = "0.1.0"
