"""Tour of the combinatorial layer: enumerate the tableaux of a shape,
compare the dominance and box-move orders, and walk the word-rewriting
descent that turns a dominance relation into explicit box moves."""

from lrlab.boxmoves import box_leq, box_successors, dom_to_box_chain, hasse
from lrlab.tableaux import (Shape, dominance_leq, enumerate_tableaux, from_word,
                            is_horizontal_strip, is_vertical_strip, reading_word)

# A shape is a triple of partitions (alpha, beta, gamma) with
# |beta| = |alpha| + |gamma|.  Parts are COLUMN lengths.
shape = Shape(alpha=(3, 2), beta=(4, 3, 3, 2, 1), gamma=(3, 2, 2, 1))
tableaux = enumerate_tableaux(shape)
print(f"shape {shape.alpha} / {shape.beta} / {shape.gamma}")
print(f"  {len(tableaux)} tableaux")
for t in tableaux:
    print(f"  word {reading_word(t)}  chain {[list(c) for c in t.chain]}")

# This skew diagram adds at most one box per column (horizontal strip)
# but two boxes land in one row, so it is not a vertical strip.
print("horizontal:", is_horizontal_strip(shape.beta, shape.gamma))
print("vertical:  ", is_vertical_strip(shape.beta, shape.gamma))

# The two fillings are dominance-comparable but box-incomparable: on
# shapes that are not vertical strips the two orders can differ.
t1, t2 = tableaux
print("dominance t1 <= t2:", dominance_leq(t1, t2))
print("box       t1 <= t2:", box_leq(t1, t2))

# On a horizontal AND vertical strip the orders agree, and the descent
# algorithm produces an explicit chain of single box moves.
double = Shape((3, 2, 1), (6, 5, 4, 3, 2, 1), (5, 4, 3, 2, 1))
low = from_word(double, (1, 3, 2, 2, 1, 1))
high = from_word(double, (2, 3, 2, 1, 1, 1))
chain = dom_to_box_chain(low, high)
print("\nbox-move chain on the double strip:")
for t in chain:
    print("  ", reading_word(t))

# Hasse diagrams come with DOT export for rendering.
three = Shape((3, 1), (4, 3, 2, 1), (3, 2, 1))
diagram = hasse(enumerate_tableaux(three), "dom")
print("\n" + diagram.to_dot())

# Single box moves always move strictly up in dominance.
for t in enumerate_tableaux(three):
    pass  # (4,3,2,1)/(3,2,1) is not a horizontal strip, so no box moves here
for t in chain[:-1]:
    for succ, move in box_successors(t):
        assert dominance_leq(t, succ)
print("every box move increases dominance: checked")
