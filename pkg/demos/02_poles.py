"""Pickets and poles: the building blocks of horizontal-strip tableaux.

A pole is described by the radical layers of its generator powers; its
tableau has entry i in row layer_i + 1.  Every horizontal strip splits
into poles and empty pickets, and the splitting can be chosen compatibly
with a box move."""

from lrlab.boxmoves import box_successors
from lrlab.poles import (Picket, Pole, box_move_pole_partition, minimal_ambient,
                         picket_tableau, pole_decomposition, pole_of_tableau,
                         pole_tableau, split_off_pole, tableau_union)
from lrlab.tableaux import Column, LRTableau, reading_word

# A picket: one ambient column, subspace determined by its dimension.
print("picket (5,2):", [(c.length, c.base, c.entries)
                        for c in picket_tableau(Picket(5, 2)).columns])

# The pole with layers 0,2,3,6 lives in ambient (7,4,1); its chain walks
# one box at a time through rows 1, 3, 4, 7.
pole = Pole((0, 2, 3, 6), (7, 4, 1))
t = pole_tableau(pole)
print("pole (0,2,3,6) chain:", [list(c) for c in t.chain])
print("read back:", pole_of_tableau(t))
print("minimal ambient of (0,2,3,6):", minimal_ambient((0, 2, 3, 6)))

# A seven-column horizontal strip and its pole decomposition.
big = LRTableau(
    [Column(9, 8, (3,)), Column(9, 8, (4,)), Column(7, 6, (2,)),
     Column(5, 4, (3,)), Column(3, 2, (2,)), Column(1, 0, (1,)),
     Column(1, 0, (1,))]
)
extracted, rest = split_off_pole(big)
print("\nfirst split-off:", [(c.length, c.entries[0]) for c in extracted.columns])
print("decomposition:", [ep.pole.layers for ep in pole_decomposition(big)])

# The union of tableaux merges the partition chains stage by stage; it is
# exactly the tableau of the direct sum of realizing embeddings.
merged = tableau_union(extracted, rest)
assert merged == big
print("union of the two parts reassembles the tableau")

# One box move up from the big tableau, and the five-tableau partition
# that is compatible with it.
high, move = box_successors(big)[0]
print("\nmove:", (move.u, move.v, move.r, move.s))
g1, g2, g3, g1t, g2t = box_move_pole_partition(big, high, move)
for name, part in [("g1", g1), ("g2", g2), ("g1~", g1t), ("g2~", g2t)]:
    print(f"  {name}: pole {pole_of_tableau(part).layers}")
print("  common part empty:", not g3.columns)
print("  words:", reading_word(big), "->", reading_word(high))
