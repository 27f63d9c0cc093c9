"""Witness sequences: a short exact sequence certifying that one box
move lowers a tableau in the extension order.

Given tableaux one box move apart, the construction glues the two graded
poles of the lower tableau into a middle term Y and maps the upper
tableau's poles into and out of it.  Every structural claim is checked:
exactness, degree-0 homogeneity, subspace compatibility, and the tableau
identities on both ends."""

from lrlab.boxmoves import box_successors
from lrlab.nilmod import tableau_of_embedding
from lrlab.tableaux import Shape, from_word, reading_word
from lrlab.witness import witness_sequence

shape = Shape((2, 1), (5, 2, 1), (4, 1))
low = from_word(shape, (1, 2, 1))
high = from_word(shape, (2, 1, 1))
move = next(m for t, m in box_successors(low) if t == high)
print("move: entries", (move.u, move.v), "rows", (move.r, move.s))

for p in (2, 3):
    ws = witness_sequence(low, high, move, p)
    print(f"\nover F_{p}:")
    print("  dims:", ws.xt.B.dim, "->", ws.y.B.dim, "->", ws.zt.B.dim)
    print("  middle tableau:", reading_word(tableau_of_embedding(ws.y)))
    for check, ok in ws.report.items():
        print(f"  {check}: {'ok' if ok else 'FAIL'}")

# the JSON form carries the embeddings, both maps and the full report
payload = witness_sequence(low, high, move, 2).to_json()
print("\nserialized keys:", sorted(payload))
