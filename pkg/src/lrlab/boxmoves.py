"""Box moves between tableaux of a common horizontal-strip shape.

A box move exchanges two entries u < v sitting in rows r > s so that the
smaller entry moves up, the columns are re-sorted, and the result is again
a valid tableau.  The order they generate coincides with dominance when
the skew diagram is both a horizontal and a vertical strip; the
``dom_to_box_*`` functions realize that equivalence constructively.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Literal, Sequence

from . import tableaux as tb
from .errors import InvariantViolation
from .tableaux import Column, LRTableau


@dataclass(frozen=True)
class BoxMove:
    """Exchange of entries u < v between rows r > s (rows in the source)."""

    u: int
    v: int
    r: int
    s: int
    source_column_u: int
    source_column_v: int

    def __post_init__(self):
        if not (self.u < self.v and self.r > self.s):
            raise ValueError(f"need u < v and r > s: {self}")


def _require_horizontal(t: LRTableau, what: str) -> None:
    if not tb.is_horizontal_strip(t.shape.beta, t.shape.gamma):
        raise ValueError(f"{what} is defined only for horizontal strips: {t.shape}")


def apply_move(t: LRTableau, move: BoxMove) -> LRTableau:
    """Swap the two entries of ``move`` and re-sort; raises if invalid."""
    _require_horizontal(t, "a box move")
    cols = list(t.columns)
    cu, cv = cols[move.source_column_u], cols[move.source_column_v]
    if cu.entries != (move.u,) or cu.length != move.r:
        raise ValueError(f"column {move.source_column_u} does not hold {move.u} in row {move.r}")
    if cv.entries != (move.v,) or cv.length != move.s:
        raise ValueError(f"column {move.source_column_v} does not hold {move.v} in row {move.s}")
    cols[move.source_column_u] = Column(cu.length, cu.base, (move.v,))
    cols[move.source_column_v] = Column(cv.length, cv.base, (move.u,))
    t2 = LRTableau(cols, alpha=t.shape.alpha)
    report = tb.validate(t2)
    if not report.ok:
        raise ValueError(f"move yields an invalid tableau: {report.violations}")
    return t2


def box_successors(t: LRTableau) -> list[tuple[LRTableau, BoxMove]]:
    """All tableaux one box move above ``t``, sorted by reading word."""
    _require_horizontal(t, "box_successors")
    seen: dict[LRTableau, BoxMove] = {}
    cols = t.columns
    for i, ci in enumerate(cols):
        if not ci.entries:
            continue
        u, r = ci.entries[0], ci.length
        for j, cj in enumerate(cols):
            if not cj.entries:
                continue
            v, s = cj.entries[0], cj.length
            if not (u < v and r > s):
                continue
            move = BoxMove(u, v, r, s, i, j)
            try:
                t2 = apply_move(t, move)
            except ValueError:
                continue
            seen.setdefault(t2, move)
    return sorted(seen.items(), key=lambda pair: tb.reading_word(pair[0]))


def box_leq(t1: LRTableau, t2: LRTableau) -> bool:
    """Reachability of t2 from t1 by upward box moves (breadth first)."""
    if t1.shape != t2.shape:
        raise ValueError(f"shape mismatch: {t1.shape} vs {t2.shape}")
    _require_horizontal(t1, "box_leq")
    if t1 == t2:
        return True
    queue = deque([t1])
    visited = {t1}
    while queue:
        cur = queue.popleft()
        for nxt, _ in box_successors(cur):
            if nxt == t2:
                return True
            if nxt not in visited:
                visited.add(nxt)
                queue.append(nxt)
    return False


def _single_move_between(low: LRTableau, high: LRTableau) -> BoxMove | None:
    """The unique move with apply_move(low, move) == high, if one exists."""
    for t2, move in box_successors(low):
        if t2 == high:
            return move
    return None


def dom_to_box_step(
    gamma: LRTableau, gamma_t: LRTableau, pick_l: int | None = None
) -> LRTableau:
    """One step of the word-rewriting descent from gamma_t toward gamma.

    Both tableaux must share a horizontal-and-vertical-strip shape with
    gamma strictly below gamma_t in dominance.  Returns a tableau one box
    move below gamma_t that still dominates gamma.  ``pick_l`` overrides
    the choice in the fourth step with an explicit 1-based word position;
    the default takes the smallest admissible position.
    """
    shape = gamma.shape
    if shape != gamma_t.shape:
        raise ValueError(f"shape mismatch: {shape} vs {gamma_t.shape}")
    if not (tb.is_horizontal_strip(shape.beta, shape.gamma)
            and tb.is_vertical_strip(shape.beta, shape.gamma)):
        raise ValueError(f"shape must be a horizontal and vertical strip: {shape}")
    if gamma == gamma_t or not tb.dominance_leq(gamma, gamma_t):
        raise ValueError("need gamma strictly below gamma_t in dominance")

    w = tb.reading_word(gamma)
    wt = list(tb.reading_word(gamma_t))
    k = next(i for i in range(len(w)) if w[i] != wt[i])
    x = w[k]
    m = next((i for i in range(k + 1, len(wt)) if wt[i] == x), None)
    if m is None:
        raise InvariantViolation(f"value {x} never reappears in {wt} after {k}")
    bigger = [wt[i] for i in range(k, m) if wt[i] > x]
    if not bigger:
        raise InvariantViolation(f"no entry above {x} in positions {k}..{m - 1} of {wt}")
    y = min(bigger)
    candidates = [i for i in range(k, m) if wt[i] == y]
    if pick_l is None:
        l = candidates[0]
    else:
        l = pick_l - 1
        if l not in candidates:
            raise ValueError(
                f"pick_l={pick_l} is not admissible; choices are "
                f"{[i + 1 for i in candidates]}"
            )
    wt[l], wt[m] = x, y
    result = tb.from_word(shape, wt)
    if not tb.dominance_leq(gamma, result):
        raise InvariantViolation("step output fails to dominate the lower tableau")
    if result != gamma_t and _single_move_between(result, gamma_t) is None:
        raise InvariantViolation("step output is not one box move below the input")
    return result


def dom_to_box_chain(
    gamma: LRTableau, gamma_t: LRTableau, pick_l_first: int | None = None
) -> list[LRTableau]:
    """Box-move chain gamma = L_0 < L_1 < ... < L_n = gamma_t.

    Iterates :func:`dom_to_box_step` from the top; every consecutive pair
    of the returned chain differs by a single verified box move.
    """
    if gamma.shape != gamma_t.shape:
        raise ValueError(f"shape mismatch: {gamma.shape} vs {gamma_t.shape}")
    if not tb.dominance_leq(gamma, gamma_t):
        raise ValueError("need gamma <= gamma_t in dominance")
    desc = [gamma_t]
    pick = pick_l_first
    while desc[-1] != gamma:
        nxt = dom_to_box_step(gamma, desc[-1], pick_l=pick)
        pick = None
        if nxt != desc[-1] and _single_move_between(nxt, desc[-1]) is None:
            raise InvariantViolation("chain step is not a single box move")
        desc.append(nxt)
    chain = list(reversed(desc))
    for lo, hi in zip(chain, chain[1:]):
        if _single_move_between(lo, hi) is None:
            raise InvariantViolation("assembled chain contains a non-move step")
    return chain


class HasseDiagram:
    """Covering relation of a named order on a fixed list of tableaux."""

    def __init__(self, nodes: Sequence[LRTableau], edges: list[tuple[int, int]],
                 relation: str):
        self.nodes = list(nodes)
        self.edges = sorted(edges)
        self.relation = relation

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "nodes": [list(tb.reading_word(t)) for t in self.nodes],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:
        def label(t):
            return ",".join(str(x) for x in tb.reading_word(t))

        lines = [f"digraph {self.relation} {{", "  rankdir=BT;"]
        for i, t in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{label(t)}"];')
        for i, j in self.edges:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def relation_matrix(
    nodes: Sequence[LRTableau], relation: Literal["dom", "box"]
) -> list[list[bool]]:
    """Full <=-matrix of the chosen order on ``nodes``."""
    n = len(nodes)
    if relation == "dom":
        return [[tb.dominance_leq(a, b) for b in nodes] for a in nodes]
    if relation == "box":
        reach = []
        for a in nodes:
            seen = {a}
            queue = deque([a])
            while queue:
                for nxt, _ in box_successors(queue.popleft()):
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
            reach.append(seen)
        return [[b in reach[i] for b in nodes] for i, a in enumerate(nodes)]
    raise ValueError(f"unknown relation {relation!r}")


def hasse(nodes: Sequence[LRTableau], relation: Literal["dom", "box"]) -> HasseDiagram:
    """Transitive reduction of the chosen order restricted to ``nodes``."""
    leq = relation_matrix(nodes, relation)
    n = len(nodes)
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j] or leq[j][i]:
                continue
            if any(k not in (i, j) and leq[i][k] and leq[k][j] and not leq[k][i]
                   and not leq[j][k] for k in range(n)):
                continue
            edges.append((i, j))
    return HasseDiagram(nodes, edges, relation)
