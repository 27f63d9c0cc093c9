"""Brute-force submodule census and fingerprint-based classification.

The census enumerates generator tuples for invariant submodules of the
canonical ambient module, deduplicates by reduced row echelon form,
filters to the requested subspace and quotient types, and buckets the
survivors by tableau and by hom-dimension fingerprint against a catalog
of known indecomposables.  Over F_2 the inner loop runs on bitmask
vectors; other primes use the generic mod-p path.

Fingerprints agree for isomorphic embeddings; the converse is validated
against every nonisomorphy asserted by the worked examples but is not a
theorem for arbitrary inputs, so distinct classes with equal
fingerprints on new shapes would be merged silently.  Pass a richer
catalog to sharpen the separation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import linalg as la
from . import partitions as pt
from .errors import GuardExceeded, InvariantViolation
from .nilmod import (Embedding, canonical_module, hom_dim, realize_picket,
                     realize_pole, tableau_of_embedding)
from .poles import Pole, minimal_ambient
from .tableaux import LRTableau, Shape

DEFAULT_GUARD = 2**22


def _effective_guard(guard: int | None) -> int:
    if guard is not None:
        return guard
    env = os.environ.get("LRLAB_GUARD")
    return int(env) if env else DEFAULT_GUARD


def s4_catalog(p: int) -> list[tuple[str, Embedding]]:
    """The 20 indecomposable embeddings with nilpotency index at most 4.

    Four empty pickets, the fifteen poles over layer sets inside
    {0, 1, 2, 3} with minimal ambient, and the one object X whose
    subspace needs two generators.  X's tableau is re-checked against
    its known chain before the catalog is returned.
    """
    catalog: list[tuple[str, Embedding]] = []
    for n in range(1, 5):
        catalog.append((f"P^{n}_0", realize_picket(n, 0, p)))
    layer_sets = [
        s
        for k in range(1, 5)
        for s in _subsets((0, 1, 2, 3), k)
    ]
    for layers in layer_sets:
        pole = Pole(layers, minimal_ambient(layers))
        catalog.append((f"P{layers}", realize_pole(pole, p)))
    x = _x_object(p)
    chain = tuple(c for c in tableau_of_embedding(x).chain)
    if chain != ((2,), (3, 1), (3, 2), (4, 2)):
        raise InvariantViolation(f"X object has chain {chain}")
    catalog.append(("X", x))
    if len(catalog) != 20:
        raise InvariantViolation(f"catalog has {len(catalog)} objects")
    return catalog


def _subsets(values, k):
    if k == 0:
        yield ()
        return
    for i, v in enumerate(values):
        for rest in _subsets(values[i + 1 :], k - 1):
            yield (v,) + rest


def _x_object(p: int) -> Embedding:
    """Ambient N_(4,2); subspace generated by T x + y and T y, where x, y
    generate the two blocks."""
    module = canonical_module((4, 2), p, shifts=[0, 1])
    g1 = np.zeros(6, dtype=np.int64)
    g1[1] = 1  # T x
    g1[4] = 1  # y
    g2 = np.zeros(6, dtype=np.int64)
    g2[5] = 1  # T y
    return Embedding(module, [g1, g2])


def iso_fingerprint(E: Embedding, catalog) -> tuple[int, ...]:
    """hom_dim(C, E) for every catalog object C, in catalog order."""
    return tuple(hom_dim(C, E) for _, C in catalog)


@dataclass
class CensusClass:
    fingerprint: tuple[int, ...]
    tableau: LRTableau
    representative: Embedding
    submodule_count: int


@dataclass
class Census:
    shape: Shape
    p: int
    total_submodules: int
    per_tableau: dict[LRTableau, int]
    classes: list[CensusClass]
    catalog_names: list[str] = field(default_factory=list)

    def classes_of(self, t: LRTableau) -> list[CensusClass]:
        return [c for c in self.classes if c.tableau == t]

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "p": self.p,
            "total_submodules": self.total_submodules,
            "per_tableau": [
                {"tableau": t.to_json(), "submodules": n}
                for t, n in sorted(self.per_tableau.items(),
                                   key=lambda kv: kv[0].to_json()["chain"])
            ],
            "catalog": self.catalog_names,
            "classes": [
                {
                    "fingerprint": list(c.fingerprint),
                    "tableau": c.tableau.to_json(),
                    "submodules": c.submodule_count,
                    "representative": c.representative.to_json(),
                }
                for c in self.classes
            ],
        }


def nominal_tuple_count(shape: Shape, p: int) -> int:
    return (p ** pt.weight(shape.beta)) ** len(shape.alpha)


def enumerate_submodules(
    shape: Shape,
    p: int,
    guard: int | None = None,
    slow: bool = False,
    catalog=None,
) -> Census:
    """Census of invariant submodules of N_beta of type alpha, quotient gamma.

    Every submodule of type alpha is generated by len(alpha) vectors with
    the i-th annihilated by T^alpha_i, so the search runs over tuples
    from those kernels; the guard is nevertheless expressed in nominal
    full-tuple terms so configured budgets stay comparable across
    implementations.
    """
    if not slow and nominal_tuple_count(shape, p) > _effective_guard(guard):
        raise GuardExceeded(
            f"census for {shape} over F_{p} needs {nominal_tuple_count(shape, p)}"
            f" nominal tuples; pass slow=True to run anyway"
        )
    if catalog is None:
        top = shape.beta[0] if shape.beta else 0
        catalog = s4_catalog(p) if top <= 4 else picket_pole_catalog(p, top)

    B = canonical_module(shape.beta, p)
    n = B.dim
    spans = _distinct_submodules(B, shape.alpha)

    per_tableau: dict[LRTableau, int] = {}
    buckets: dict[tuple[int, ...], CensusClass] = {}
    total = 0
    for span in spans:
        E = Embedding(B, span)
        if E.alpha != shape.alpha or E.gamma != shape.gamma:
            continue
        total += 1
        t = tableau_of_embedding(E)
        per_tableau[t] = per_tableau.get(t, 0) + 1
        fp = iso_fingerprint(E, catalog)
        if fp in buckets:
            cls = buckets[fp]
            cls.submodule_count += 1
            if cls.tableau != t:
                raise InvariantViolation(
                    "fingerprint collision across distinct tableaux"
                )
        else:
            buckets[fp] = CensusClass(fp, t, E, 1)
    classes = sorted(
        buckets.values(), key=lambda c: (c.tableau.to_json()["chain"], c.fingerprint)
    )
    return Census(shape, p, total, per_tableau, classes,
                  [name for name, _ in catalog])


def picket_pole_catalog(p: int, top: int) -> list[tuple[str, Embedding]]:
    """Pickets and poles with ambient parts at most ``top``; a fallback
    separating family for shapes beyond nilpotency four."""
    catalog: list[tuple[str, Embedding]] = []
    for n in range(1, top + 1):
        for m in range(0, n + 1):
            catalog.append((f"P^{n}_{m}", realize_picket(n, m, p)))
    # single-run poles are the pickets above, so only split layer sets add
    for k in range(2, top + 1):
        for layers in _subsets(tuple(range(top)), k):
            amb = minimal_ambient(layers)
            if amb[0] <= top and len(amb) > 1:
                pole = Pole(layers, amb)
                catalog.append((f"P{layers}", realize_pole(pole, p)))
    return catalog


def _distinct_submodules(B, alpha) -> list[np.ndarray]:
    """Canonical bases of the distinct invariant subspaces generated by
    tuples with the i-th generator inside ker T^alpha_i."""
    p, n = B.p, B.dim
    if not alpha:
        return [np.zeros((0, n), dtype=np.int64)]
    kernels = [la.null_space(B.power(a), p) for a in alpha]
    if p == 2:
        return _distinct_submodules_gf2(B, kernels)
    seen: dict[bytes, np.ndarray] = {}
    coeff_ranges = [list(product(range(p), repeat=k.shape[0])) for k in kernels]
    for combo in product(*coeff_ranges):
        gens = []
        for coeffs, kern in zip(combo, kernels):
            if any(coeffs):
                v = np.zeros(n, dtype=np.int64)
                for c, row in zip(coeffs, kern):
                    if c:
                        v = (v + c * row) % p
                gens.append(v)
        E_span = _close_under_action(B, gens)
        seen.setdefault(la.space_key(E_span), E_span)
    return list(seen.values())


def _close_under_action(B, gens) -> np.ndarray:
    if not gens:
        return np.zeros((0, B.dim), dtype=np.int64)
    rows = la.as_mat(gens, width=B.dim, p=B.p)
    span = la.row_space(rows, B.p)
    while True:
        grown = la.space_sum(span, (span @ B.action.T) % B.p, B.p)
        if grown.shape[0] == span.shape[0]:
            return span
        span = grown


def _distinct_submodules_gf2(B, kernels) -> list[np.ndarray]:
    """Bitmask enumeration over F_2: vectors are ints, echelon by XOR."""
    n = B.dim
    t_cols = [int("".join(str(int(B.action[i, j])) for i in range(n))[::-1], 2)
              if B.action[:, j].any() else 0 for j in range(n)]

    def apply_t(vec: int) -> int:
        out = 0
        while vec:
            low = vec & -vec
            out ^= t_cols[low.bit_length() - 1]
            vec ^= low
        return out

    def vec_of_row(row) -> int:
        out = 0
        for j in range(n):
            if row[j]:
                out |= 1 << j
        return out

    kern_bits = [[vec_of_row(r) for r in k] for k in kernels]

    def closure_key(gens: list[int]) -> tuple[int, ...]:
        basis: list[int] = []  # kept echelonized by leading bit, descending
        stack = list(gens)
        while stack:
            v = stack.pop()
            for b in basis:
                if v & (1 << (b.bit_length() - 1)):
                    v ^= b
            if v:
                basis.append(v)
                basis.sort(key=int.bit_length, reverse=True)
                stack.append(apply_t(v))
        # fully reduce upward for a canonical key
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i != j and basis[j] & (1 << (basis[i].bit_length() - 1)):
                    basis[j] ^= basis[i]
        return tuple(sorted(basis, reverse=True))

    seen: dict[tuple[int, ...], list[int]] = {}
    ranges = [range(1 << len(k)) for k in kern_bits]
    for combo in product(*ranges):
        gens = []
        for mask, rows in zip(combo, kern_bits):
            v = 0
            m = mask
            while m:
                low = m & -m
                v ^= rows[low.bit_length() - 1]
                m ^= low
            if v:
                gens.append(v)
        key = closure_key(gens)
        if key not in seen:
            seen[key] = list(key)
    out = []
    for key in seen:
        rows = np.zeros((len(key), n), dtype=np.int64)
        for i, v in enumerate(key):
            for j in range(n):
                if v & (1 << j):
                    rows[i, j] = 1
        out.append(la.row_space(rows, 2))
    return out
