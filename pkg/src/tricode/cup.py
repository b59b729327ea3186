"""Simplicial cochain operations: coboundary, cup products, triple-cup
integrals against the fundamental class, and surface intersection forms.

Cochains are bit vectors indexed by n-simplices.  Front/back faces are
computed purely through face maps (never via global vertex lists, which are
ambiguous on one-vertex complexes): the front p-face deletes the last
vertex repeatedly, the back q-face deletes the first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import DeltaComplex, is_closed
from .gf2 import dot, popcount, vec_from_support
from . import homology


@dataclass(frozen=True)
class Cochain:
    dim: int
    values: int  # bit s = value on n-simplex s

    def __call__(self, s: int) -> int:
        return (self.values >> s) & 1

    @classmethod
    def from_support(cls, dim: int, support) -> "Cochain":
        return cls(dim, vec_from_support(support))


def coboundary(K: DeltaComplex, c: Cochain) -> Cochain:
    """(dc)(sigma) = sum of c over the faces of sigma, mod 2."""
    if c.dim >= K.dims:
        return Cochain(c.dim + 1, 0)
    out = 0
    for s, fs in enumerate(K.face[c.dim + 1]):
        acc = 0
        for f in fs:
            acc ^= (c.values >> f) & 1
        if acc:
            out |= 1 << s
    return Cochain(c.dim + 1, out)


def cup(K: DeltaComplex, a: Cochain, b: Cochain) -> Cochain:
    """(a cup b)(sigma) = a(front p-face) * b(back q-face)."""
    p, q = a.dim, b.dim
    n = p + q
    if n > K.dims:
        raise ValueError(f"cup degree {n} exceeds complex dimension {K.dims}")
    out = 0
    for s in range(K.n_cells(n)):
        if a(K.front(n, s, p)) and b(K.back(n, s, q)):
            out |= 1 << s
    return Cochain(n, out)


def integrate(K: DeltaComplex, c: Cochain) -> int:
    """Pairing with the fundamental class: sum over all top simplices mod 2."""
    if c.dim != K.dims:
        raise ValueError("can only integrate a top-dimensional cochain")
    return popcount(c.values) & 1


def triple_cup_integral(K: DeltaComplex, a: Cochain, b: Cochain, c: Cochain) -> int:
    """integral over K of a cup b cup c for 1-cochains on a closed 3-complex.

    Evaluated directly, one product per 3-simplex: a([v0 v1]) b([v1 v2])
    c([v2 v3]); equality with the nested cup evaluation is a unit test.
    """
    if K.dims != 3:
        raise ValueError("triple cup integral needs a 3-complex")
    if (a.dim, b.dim, c.dim) != (1, 1, 1):
        raise ValueError("triple cup integral takes three 1-cochains")
    total = 0
    for s in range(K.n_cells(3)):
        mid2 = K.face[3][s][3]  # [v0 v1 v2]
        e1 = K.face[2][mid2][2]  # [v0 v1]
        e2 = K.face[2][mid2][0]  # [v1 v2]
        e3 = K.back(3, s, 1)  # [v2 v3]
        total ^= a(e1) & b(e2) & c(e3)
    return total


def canonical_cocycle_basis(K: DeltaComplex, n: int) -> list[Cochain]:
    return [Cochain(n, v) for v in homology.homology_basis(K, n).cocycles]


def triple_form_matrix(K: DeltaComplex, cocycles: list[Cochain] | None = None):
    """All triple-cup integrals over a 1-cocycle basis, as {(i,j,k): value}
    with i <= j <= k."""
    if cocycles is None:
        cocycles = canonical_cocycle_basis(K, 1)
    k = len(cocycles)
    out = {}
    for i in range(k):
        for j in range(i, k):
            for l in range(j, k):
                out[(i, j, l)] = triple_cup_integral(K, cocycles[i], cocycles[j], cocycles[l])
    return out


def surface_intersection_form(K: DeltaComplex, cocycles: list[Cochain] | None = None) -> list[list[int]]:
    """M_ij = integral of c_i cup c_j over a closed surface; must be
    nondegenerate (raises otherwise)."""
    if K.dims != 2:
        raise ValueError("intersection form needs a 2-complex")
    if not is_closed(K):
        raise ValueError("intersection form needs a closed surface")
    if cocycles is None:
        cocycles = canonical_cocycle_basis(K, 1)
    k = len(cocycles)
    M = [[integrate(K, cup(K, cocycles[i], cocycles[j])) for j in range(k)] for i in range(k)]
    from .gf2 import invert

    if k and invert([vec_from_support(j for j in range(k) if M[i][j]) for i in range(k)], k) is None:
        raise ValueError("degenerate intersection form (non-closed or non-surface input)")
    return M


def leibniz_defect(K: DeltaComplex, a: Cochain, b: Cochain) -> int:
    """d(a cup b) + da cup b + a cup db, which must vanish identically."""
    lhs = coboundary(K, cup(K, a, b)).values
    rhs = cup(K, coboundary(K, a), b).values ^ cup(K, a, coboundary(K, b)).values
    return lhs ^ rhs


def named_dual_cocycles(K: DeltaComplex, n: int = 1) -> dict[str, Cochain]:
    """Cocycles dual to the builder's named n-cycles (pairing = identity)."""
    nb = homology.named_basis(K, n)
    if nb is None:
        raise ValueError(f"builder cycles do not form a basis of H_{n}")
    names, cycles = nb
    duals = homology.dual_cocycles(K, n, cycles)
    return {nm: Cochain(n, d) for nm, d in zip(names, duals)}


def evaluate(c: Cochain, chain: int) -> int:
    return dot(c.values, chain)
