"""GF(2) homology and cohomology of Delta-complexes.

Boundary matrices act on bit-packed chain vectors (bit s = simplex s).
Bases are canonical: deterministic elimination with lowest-index pivots,
and homology/cohomology bases are returned with an identity pairing so
downstream reports are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import DeltaComplex
from .gf2 import BitMatrix, dot, extend_basis, invert, row_reduce, vec_from_support


def boundary_matrix(K: DeltaComplex, n: int) -> BitMatrix:
    """del_n : C_n -> C_{n-1}; entry (f, s) = parity of occurrences of f among
    the faces of s."""
    rows = [0] * K.n_cells(n - 1)
    if 1 <= n <= K.dims:
        for s, fs in enumerate(K.face[n]):
            for f in fs:
                rows[f] ^= 1 << s
    return BitMatrix(K.n_cells(n - 1), K.n_cells(n), rows)


def coboundary_matrix(K: DeltaComplex, n: int) -> BitMatrix:
    """delta_n : C^n -> C^{n+1}, the transpose of del_{n+1}."""
    return boundary_matrix(K, n + 1).transpose()


def cycle_space(K: DeltaComplex, n: int) -> list[int]:
    if n == 0:
        return [1 << v for v in range(K.n_cells(0))]
    return boundary_matrix(K, n).nullspace()


def boundary_space(K: DeltaComplex, n: int) -> list[int]:
    if n >= K.dims:
        return []
    return row_reduce(boundary_matrix(K, n + 1).transpose().rows)[0]


def cocycle_space(K: DeltaComplex, n: int) -> list[int]:
    if n == K.dims:
        return [1 << s for s in range(K.n_cells(n))]
    return coboundary_matrix(K, n).nullspace()


def coboundary_space(K: DeltaComplex, n: int) -> list[int]:
    # im delta_{n-1} = column space of del_n^T = row space of del_n
    if n == 0:
        return []
    return row_reduce(boundary_matrix(K, n).rows)[0]


def betti(K: DeltaComplex, n: int) -> int:
    """dim ker del_n - rank del_{n+1} over GF(2)."""
    if n < 0 or n > K.dims:
        return 0
    kernel = K.n_cells(n) - boundary_matrix(K, n).rank() if n > 0 else K.n_cells(0)
    image = boundary_matrix(K, n + 1).rank() if n < K.dims else 0
    return kernel - image


def betti_all(K: DeltaComplex) -> tuple[int, ...]:
    return tuple(betti(K, n) for n in range(K.dims + 1))


@dataclass
class HomologyBasis:
    dim: int
    cycles: list[int]
    cocycles: list[int]
    pairing: list[int]  # row i = evaluations of all cocycles on cycle i

    @property
    def rank(self) -> int:
        return len(self.cycles)


def _complete(subspace: list[int], ambient: list[int]) -> list[int]:
    """Representatives extending span(subspace) to span(ambient)."""
    return extend_basis(subspace, ambient)


def homology_basis(K: DeltaComplex, n: int) -> HomologyBasis:
    """Cycle and cocycle representatives with identity pairing.

    Cycles complete im del_{n+1} inside ker del_n; cocycles complete
    im delta_{n-1} inside ker delta_n, then are recombined so that
    cocycle_j(cycle_i) = delta_ij.
    """
    cycles = _complete(boundary_space(K, n), cycle_space(K, n))
    cocycles = _complete(coboundary_space(K, n), cocycle_space(K, n))
    assert len(cycles) == len(cocycles) == betti(K, n)
    k = len(cycles)
    if k == 0:
        return HomologyBasis(n, [], [], [])
    # pairing rows over the raw cocycles; invertible since the bases are dual-complete
    p_rows = [vec_from_support(j for j, c in enumerate(cocycles) if dot(c, z)) for z in cycles]
    p_inv = invert(p_rows, k)
    assert p_inv is not None, "homology/cohomology pairing is degenerate"
    # new_j = sum_m inv[m][j] old_m  gives pairing identity
    new_cocycles = []
    for j in range(k):
        acc = 0
        for m in range(k):
            if (p_inv[m] >> j) & 1:
                acc ^= cocycles[m]
        new_cocycles.append(acc)
    pairing = [
        vec_from_support(j for j, c in enumerate(new_cocycles) if dot(c, z))
        for z in cycles
    ]
    assert pairing == [1 << i for i in range(k)]
    return HomologyBasis(n, cycles, new_cocycles, pairing)


def dual_cocycles(K: DeltaComplex, n: int, cycles: list[int]) -> list[int]:
    """Cocycles c_j with c_j(z_i) = delta_ij for the given n-cycle basis.

    Raises if the given cycles do not span H_n (pairing not invertible).
    """
    cocycles = _complete(coboundary_space(K, n), cocycle_space(K, n))
    k = len(cycles)
    if k != len(cocycles):
        raise ValueError(f"{k} cycles given, H_{n} has rank {len(cocycles)}")
    p_rows = [vec_from_support(j for j, c in enumerate(cocycles) if dot(c, z)) for z in cycles]
    p_inv = invert(p_rows, k)
    if p_inv is None:
        raise ValueError("given cycles are not a homology basis (degenerate pairing)")
    out = []
    for j in range(k):
        acc = 0
        for m in range(k):
            if (p_inv[m] >> j) & 1:
                acc ^= cocycles[m]
        out.append(acc)
    return out


def named_cycle_vector(K: DeltaComplex, name: str) -> tuple[int, int]:
    dim, cells = K.cycles[name]
    return dim, vec_from_support(cells)


def named_basis(K: DeltaComplex, n: int) -> tuple[list[str], list[int]] | None:
    """The builder-provided named n-cycles, if they form a homology basis."""
    names = [nm for nm, (d, _) in K.cycles.items() if d == n]
    if len(names) != betti(K, n):
        return None
    cycles = [named_cycle_vector(K, nm)[1] for nm in names]
    try:
        dual_cocycles(K, n, cycles)
    except ValueError:
        return None
    return names, cycles


def poincare_dual(K: DeltaComplex, z: int, q: int | None = None,
                  beta_basis: list[int] | None = None) -> int:
    """(d-q)-cocycle c with integral(c cup beta) = beta(z) for every
    q-cocycle basis element beta, for a q-cycle z on a closed d-complex
    (d = 3, q = 2: membrane -> 1-cocycle; d = 2, q = 1: curve -> 1-cocycle).

    Solved as a GF(2) linear system with c constrained to the cocycle
    condition; the result is unique up to coboundary.  Raises if no solution
    exists (non-cycle input or a complex without GF(2) Poincare duality).
    """
    d = K.dims
    if q is None:
        q = d - 1
    p = d - q
    if p < 0 or q < 0:
        raise ValueError("bad degrees")
    if boundary_matrix(K, q).matvec(z) != 0:
        raise ValueError(f"input chain is not a {q}-cycle")
    ncells = K.n_cells(p)
    top = K.n_cells(d)
    if beta_basis is None:
        beta_basis = homology_basis(K, q).cocycles
    rows = list(coboundary_matrix(K, p).rows) if p < d else []
    rhs_bits = [0] * len(rows)
    for beta in beta_basis:
        row = 0
        for s in range(top):
            front = K.front(d, s, p)
            back = K.back(d, s, q)
            if (beta >> back) & 1:
                row ^= 1 << front
        rows.append(row)
        rhs_bits.append(dot(beta, z))
    M = BitMatrix(len(rows), ncells, rows)
    b = vec_from_support(i for i, v in enumerate(rhs_bits) if v)
    c = M.solve(b)
    if c is None:
        raise ValueError("no Poincare dual: complex is not a closed GF(2) manifold cycle")
    return c


def intersection_pairing_1cycles(K: DeltaComplex, z1: int, z2: int) -> int:
    """Mod-2 intersection number of two 1-cycles on a closed surface:
    the Poincare dual of one evaluated on the other."""
    if K.dims != 2:
        raise ValueError("needs a closed surface")
    return dot(poincare_dual(K, z2, 1), z1)
