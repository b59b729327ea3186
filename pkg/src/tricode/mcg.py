"""Mapping-class-group algebra on the homology level.

Symplectic transvections for Dehn twists (basis a_1..a_g, b_1..b_g with
<a_i, b_j> = -delta_ij, <b_i, a_j> = +delta_ij, the convention that
reproduces the genus-2 generator matrices), mapping-torus homology via
Smith normal form, Thurston's two-multicurve construction with exact
Perron-Frobenius numerics, triple forms of Torelli mapping tori, and
thickened-Dehn-twist logical CNOT actions on product 3-manifolds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .snf import IntMatrix, identity, matmul, smith_normal_form
from .gf2 import row_reduce, vec_from_support, dot


def symplectic_form(g: int) -> IntMatrix:
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        J[i][g + i] = -1
        J[g + i][i] = 1
    return J


def is_symplectic(M: IntMatrix, g: int) -> bool:
    J = symplectic_form(g)
    Mt = [[M[j][i] for j in range(2 * g)] for i in range(2 * g)]
    return matmul(matmul(Mt, J), M) == J


def sym_pairing(x: list[int], y: list[int], g: int) -> int:
    total = 0
    for i in range(g):
        total += -x[i] * y[g + i] + x[g + i] * y[i]
    return total


def dehn_twist_matrix(curve: list[int], g: int) -> IntMatrix:
    """Transvection x -> x + <x, c> c for an integral H_1 class c."""
    if len(curve) != 2 * g:
        raise ValueError("curve must be a 2g-vector in the (a, b) basis")
    M = identity(2 * g)
    for i in range(2 * g):
        basis = [1 if t == i else 0 for t in range(2 * g)]
        coeff = sym_pairing(basis, curve, g)
        for r in range(2 * g):
            M[r][i] += coeff * curve[r]
    assert is_symplectic(M, g)
    return M


def humphries_curve(name: str, g: int = 2) -> list[int]:
    """H_1 classes of the five genus-2 Humphries twist curves t_1..t_5."""
    if g != 2:
        raise ValueError("the Humphries regression anchors are genus 2")
    a1 = [1, 0, 0, 0]
    a2 = [0, 1, 0, 0]
    b1 = [0, 0, 1, 0]
    b2 = [0, 0, 0, 1]
    table = {
        "t1": a1,
        "t2": b1,
        "t3": [1, 1, 0, 0],  # the separating-handle curve class a1 + a2
        "t4": b2,
        "t5": a2,
    }
    return table[name]


def curve_class(spec: str, g: int) -> list[int]:
    """Parse a:i | b:i | f:i (f_i = b_{i+1} - b_i) into an H_1 vector."""
    kind, _, idx = spec.partition(":")
    i = int(idx)
    v = [0] * (2 * g)
    if kind == "a":
        v[i - 1] = 1
    elif kind == "b":
        v[g + i - 1] = 1
    elif kind == "f":
        if i >= g:
            raise ValueError("f-curves need i <= g-1")
        v[g + i - 1] = -1
        v[g + i] = 1
    else:
        raise ValueError(f"unknown curve {spec!r}")
    return v


@dataclass
class MappingTorusHomology:
    """H_1(M(f); Z) = Z + Coker(f - Id): free rank and torsion factors."""

    free_rank: int
    torsion: list[int]
    snf_diagonal: list[int]

    def describe(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def mapping_torus_homology(fhat: IntMatrix, coeff: str = "Z") -> MappingTorusHomology | int:
    """Homology of the mapping torus of a symplectic matrix.

    Over Z: Z (the base circle) plus Coker(fhat - Id), read off the Smith
    normal form.  Over Z2: the first Betti number, 1 + corank of
    (fhat - Id) mod 2.
    """
    n = len(fhat)
    delta = [[fhat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    if coeff.upper() == "Z":
        res = smith_normal_form(delta)
        zero = sum(1 for d in res.diagonal if d == 0) + (n - len(res.diagonal))
        torsion = [d for d in res.diagonal if d > 1]
        return MappingTorusHomology(1 + zero, torsion, res.diagonal)
    if coeff.upper() in ("Z2", "GF2"):
        rows = [vec_from_support(j for j in range(n) if delta[i][j] % 2) for i in range(n)]
        rank = len(row_reduce(rows)[0])
        return 1 + (n - rank)
    raise ValueError("coeff must be Z or Z2")


def invariant_subspace_gf2(fhat: IntMatrix) -> list[int]:
    """Basis of ker(fhat - Id) over GF(2): the classes that extend over the
    mapping torus."""
    n = len(fhat)
    rows = []
    for i in range(n):
        rows.append(vec_from_support(j for j in range(n) if (fhat[i][j] - (1 if i == j else 0)) % 2))
    from .gf2 import BitMatrix

    return BitMatrix(n, n, rows).nullspace()


def intersection_form_gf2(g: int) -> list[int]:
    """Rows of the mod-2 intersection matrix in the (a, b) basis."""
    J = symplectic_form(g)
    return [vec_from_support(j for j in range(2 * g) if J[i][j] % 2) for i in range(2 * g)]


def gf2_pairing(u: int, v: int, g: int) -> int:
    J = intersection_form_gf2(g)
    total = 0
    for i in range(2 * g):
        if (u >> i) & 1:
            total ^= dot(J[i], v)
    return total


UNKNOWN = "UNKNOWN-ALGEBRAIC"


@dataclass
class TripleForm:
    """Triple intersection coefficients on a labelled H_2 basis; values in
    {0, 1} or UNKNOWN-ALGEBRAIC for triples the algebra cannot see."""

    labels: list[str]
    coefficients: dict[frozenset, object] = field(default_factory=dict)

    def get(self, i, j, k):
        return self.coefficients.get(frozenset({i, j, k}), 0)

    def known_unit_triples(self) -> list[tuple]:
        return sorted(
            tuple(sorted(t)) for t, v in self.coefficients.items() if v == 1
        )

    def has_unknown(self) -> bool:
        return any(v == UNKNOWN for v in self.coefficients.values())


def torelli_triple_form(fhat: IntMatrix, g: int) -> TripleForm:
    """Triple form of the mapping torus of fhat, on the basis [Gamma] +
    extendable surface classes.

    Triples containing the base class Gamma evaluate to the surface
    intersection pairing of the two fibre classes; triples of three fibre
    classes are only computable geometrically and stay UNKNOWN-ALGEBRAIC.
    """
    inv = invariant_subspace_gf2(fhat)
    labels = ["Gamma"] + [f"v{i + 1}" for i in range(len(inv))]
    form = TripleForm(labels)
    for i in range(len(inv)):
        for j in range(i + 1, len(inv)):
            val = gf2_pairing(inv[i], inv[j], g)
            form.coefficients[frozenset({0, i + 1, j + 1})] = val
    for t in _triples(1, len(inv) + 1):
        form.coefficients[frozenset(t)] = UNKNOWN
    return form


def _triples(lo: int, hi: int):
    import itertools

    return itertools.combinations(range(lo, hi), 3)


def is_torelli_gf2(fhat: IntMatrix) -> bool:
    n = len(fhat)
    return all((fhat[i][j] - (1 if i == j else 0)) % 2 == 0 for i in range(n) for j in range(n))


# ---------------------------------------------------------------------------
# Thurston's construction
# ---------------------------------------------------------------------------


@dataclass
class ThurstonResult:
    nu: float
    trace: float
    is_pseudo_anosov: bool
    stretch_factor: float | None

    def volume_upper_bound(self, g: int) -> float | None:
        if self.stretch_factor is None:
            return None
        return 3 * math.pi * (2 * g - 2) * math.log(self.stretch_factor)


def _is_irreducible(M: list[list[float]]) -> bool:
    n = len(M)
    reach = [{j for j in range(n) if M[i][j] != 0 or i == j} for i in range(n)]
    for _ in range(n):
        for i in range(n):
            reach[i] = set().union(*(reach[j] for j in reach[i]))
    return all(len(r) == n for r in reach)


def perron_eigenvalue(M: list[list[float]], tol: float = 1e-14, iters: int = 100000) -> float:
    """Largest eigenvalue of a nonnegative irreducible matrix by power
    iteration with Rayleigh quotients."""
    n = len(M)
    v = [1.0] * n
    lam = 0.0
    for _ in range(iters):
        w = [sum(M[i][j] * v[j] for j in range(n)) for i in range(n)]
        norm = math.sqrt(sum(x * x for x in w))
        if norm == 0:
            return 0.0
        w = [x / norm for x in w]
        new_lam = sum(w[i] * sum(M[i][j] * w[j] for j in range(n)) for i in range(n))
        if abs(new_lam - lam) < tol * max(1.0, abs(new_lam)):
            return new_lam
        lam, v = new_lam, w
    return lam


def thurston(N: IntMatrix, word: list[str]) -> ThurstonResult:
    """Thurston's construction for a pair of filling multicurves with
    geometric intersection matrix N.

    nu is the Perron-Frobenius eigenvalue of N N^T; the word (over
    A, B, A-, B-) maps to 2x2 real matrices T_A = [[1, sqrt(nu)], [0, 1]],
    T_B = [[1, 0], [-sqrt(nu), 1]]; |trace| > 2 certifies pseudo-Anosov and
    the larger eigenvalue modulus is the stretch factor.
    """
    rows, cols = len(N), len(N[0])
    NNT = [[float(sum(N[i][t] * N[j][t] for t in range(cols))) for j in range(rows)] for i in range(rows)]
    if not _is_irreducible(NNT):
        raise ValueError("N N^T is reducible: Perron-Frobenius does not apply")
    nu = perron_eigenvalue(NNT)
    r = math.sqrt(nu)
    mats = {
        "A": ((1.0, r), (0.0, 1.0)),
        "A-": ((1.0, -r), (0.0, 1.0)),
        "B": ((1.0, 0.0), (-r, 1.0)),
        "B-": ((1.0, 0.0), (r, 1.0)),
    }
    M = ((1.0, 0.0), (0.0, 1.0))
    for tok in word:
        if tok not in mats:
            raise ValueError(f"unknown word letter {tok!r} (use A, B, A-, B-)")
        a = mats[tok]
        M = (
            (M[0][0] * a[0][0] + M[0][1] * a[1][0], M[0][0] * a[0][1] + M[0][1] * a[1][1]),
            (M[1][0] * a[0][0] + M[1][1] * a[1][0], M[1][0] * a[0][1] + M[1][1] * a[1][1]),
        )
    tr = M[0][0] + M[1][1]
    if abs(tr) > 2:
        stretch = (abs(tr) + math.sqrt(tr * tr - 4)) / 2
        return ThurstonResult(nu, tr, True, stretch)
    return ThurstonResult(nu, tr, False, None)


# ---------------------------------------------------------------------------
# Thickened Dehn twists on Sigma_g x S^1
# ---------------------------------------------------------------------------


@dataclass
class ThickenedTwistAction:
    """Action of a thickened Dehn twist on the H_2 / H_1 bases of
    Sigma_g x S^1 and its reading as logical CNOTs in one toric-code copy.

    Basis order: a1xc .. agxc, b1xc .. bgxc, Sigma (membranes); the H_1
    (Z-string) action is the inverse transpose over GF(2).
    """

    g: int
    matrix: list[int]  # columns of the GF(2) action on the membrane basis
    cnots: list[tuple[str, str]]  # (control label, target label), copy 1

    def labels(self) -> list[str]:
        g = self.g
        return [f"a{i + 1}xc" for i in range(g)] + [f"b{i + 1}xc" for i in range(g)] + ["Sigma"]

    def compose(self, earlier: "ThickenedTwistAction") -> "ThickenedTwistAction":
        """self after earlier (operator product self . earlier)."""
        cols = []
        for j in range(2 * self.g + 1):
            src = earlier.matrix[j]
            acc = 0
            for i in range(2 * self.g + 1):
                if (src >> i) & 1:
                    acc ^= self.matrix[i]
            cols.append(acc)
        return ThickenedTwistAction(self.g, cols, earlier.cnots + self.cnots)


def _identity_cols(m: int) -> list[int]:
    return [1 << i for i in range(m)]


def thickened_dehn_twist_action(curve: str, g: int) -> ThickenedTwistAction:
    """Thickened twist along curve x c for curve in {a:i, b:i, f:i}.

    b:i sends the membrane a_i x c to (a_i x c)(b_i x c): the logical CNOT
    with control (a_i x c; 1) and target (b_i x c; 1); a:i is the mirror;
    f:i couples neighbouring handles i and i+1 (four CNOTs).
    """
    kind, _, idx = curve.partition(":")
    i = int(idx) - 1
    if not 0 <= i < g or (kind == "f" and i >= g - 1):
        raise ValueError(f"curve index out of range for genus {g}: {curve}")
    m = 2 * g + 1
    a = lambda t: t
    b = lambda t: g + t
    cols = _identity_cols(m)
    cnots: list[tuple[str, str]] = []
    if kind == "b":
        cols[a(i)] ^= 1 << b(i)
        cnots = [(f"a{i + 1}xc", f"b{i + 1}xc")]
    elif kind == "a":
        cols[b(i)] ^= 1 << a(i)
        cnots = [(f"b{i + 1}xc", f"a{i + 1}xc")]
    elif kind == "f":
        for t in (i, i + 1):
            cols[a(t)] ^= (1 << b(i)) | (1 << b(i + 1))
        cnots = [
            (f"a{i + 1}xc", f"b{i + 1}xc"),
            (f"a{i + 2}xc", f"b{i + 2}xc"),
            (f"a{i + 1}xc", f"b{i + 2}xc"),
            (f"a{i + 2}xc", f"b{i + 1}xc"),
        ]
    else:
        raise ValueError(f"unknown curve kind {kind!r}")
    return ThickenedTwistAction(g, cols, cnots)


def twist_sequence_action(specs: list[str], g: int) -> ThickenedTwistAction:
    """Operator product of thickened twists, rightmost applied first."""
    actions = [thickened_dehn_twist_action(s, g) for s in specs]
    total = actions[-1]
    for act in reversed(actions[:-1]):
        total = act.compose(total)
    return total


def cnot_pair_between_handles(i: int, g: int) -> ThickenedTwistAction:
    """The expected Z2-linear map of CNOT((a_i x c;1),(b_{i+1} x c;1)) .
    CNOT((a_{i+1} x c;1),(b_i x c;1)) on the membrane basis."""
    m = 2 * g + 1
    cols = _identity_cols(m)
    cols[i - 1] ^= 1 << (g + i)  # a_i x c -> a_i x c + b_{i+1} x c
    cols[i] ^= 1 << (g + i - 1)  # a_{i+1} x c -> a_{i+1} x c + b_i x c
    cnots = [
        (f"a{i}xc", f"b{i + 1}xc"),
        (f"a{i + 1}xc", f"b{i}xc"),
    ]
    return ThickenedTwistAction(g, cols, cnots)
