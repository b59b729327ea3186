"""CSS codes from complexes: toric-code copies and the fattened color code.

Logical X operators are stored as 1-cocycles (the membrane picture is their
Poincare dual); each logical qubit carries the label of the dual 2-cycle when
the builder named one, so gate reports speak in those cycle names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .complexes import DeltaComplex, barycentric_subdivide
from .gf2 import BitMatrix, dot, extend_basis, invert, popcount, vec_from_support
from . import homology


@dataclass
class CssCode:
    n: int
    hx: BitMatrix
    hz: BitMatrix
    logical_x: list[int]
    logical_z: list[int]
    meta: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.logical_x)

    def css_condition(self) -> bool:
        return self.hx.matmul(self.hz.transpose()).is_zero()

    def logical_labels(self) -> list:
        return self.meta.get("labels", list(range(self.k)))

    def check_logicals(self) -> list[str]:
        bad = []
        for i, lx in enumerate(self.logical_x):
            if any(dot(lx, r) for r in self.hz.rows):
                bad.append(f"logical_x[{i}] anticommutes with a Z stabilizer")
        for i, lz in enumerate(self.logical_z):
            if any(dot(lz, r) for r in self.hx.rows):
                bad.append(f"logical_z[{i}] anticommutes with an X stabilizer")
        for i, lx in enumerate(self.logical_x):
            for j, lz in enumerate(self.logical_z):
                if dot(lx, lz) != (1 if i == j else 0):
                    bad.append(f"pairing logical_x[{i}] . logical_z[{j}] != {int(i == j)}")
        expect = self.n - self.hx.rank() - self.hz.rank()
        if expect != self.k:
            bad.append(f"k mismatch: n - rank hx - rank hz = {expect}, logicals = {self.k}")
        return bad


def _align_pairing(lx: list[int], lz: list[int]) -> list[int]:
    """Recombine logical X representatives so logical_x . logical_z = I."""
    k = len(lx)
    if k == 0:
        return lx
    p_rows = [vec_from_support(j for j, x in enumerate(lx) if dot(x, z)) for z in lz]
    p_inv = invert(p_rows, k)
    assert p_inv is not None, "logical pairing is degenerate"
    out = []
    for j in range(k):
        acc = 0
        for m in range(k):
            if (p_inv[m] >> j) & 1:
                acc ^= lx[m]
        out.append(acc)
    return out


def toric_code(K: DeltaComplex, copies: int = 1) -> CssCode:
    """Qubits on the edges of each copy; X stabilizers are vertex stars
    (coboundaries of vertex indicators), Z stabilizers are face boundaries.

    Logical Z operators sit on a 1-cycle basis and logical X on the dual
    1-cocycles.  The builder's named cycles are used as the basis whenever
    they span H_1, in which case each logical qubit is labelled by the named
    2-cycle dual to its Z-string (recovered via poincare_dual).
    """
    if not 1 <= copies <= 3:
        raise ValueError("copies must be 1..3")
    E = K.n_cells(1)
    hx1 = homology.boundary_matrix(K, 1)  # rows: vertex stars
    hz1 = homology.boundary_matrix(K, 2).transpose()  # rows: face boundaries

    nb = homology.named_basis(K, 1)
    if nb is not None:
        names, cycles = nb
        cocycles = homology.dual_cocycles(K, 1, cycles)
        labels1 = [_dual_2cycle_label(K, z) for z in cycles]
        if any(lab is None for lab in labels1):
            labels1 = names
    else:
        hb = homology.homology_basis(K, 1)
        cycles, cocycles = hb.cycles, hb.cocycles
        labels1 = [f"h{i}" for i in range(hb.rank)]

    n = copies * E
    hx_rows = [r << (cpy * E) for cpy in range(copies) for r in hx1.rows]
    hz_rows = [r << (cpy * E) for cpy in range(copies) for r in hz1.rows]
    lx = [c << (cpy * E) for cpy in range(copies) for c in cocycles]
    lz = [z << (cpy * E) for cpy in range(copies) for z in cycles]
    labels = [(lab, cpy + 1) for cpy in range(copies) for lab in labels1]
    meta = {
        "kind": "toric",
        "copies": copies,
        "edges": E,
        "labels": labels,
        "qubit": [("edge", e, cpy + 1) for cpy in range(copies) for e in range(E)],
    }
    code = CssCode(n, BitMatrix(len(hx_rows), n, hx_rows),
                   BitMatrix(len(hz_rows), n, hz_rows), lx, lz, meta)
    assert code.css_condition()
    return code


def _dual_2cycle_label(K: DeltaComplex, cycle_1: int) -> str | None:
    """Name of the unique named 2-cycle whose Poincare dual pairs 1 with the
    given 1-cycle and 0 with nothing else named; None when ambiguous."""
    if K.dims != 3:
        return None
    hits = []
    for nm, (d, cells) in K.cycles.items():
        if d != 2:
            continue
        try:
            pd = homology.poincare_dual(K, vec_from_support(cells))
        except ValueError:
            return None
        if dot(pd, cycle_1):
            hits.append(nm)
    return hits[0] if len(hits) == 1 else None


def color_code(K: DeltaComplex) -> CssCode:
    """Color code via fattening: qubits on the flags (top simplices of the
    barycentric subdivision), X stabilizer per subdivision vertex, Z
    stabilizer per subdivision edge (the x = 0, z = 1 splitting).

    meta carries each flag's chain of original cells and its sign under the
    canonical two-colouring: the parity of the permutation ordering the cell
    chain times the coherent orientation of the ambient top cell (pure
    parity alone fails to alternate across neighbouring tetrahedra).
    Adjacent flags always get opposite signs.
    """
    if K.dims != 3:
        raise ValueError("color_code needs a 3-complex")
    from .complexes import orientation_signs

    eps = orientation_signs(K)
    if eps is None:
        raise ValueError("complex is not orientable: no flag bipartition")
    sub = barycentric_subdivide(K)
    sd = sub.complex
    D = sd.dims
    n = sd.n_cells(D)

    vert_rows = [0] * sd.n_cells(0)
    edge_rows = [0] * sd.n_cells(1)
    for s in range(n):
        verts = {sd.iterated_face(D, s, (i,))[1] for i in range(D + 1)}
        edges = {
            sd.iterated_face(D, s, keep)[1]
            for keep in itertools.combinations(range(D + 1), 2)
        }
        for v in verts:
            vert_rows[v] |= 1 << s
        for e in edges:
            edge_rows[e] |= 1 << s
    hx = BitMatrix(len(vert_rows), n, vert_rows)
    hz = BitMatrix(len(edge_rows), n, edge_rows)

    lx = extend_basis(hx.rows, hz.nullspace())
    lz = extend_basis(hz.rows, hx.nullspace())
    k = n - hx.rank() - hz.rank()
    assert len(lx) == len(lz) == k, "color code logical extraction failed"
    lx = _align_pairing(lx, lz)

    meta = {
        "kind": "color",
        "flags": sub.cell_chain[D],
        "signs": [
            sub.flag_sign(D, s) * eps[sub.cell_chain[D][s][-1][1]] for s in range(n)
        ],
        "labels": [(f"c{i}", 0) for i in range(k)],
        "qubit": [("flag", s) for s in range(n)],
    }
    code = CssCode(n, hx, hz, lx, lz, meta)
    assert code.css_condition()
    return code


@dataclass
class DistanceResult:
    dx: int | None
    dz: int | None
    exact: bool
    certificate_x: int | None = None
    certificate_z: int | None = None
    note: str = ""

    def flagged(self) -> str:
        if self.dx is None and self.dz is None:
            return "undefined (k = 0)"
        return "exact" if self.exact else "UPPER BOUND"


def _min_weight_logical(stab_rows: list[int], commute_rows: list[int],
                        pair_ops: list[int], n: int, budget: int) -> tuple[int | None, int | None, bool]:
    """Minimum weight of v with commute_rows . v = 0 and some pairing with
    pair_ops nonzero, by exhaustive enumeration in order of weight.

    Returns (weight, certificate, exact); (None, None, True) when k = 0 and
    a flagged partial bound when the budget runs out.
    """
    if not pair_ops:
        return None, None, True
    M = BitMatrix(len(commute_rows), n, commute_rows)
    spent = 0
    for w in range(1, n + 1):
        for comb in itertools.combinations(range(n), w):
            spent += 1
            if spent > budget:
                return None, None, False
            v = vec_from_support(comb)
            if M.matvec(v) != 0:
                continue
            if any(dot(v, p) for p in pair_ops):
                return w, v, True
    return None, None, True


def distance(code: CssCode, method: str = "exact", budget: int = 1 << 26,
             sector: str = "both") -> DistanceResult:
    """(d_x, d_z) with a minimum-weight certificate.

    exact: enumeration of supports in order of increasing weight, capped at
    ``budget`` candidates (flagged partial bound when exceeded).
    systole-bfs: upper bound from the shortest homologically nontrivial edge
    cycle of the underlying complex (meta must carry it), flagged UPPER BOUND.
    """
    if code.k == 0:
        return DistanceResult(None, None, True, note="k = 0: distance undefined")
    if method == "exact":
        dz = cz = dx = cx = None
        ez = ex = True
        if sector in ("both", "z"):
            dz, cz, ez = _min_weight_logical(code.hz.rows, code.hx.rows, code.logical_x, code.n, budget)
        if sector in ("both", "x"):
            dx, cx, ex = _min_weight_logical(code.hx.rows, code.hz.rows, code.logical_z, code.n, budget)
        exact = ez and ex
        note = "" if exact else f"budget {budget} exceeded; partial search only"
        return DistanceResult(dx, dz, exact, cx, cz, note)
    if method == "systole-bfs":
        K = code.meta.get("complex")
        if K is None:
            raise ValueError("systole-bfs needs code.meta['complex']")
        w, cert = systole_bfs(K)
        return DistanceResult(None, w, False, None, cert, "edge-systole upper bound for d_z")
    raise ValueError(f"unknown method {method!r}")


def systole_bfs(K: DeltaComplex) -> tuple[int, int]:
    """Shortest homologically nontrivial edge cycle via label-tracked BFS.

    States are (vertex, homology class so far); the class vector of an edge
    is its evaluation against the canonical H^1 cocycle basis.
    """
    from collections import deque

    cocycles = homology.homology_basis(K, 1).cocycles
    k = len(cocycles)
    if k == 0:
        raise ValueError("no nontrivial cycles")
    V = K.n_cells(0)
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(V)]  # (vertex, class, edge)
    for e, (f0, f1) in enumerate((K.face[1][i][0], K.face[1][i][1]) for i in range(K.n_cells(1))):
        cls = vec_from_support(j for j, c in enumerate(cocycles) if (c >> e) & 1)
        v0, v1 = f1, f0  # [v0 v1]: d_1 = v0, d_0 = v1
        adj[v0].append((v1, cls, e))
        adj[v1].append((v0, cls, e))
    best = None
    best_cert = 0
    for start in range(V):
        dist = {(start, 0): (0, 0)}  # state -> (length, chain)
        q = deque([(start, 0)])
        while q:
            v, cls = q.popleft()
            d, chain = dist[(v, cls)]
            if best is not None and d >= best:
                continue
            for (w, ecls, e) in adj[v]:
                nstate = (w, cls ^ ecls)
                if nstate not in dist:
                    dist[nstate] = (d + 1, chain ^ (1 << e))
                    q.append(nstate)
        for cls in range(1, 1 << k):
            if (start, cls) in dist:
                d, chain = dist[(start, cls)]
                if best is None or d < best:
                    best, best_cert = d, chain
    assert best is not None
    return best, best_cert


def stabilizer_weights(code: CssCode) -> dict[str, list[int]]:
    return {
        "x": sorted(popcount(r) for r in code.hx.rows),
        "z": sorted(popcount(r) for r in code.hz.rows),
    }
