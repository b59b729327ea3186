"""Delta-complexes (ordered-simplex cell complexes) and 3-manifold builders.

A ``DeltaComplex`` stores, for every n-simplex, the indices of its n+1
faces; ``face[n][s][i]`` is the (n-1)-simplex obtained by deleting vertex
position i.  Identifications are allowed (one-vertex models), so builders
stay desk-scale.  Every builder output satisfies the simplicial identity
d_i d_j = d_{j-1} d_i (i < j) and del del = 0 over GF(2); ``validate``
checks this.

Builders label distinguished edges and record named cycles (a, b, c,
products with the circle direction, the fibre surface) so downstream gate
reports can speak in terms of those cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Cell = tuple[int, int]  # (dimension, index)


@dataclass
class DeltaComplex:
    # face[0] is a list of () placeholders, one per vertex
    face: list[list[tuple[int, ...]]]
    labels: dict[Cell, str] = field(default_factory=dict)
    # name -> (dim, sorted tuple of cell indices), each a GF(2) cycle
    cycles: dict[str, tuple[int, tuple[int, ...]]] = field(default_factory=dict)

    @property
    def dims(self) -> int:
        return len(self.face) - 1

    @property
    def counts(self) -> list[int]:
        return [len(f) for f in self.face]

    def n_cells(self, n: int) -> int:
        if n < 0 or n > self.dims:
            return 0
        return len(self.face[n])

    def faces_of(self, n: int, s: int) -> tuple[int, ...]:
        return self.face[n][s]

    def iterated_face(self, n: int, s: int, keep: tuple[int, ...]) -> Cell:
        """The face of an n-simplex spanned by vertex positions ``keep``."""
        drop = [i for i in range(n + 1) if i not in keep]
        d, idx = n, s
        for i in sorted(drop, reverse=True):
            idx = self.face[d][idx][i]
            d -= 1
        return (d, idx)

    def front(self, n: int, s: int, p: int) -> int:
        """Index of the front p-face [v_0 .. v_p] (iterated top-index faces)."""
        d, idx = n, s
        while d > p:
            idx = self.face[d][idx][d]
            d -= 1
        return idx

    def back(self, n: int, s: int, q: int) -> int:
        """Index of the back q-face [v_{n-q} .. v_n] (iterated d_0)."""
        d, idx = n, s
        while d > q:
            idx = self.face[d][idx][0]
            d -= 1
        return idx

    def label(self, n: int, s: int) -> str:
        return self.labels.get((n, s), f"{n}.{s}")

    def cell_index_by_label(self, n: int, name: str) -> int:
        for (d, s), lab in self.labels.items():
            if d == n and lab == name:
                return s
        raise KeyError(f"no {n}-cell labelled {name!r}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * c for n, c in enumerate(self.counts))


def validate(K: DeltaComplex) -> list[str]:
    """All invariant violations (empty list == well-formed)."""
    bad: list[str] = []
    for n in range(1, K.dims + 1):
        for s, fs in enumerate(K.face[n]):
            if len(fs) != n + 1:
                bad.append(f"{n}-simplex {s}: expected {n + 1} faces, got {len(fs)}")
                continue
            for i, f in enumerate(fs):
                if not (0 <= f < K.n_cells(n - 1)):
                    bad.append(f"{n}-simplex {s}: face {i} index {f} out of range")
    if bad:
        return bad
    for n in range(2, K.dims + 1):
        for s in range(K.n_cells(n)):
            fs = K.face[n][s]
            for j in range(n + 1):
                for i in range(j):
                    # d_i d_j = d_{j-1} d_i for i < j
                    lhs = K.face[n - 1][fs[j]][i]
                    rhs = K.face[n - 1][fs[i]][j - 1]
                    if lhs != rhs:
                        bad.append(
                            f"{n}-simplex {s}: d_{i} d_{j} != d_{j - 1} d_{i}"
                        )
    for n in range(2, K.dims + 1):
        # del del = 0 over GF(2)
        for s in range(K.n_cells(n)):
            acc: dict[int, int] = {}
            for f in K.face[n][s]:
                for g in K.face[n - 1][f]:
                    acc[g] = acc.get(g, 0) ^ 1
            if any(acc.values()):
                bad.append(f"{n}-simplex {s}: del del != 0")
    for name, (dim, cells) in K.cycles.items():
        if dim > K.dims or any(c >= K.n_cells(dim) for c in cells):
            bad.append(f"cycle {name!r}: cell index out of range")
    return bad


def is_closed(K: DeltaComplex) -> bool:
    """True if the sum of all top simplices is a GF(2) cycle (fundamental class)."""
    if K.dims == 0:
        return True
    acc = [0] * K.n_cells(K.dims - 1)
    for fs in K.face[K.dims]:
        for f in fs:
            acc[f] ^= 1
    return not any(acc)


def check_isomorphism(K1: DeltaComplex, K2: DeltaComplex, perm: list[list[int]]) -> bool:
    """Does ``perm`` (per-dimension maps K1 -> K2) commute with all face maps?"""
    if K1.counts != K2.counts:
        return False
    for n, p in enumerate(perm):
        if sorted(p) != list(range(K1.n_cells(n))):
            return False
    for n in range(1, K1.dims + 1):
        for s in range(K1.n_cells(n)):
            mapped = tuple(perm[n - 1][f] for f in K1.face[n][s])
            if K2.face[n][perm[n][s]] != mapped:
                return False
    return True


@dataclass
class SimplicialAutomorphism:
    """Per-dimension permutation of simplices commuting with face maps."""

    perm: list[list[int]]

    def order_of(self) -> int:
        m = 1
        for p in self.perm:
            seen = [False] * len(p)
            for i in range(len(p)):
                if seen[i]:
                    continue
                ln, j = 0, i
                while not seen[j]:
                    seen[j] = True
                    j = p[j]
                    ln += 1
                m = _lcm(m, ln)
        return m

    @classmethod
    def identity(cls, K: DeltaComplex) -> "SimplicialAutomorphism":
        return cls([list(range(c)) for c in K.counts])


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def validate_automorphism(K: DeltaComplex, phi: SimplicialAutomorphism) -> list[str]:
    bad = []
    if len(phi.perm) != K.dims + 1:
        return [f"automorphism covers {len(phi.perm)} dimensions, complex has {K.dims + 1}"]
    for n, p in enumerate(phi.perm):
        if sorted(p) != list(range(K.n_cells(n))):
            bad.append(f"dimension {n}: not a permutation")
    if bad:
        return bad
    for n in range(1, K.dims + 1):
        for s in range(K.n_cells(n)):
            for i, f in enumerate(K.face[n][s]):
                if phi.perm[n - 1][f] != K.face[n][phi.perm[n][s]][i]:
                    bad.append(f"face map conflict at {n}-simplex {s}, face {i}")
    return bad


class _Builder:
    """Accumulates simplices keyed by hashable descriptors, then freezes."""

    def __init__(self, dims: int):
        self.dims = dims
        self.index: list[dict] = [dict() for _ in range(dims + 1)]
        self.faces: list[dict] = [dict() for _ in range(dims + 1)]

    def add(self, dim: int, key, face_keys=()) -> None:
        if key in self.index[dim]:
            return
        self.index[dim][key] = len(self.index[dim])
        self.faces[dim][key] = tuple(face_keys)

    def idx(self, dim: int, key) -> int:
        return self.index[dim][key]

    def freeze(self) -> DeltaComplex:
        face: list[list[tuple[int, ...]]] = [[() for _ in self.index[0]]]
        for n in range(1, self.dims + 1):
            table = [()] * len(self.index[n])
            for key, i in self.index[n].items():
                table[i] = tuple(self.index[n - 1][f] for f in self.faces[n][key])
            face.append(table)
        return DeltaComplex(face)


# ---------------------------------------------------------------------------
# T^3 from the unit cube
# ---------------------------------------------------------------------------

_T3_NAMES = {
    frozenset({0}): "a",
    frozenset({1}): "b",
    frozenset({2}): "c",
    frozenset({0, 1}): "ab",
    frozenset({0, 2}): "ac",
    frozenset({1, 2}): "bc",
    frozenset({0, 1, 2}): "abc",
}


def build_torus3() -> DeltaComplex:
    """One-vertex T^3: the ordered unit cube split into 6 tetrahedra, with
    opposite faces identified.

    An n-simplex is an n-step monotone path through the cube; each step is a
    nonempty set of coordinate directions, steps pairwise disjoint.  Deleting
    an interior vertex merges the two adjacent steps.
    """
    import itertools

    b = _Builder(3)
    b.add(0, ())

    def faces_of_path(path):
        out = []
        for i in range(len(path) + 1):
            if i == 0:
                out.append(path[1:])
            elif i == len(path):
                out.append(path[:-1])
            else:
                out.append(path[: i - 1] + (path[i - 1] | path[i],) + path[i + 1:])
        return out

    subsets = [frozenset(s) for r in (1, 2, 3) for s in itertools.combinations(range(3), r)]
    paths_by_dim: list[list[tuple]] = [[()], [], [], []]
    for n in (1, 2, 3):
        for steps in itertools.product(subsets, repeat=n):
            used = set()
            ok = True
            for st in steps:
                if used & st:
                    ok = False
                    break
                used |= st
            if ok:
                paths_by_dim[n].append(tuple(steps))
    for n in (1, 2, 3):
        for path in paths_by_dim[n]:
            b.add(n, path, faces_of_path(path) if n > 1 else ((), ()))
    K = b.freeze()
    for path in paths_by_dim[1]:
        K.labels[(1, b.idx(1, path))] = _T3_NAMES[path[0]]
    for name, step in (("a", 0), ("b", 1), ("c", 2)):
        K.cycles[name] = (1, (b.idx(1, (frozenset({step}),)),))
    for name, pair in (("axb", (0, 1)), ("axc", (0, 2)), ("bxc", (1, 2))):
        i, j = pair
        cells = (
            b.idx(2, (frozenset({i}), frozenset({j}))),
            b.idx(2, (frozenset({j}), frozenset({i}))),
        )
        K.cycles[name] = (2, tuple(sorted(cells)))
    return K


# ---------------------------------------------------------------------------
# Genus-g surfaces
# ---------------------------------------------------------------------------


def _side_info(i: int) -> tuple[str, bool]:
    """Edge name and direction of polygon side i of the word a1 b1 a1' b1' ..."""
    j = i // 4 + 1
    r = i % 4
    return (f"a{j}" if r in (0, 2) else f"b{j}", r < 2)


def build_sigma_g(g: int) -> DeltaComplex:
    """One-vertex 4g-gon surface, fan-triangulated from polygon corner 0.

    Boundary word a1 b1 a1^-1 b1^-1 ... ;  b_1 = 2g.
    """
    if g < 1:
        raise ValueError("genus must be >= 1 (no sphere builder)")
    n_sides = 4 * g
    b = _Builder(2)
    b.add(0, "v")
    for j in range(1, g + 1):
        b.add(1, f"a{j}", ("v", "v"))
        b.add(1, f"b{j}", ("v", "v"))
    for i in range(2, n_sides - 1):
        b.add(1, f"D{i}", ("v", "v"))

    def from_corner(i: int) -> str:
        # edge from polygon corner 0 to corner i, in its canonical direction
        if i == 1:
            return "a1"
        if i == n_sides - 1:
            return f"b{g}"
        return f"D{i}"

    for i in range(1, n_sides - 1):
        name, forward = _side_info(i)
        lo, hi = from_corner(i), from_corner(i + 1)
        if forward:
            b.add(2, f"T{i}", (name, hi, lo))
        else:
            b.add(2, f"T{i}", (name, lo, hi))
    K = b.freeze()
    for j in range(1, g + 1):
        for nm in (f"a{j}", f"b{j}"):
            e = b.idx(1, nm)
            K.labels[(1, e)] = nm
            K.cycles[nm] = (1, (e,))
    return K


def build_sigma_g_rotsym(g: int) -> DeltaComplex:
    """Genus-g surface triangulated from a centre vertex of the 4g-gon.

    Two vertices, invariant under the handle rotation (corner shift by 4),
    unlike the one-vertex fan.  Use with ``rotation_automorphism``.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    n_sides = 4 * g
    b = _Builder(2)
    b.add(0, "O")
    b.add(0, "v")
    # sides connect rim points (all identified to "v"); spokes run O -> rim
    for j in range(1, g + 1):
        b.add(1, f"a{j}", ("v", "v"))
        b.add(1, f"b{j}", ("v", "v"))
    for i in range(n_sides):
        b.add(1, f"R{i}", ("v", "O"))
    for i in range(n_sides):
        name, forward = _side_info(i)
        lo, hi = f"R{i}", f"R{(i + 1) % n_sides}"
        if forward:
            b.add(2, f"U{i}", (name, hi, lo))
        else:
            b.add(2, f"U{i}", (name, lo, hi))
    K = b.freeze()
    for j in range(1, g + 1):
        for nm in (f"a{j}", f"b{j}"):
            e = b.idx(1, nm)
            K.labels[(1, e)] = nm
            K.cycles[nm] = (1, (e,))
    return K


def rotation_automorphism(K: DeltaComplex, g: int, handles: int = 1) -> SimplicialAutomorphism:
    """Handle rotation a_j -> a_{j+handles}, b_j -> b_{j+handles} of the
    rotation-symmetric genus-g builder (corner shift by 4*handles)."""
    n_sides = 4 * g
    shift = 4 * handles

    def edge_map(nm: str) -> str:
        if nm.startswith("R"):
            return f"R{(int(nm[1:]) + shift) % n_sides}"
        j = int(nm[1:])
        return f"{nm[0]}{(j - 1 + handles) % g + 1}"

    by_label: dict[str, int] = {}
    rev: list[str] = [""] * K.n_cells(1)
    for s in range(K.n_cells(1)):
        lab = K.labels.get((1, s))
        rev[s] = lab if lab else ""
    # reconstruct descriptor names for unlabelled edges (spokes) by position:
    # builder added a/b edges first (2g of them), then spokes R0..R{4g-1}
    for s in range(K.n_cells(1)):
        if not rev[s]:
            rev[s] = f"R{s - 2 * g}"
        by_label[rev[s]] = s
    perm1 = [by_label[edge_map(rev[s])] for s in range(K.n_cells(1))]
    perm2 = [(s + shift) % n_sides for s in range(K.n_cells(2))]
    phi = SimplicialAutomorphism([list(range(K.n_cells(0))), perm1, perm2])
    bad = validate_automorphism(K, phi)
    if bad:
        raise ValueError(f"rotation is not simplicial here: {bad[:3]}")
    return phi


# ---------------------------------------------------------------------------
# Products with a circle and mapping tori (prism layers)
# ---------------------------------------------------------------------------


def mapping_torus(K: DeltaComplex, phi: SimplicialAutomorphism, layers: int = 1) -> DeltaComplex:
    """K x [0, layers] in prism layers, top glued to bottom through phi.

    Cells over a p-simplex s in layer t:
      H(t,s)    horizontal copy                                (dim p)
      D(t,s,j)  diagonal: vertices 0..j at t, j+1..p at t+1    (dim p)
      S(t,s,j)  prism simplex: vertex j repeated at t and t+1  (dim p+1)
    The level-``layers`` horizontal copies are identified with H(0, phi(s)).
    """
    if layers < 1:
        raise ValueError("layers must be >= 1")
    bad = validate_automorphism(K, phi)
    if bad:
        raise ValueError(f"twist incompatible with complex: {bad[:3]}")
    n = K.dims
    b = _Builder(n + 1)

    def wrap_h(t: int, p: int, s: int):
        if t == layers:
            return ("H", 0, p, phi.perm[p][s])
        return ("H", t, p, s)

    def h_faces(t, p, s):
        return tuple(wrap_h(t, p - 1, f) for f in K.face[p][s])

    def d_faces(t, p, s, j):
        out = []
        for i in range(p + 1):
            f = K.face[p][s][i]
            if i <= j:
                out.append(wrap_h(t + 1, p - 1, f) if j == 0 else ("D", t, p - 1, f, j - 1))
            else:
                out.append(wrap_h(t, p - 1, f) if j + 1 == p else ("D", t, p - 1, f, j))
        return tuple(out)

    def s_faces(t, p, s, j):
        out = []
        for i in range(p + 2):
            if i < j:
                out.append(("S", t, p - 1, K.face[p][s][i], j - 1))
            elif i == j:
                out.append(wrap_h(t + 1, p, s) if j == 0 else ("D", t, p, s, j - 1))
            elif i == j + 1:
                out.append(wrap_h(t, p, s) if j == p else ("D", t, p, s, j))
            else:
                out.append(("S", t, p - 1, K.face[p][s][i - 1], j))
        return tuple(out)

    for t in range(layers):
        for p in range(n + 1):
            for s in range(K.n_cells(p)):
                if p == 0:
                    b.add(0, ("H", t, 0, s))
                else:
                    b.add(p, ("H", t, p, s), h_faces(t, p, s))
                    for j in range(p):
                        b.add(p, ("D", t, p, s, j), d_faces(t, p, s, j))
                for j in range(p + 1):
                    b.add(p + 1, ("S", t, p, s, j), s_faces(t, p, s, j))
    out = b.freeze()
    bad = validate(out)
    if bad:
        raise ValueError(f"mapping torus gluing failed validation: {bad[:3]}")

    identity = all(phi.perm[p][s] == s for p in range(n + 1) for s in range(K.n_cells(p)))
    for (d, s), lab in K.labels.items():
        out.labels[(d, b.idx(d, ("H", 0, d, s)))] = lab
    # horizontal copies of named cycles survive at layer 0
    for name, (d, cells) in K.cycles.items():
        out.cycles[name] = (d, tuple(sorted(b.idx(d, ("H", 0, d, c)) for c in cells)))
        # the swept cycle (name x c) closes up iff phi fixes the chain
        if all(phi.perm[d][c] in cells for c in cells):
            swept = [
                b.idx(d + 1, ("S", t, d, c, j))
                for t in range(layers)
                for c in cells
                for j in range(d + 1)
            ]
            out.cycles[f"{name}xc"] = (d + 1, tuple(sorted(swept)))
    # the vertical cycle c: follow the phi-orbit of vertex 0
    vert: list[int] = []
    v = 0
    while True:
        vert.extend(b.idx(1, ("S", t, 0, v, 0)) for t in range(layers))
        v = phi.perm[0][v]
        if v == 0:
            break
    out.cycles["c"] = (1, tuple(sorted(vert)))
    if n >= 1:
        fibre = tuple(sorted(b.idx(n, ("H", 0, n, s)) for s in range(K.n_cells(n))))
        out.cycles["fiber"] = (n, fibre)
    if identity and n >= 1:
        out.labels[(1, b.idx(1, ("S", 0, 0, 0, 0)))] = "c"
    return out


def product_with_circle(K: DeltaComplex, layers: int = 1) -> DeltaComplex:
    """Triangulated K x S^1 with the given number of prism layers."""
    return mapping_torus(K, SimplicialAutomorphism.identity(K), layers)


def build_point() -> DeltaComplex:
    return DeltaComplex([[()]])


# ---------------------------------------------------------------------------
# Barycentric subdivision (flag complex)
# ---------------------------------------------------------------------------


@dataclass
class Subdivision:
    complex: DeltaComplex
    # per dimension, per simplex: the chain of original cells of the flag
    cell_chain: list[list[tuple[Cell, ...]]]
    # per dimension, per simplex: the chain of vertex-position subsets
    subset_chain: list[list[tuple[frozenset, ...]]]

    def flag_permutation(self, n: int, s: int) -> tuple[int, ...]:
        """Insertion order of vertex positions along a full flag."""
        chain = self.subset_chain[n][s]
        prev: frozenset = frozenset()
        out = []
        for A in chain:
            new = A - prev
            if len(new) != 1:
                raise ValueError("not a full flag")
            out.append(next(iter(new)))
            prev = A
        return tuple(out)

    def flag_sign(self, n: int, s: int) -> int:
        """Parity (+1/-1) of the permutation ordering the flag's cell chain."""
        perm = self.flag_permutation(n, s)
        inversions = sum(
            1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
        )
        return -1 if inversions % 2 else 1


def barycentric_subdivide(K: DeltaComplex) -> Subdivision:
    """Subdivision whose vertices are K's cells, coloured by dimension.

    An n-simplex is a flag: a cell tau of K of dimension p together with a
    chain of vertex-position subsets A_0 < A_1 < ... < A_n = {0..p}.  The
    result records each simplex's chain of original cells (the flag map).
    """
    import itertools

    dims = K.dims
    b = _Builder(dims)

    def chains_under(p: int, length: int):
        """Strictly increasing chains A_0 < ... < A_length of nonempty subsets
        of {0..p} whose top element is the full set."""
        full = frozenset(range(p + 1))
        if length == 0:
            return [(full,)]
        proper = [
            frozenset(sub)
            for r in range(1, p + 1)
            for sub in itertools.combinations(range(p + 1), r)
        ]
        out = []

        def rec(chain):
            if len(chain) == length:
                out.append(tuple(chain) + (full,))
                return
            for fs in proper:
                if fs > chain[-1]:
                    rec(chain + [fs])

        for fs in proper:
            rec([fs])
        return out

    def face_key(p: int, s: int, chain, i: int):
        n = len(chain) - 1
        if i < n:
            return (p, s, chain[:i] + chain[i + 1:])
        newtop = chain[n - 1]
        d, idx = K.iterated_face(p, s, tuple(sorted(newtop)))
        relabel = {v: k for k, v in enumerate(sorted(newtop))}
        newchain = tuple(frozenset(relabel[v] for v in A) for A in chain[:n])
        return (d, idx, newchain)

    for p in range(dims + 1):
        for s in range(K.n_cells(p)):
            for n in range(p + 1):
                for chain in chains_under(p, n):
                    key = (p, s, chain)
                    if n == 0:
                        b.add(0, key)
                    else:
                        b.add(n, key, tuple(face_key(p, s, chain, i) for i in range(n + 1)))
    sd = b.freeze()
    cell_chain: list[list[tuple[Cell, ...]]] = [[] for _ in range(dims + 1)]
    subset_chain: list[list[tuple]] = [[] for _ in range(dims + 1)]
    for n in range(dims + 1):
        cell_chain[n] = [()] * sd.n_cells(n)
        subset_chain[n] = [()] * sd.n_cells(n)
        for (p, s, chain), i in b.index[n].items():
            cell_chain[n][i] = tuple(K.iterated_face(p, s, tuple(sorted(A))) for A in chain)
            subset_chain[n][i] = chain
    for i, fl in enumerate(cell_chain[0]):
        d, idx = fl[0]
        sd.labels[(0, i)] = f"bary:{K.label(d, idx)}"
    return Subdivision(sd, cell_chain, subset_chain)


def flag_colors(sub: Subdivision, n: int) -> list[tuple[int, ...]]:
    """Cell dimensions along each flag chain (vertex colours when n = 0)."""
    return [tuple(d for d, _ in fl) for fl in sub.cell_chain[n]]


# ---------------------------------------------------------------------------
# Cyclic covers (free deck actions for fibre-bundle twists)
# ---------------------------------------------------------------------------


def cyclic_cover(K: DeltaComplex, cochain: dict[int, int], m: int) -> tuple[DeltaComplex, SimplicialAutomorphism]:
    """m-sheeted cyclic cover classified by a mod-m 1-cocycle (values per edge).

    The sheet of a simplex is the sheet of its leading vertex; d_0 shifts the
    sheet by the cocycle value on the front edge.  Fails validation iff the
    cochain is not a signed cocycle mod m.  Returns the cover and its deck
    rotation (sheet + 1), a free automorphism of order m.
    """
    b = _Builder(K.dims)

    def front_edge(p: int, s: int) -> int:
        return K.front(p, s, 1)

    def key(p, s, sheet):
        return (p, s, sheet % m)

    for sheet in range(m):
        for p in range(K.dims + 1):
            for s in range(K.n_cells(p)):
                if p == 0:
                    b.add(0, key(0, s, sheet))
                    continue
                shift = cochain.get(front_edge(p, s), 0)
                fks = []
                for i, f in enumerate(K.face[p][s]):
                    fks.append(key(p - 1, f, sheet + shift if i == 0 else sheet))
                b.add(p, key(p, s, sheet), tuple(fks))
    cover = b.freeze()
    bad = validate(cover)
    if bad:
        raise ValueError(f"cochain is not a cocycle mod {m}: {bad[:3]}")
    perm = [
        [b.idx(p, key(p, s, sheet + 1)) for (p_, s, sheet) in b.index[p]]
        for p in range(K.dims + 1)
    ]
    deck = SimplicialAutomorphism(perm)
    for (d, s), lab in K.labels.items():
        cover.labels[(d, b.idx(d, key(d, s, 0)))] = f"{lab}~0"
    return cover, deck


def sheet_projection(K: DeltaComplex, cover: DeltaComplex, m: int) -> list[list[int]]:
    """Per-dimension map cover-cell -> base-cell for a cyclic_cover output.

    Relies on the cover builder's deterministic ordering (base cells cycle
    fastest within each sheet block).
    """
    proj = []
    for p in range(K.dims + 1):
        base = K.n_cells(p)
        proj.append([i % base for i in range(cover.n_cells(p))])
    return proj


def orientation_signs(K: DeltaComplex) -> list[int] | None:
    """Coherent orientation of the top cells: signs eps with
    sum eps_t [t] an integer cycle.  None when the complex is non-orientable
    (or the signed incidences cannot be balanced)."""
    d = K.dims
    if d == 0:
        return [1] * K.n_cells(0)
    incid: dict[int, list[tuple[int, int]]] = {}
    for t in range(K.n_cells(d)):
        for i, f in enumerate(K.face[d][t]):
            incid.setdefault(f, []).append((t, -1 if i % 2 else 1))
    eps = [0] * K.n_cells(d)
    for start in range(K.n_cells(d)):
        if eps[start]:
            continue
        eps[start] = 1
        stack = [start]
        while stack:
            t = stack.pop()
            for f in K.face[d][t]:
                entries = incid[f]
                if len(entries) != 2:
                    return None
                (ta, sa), (tb, sb) = entries
                if ta == tb:
                    if sa + sb != 0:
                        return None
                    continue
                if ta == t:
                    partner, sp, smine = tb, sb, sa
                else:
                    partner, sp, smine = ta, sa, sb
                want = -eps[t] * smine * sp
                if eps[partner] == 0:
                    eps[partner] = want
                    stack.append(partner)
                elif eps[partner] != want:
                    return None
    # final verification of every face balance
    for f, entries in incid.items():
        if sum(eps[t] * s for t, s in entries) != 0:
            return None
    return eps


def holonomy_cocycle(K: DeltaComplex, m: int, constraints: dict[int, int]) -> dict[int, int]:
    """A mod-m signed 1-cocycle (for cyclic_cover) with prescribed values on
    some edges: solve sum_i (-1)^i c(d_i f) = 0 mod m per 2-simplex f.

    m must be prime (dense elimination over Z_m).  Raises when inconsistent.
    """
    E = K.n_cells(1)
    rows: list[list[int]] = []
    rhs: list[int] = []
    for fs in K.face[2]:
        row = [0] * E
        for i, f in enumerate(fs):
            row[f] = (row[f] + (-1) ** i) % m
        rows.append(row)
        rhs.append(0)
    for e, v in constraints.items():
        row = [0] * E
        row[e] = 1
        rows.append(row)
        rhs.append(v % m)
    sol = _modp_solve(rows, rhs, m)
    if sol is None:
        raise ValueError("no cocycle with these holonomy constraints")
    return {e: sol[e] % m for e in range(E) if sol[e] % m}


def _modp_solve(rows: list[list[int]], rhs: list[int], p: int) -> list[int] | None:
    """One solution of a dense linear system over Z_p (p prime)."""
    rows = [r[:] for r in rows]
    rhs = rhs[:]
    nr, nc = len(rows), len(rows[0]) if rows else 0
    piv_of_col: dict[int, int] = {}
    r = 0
    for c in range(nc):
        sel = None
        for i in range(r, nr):
            if rows[i][c] % p:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        rhs[r], rhs[sel] = rhs[sel], rhs[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        rhs[r] = (rhs[r] * inv) % p
        for i in range(nr):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
                rhs[i] = (rhs[i] - f * rhs[r]) % p
        piv_of_col[c] = r
        r += 1
    for i in range(r, nr):
        if rhs[i] % p:
            return None
    sol = [0] * nc
    for c, i in piv_of_col.items():
        sol[c] = rhs[i] % p
    return sol
