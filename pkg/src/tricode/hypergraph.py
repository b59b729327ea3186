"""Interaction hypergraphs of logical CCZ/CZ structure and magic-state
resource accounting.

The base hypergraph has one vertex per 2-cycle basis class and one
hyperedge per unit triple intersection; lifting to the full hypergraph
triples the vertices (copy labels) and expands each hyperedge into the
3! = 6 copy permutations.  UNKNOWN-ALGEBRAIC coefficients are never
silently treated as zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .mcg import TripleForm, UNKNOWN


@dataclass
class Hypergraph:
    kind: str  # base | full
    vertices: list
    hyperedges: list[tuple]
    unknown_triples: list[tuple] = field(default_factory=list)

    def degree(self, v) -> int:
        return sum(1 for e in self.hyperedges if v in e)

    def degrees(self) -> dict:
        return {v: self.degree(v) for v in self.vertices}


def form_from_cup(K, cocycles=None, labels=None) -> TripleForm:
    """Triple form of a closed 3-complex from cup-product integrals over a
    1-cocycle basis (labels name the dual 2-cycle classes).

    Integrals with a repeated class are computed too and must vanish; a
    nonzero one has no hyperedge reading and raises.
    """
    from . import cup as cupmod

    if cocycles is None:
        named = None
        try:
            named = cupmod.named_dual_cocycles(K, 1)
        except ValueError:
            pass
        if named is not None:
            labels = [_dual_label(K, nm) for nm in named]
            cocycles = list(named.values())
        else:
            cocycles = cupmod.canonical_cocycle_basis(K, 1)
    k = len(cocycles)
    if labels is None:
        labels = [f"h{i}" for i in range(k)]
    form = TripleForm(list(labels))
    for i, j, l in itertools.combinations_with_replacement(range(k), 3):
        v = cupmod.triple_cup_integral(K, cocycles[i], cocycles[j], cocycles[l])
        if len({i, j, l}) < 3:
            if v:
                raise ValueError(
                    f"repeated-class triple integral ({i},{j},{l}) is nonzero; "
                    "no hyperedge reading"
                )
            continue
        if v:
            form.coefficients[frozenset({i, j, l})] = 1
    return form


def _dual_label(K, cycle_name: str) -> str:
    """Label of the 2-cycle class dual to a named 1-cycle, preferring the
    builder's own names."""
    from . import homology
    from .gf2 import vec_from_support, dot

    _, z1 = homology.named_cycle_vector(K, cycle_name)
    for nm, (d, cells) in K.cycles.items():
        if d != 2:
            continue
        try:
            pd = homology.poincare_dual(K, vec_from_support(cells))
        except ValueError:
            continue
        if dot(pd, z1):
            others = [
                nm2 for nm2, (d2, cells2) in K.cycles.items()
                if d2 == 2 and nm2 != nm and dot(homology.poincare_dual(K, vec_from_support(cells2)), z1)
            ]
            if not others:
                return nm
    return f"dual({cycle_name})"


def base_hypergraph(form: TripleForm) -> Hypergraph:
    """One hyperedge per unit triple-intersection coefficient.

    Raises if any requested triple is UNKNOWN-ALGEBRAIC (never guessed)."""
    unknown = [t for t, v in form.coefficients.items() if v == UNKNOWN]
    if unknown:
        raise ValueError(
            f"{len(unknown)} UNKNOWN-ALGEBRAIC coefficients; cannot build the base hypergraph"
        )
    edges = [
        tuple(form.labels[i] for i in sorted(t))
        for t, v in sorted(form.coefficients.items(), key=lambda kv: sorted(kv[0]))
        if v == 1
    ]
    return Hypergraph("base", list(form.labels), edges)


def base_hypergraph_partial(form: TripleForm) -> Hypergraph:
    """Like base_hypergraph but UNKNOWN triples are carried on the side."""
    edges = [
        tuple(form.labels[i] for i in sorted(t))
        for t, v in sorted(form.coefficients.items(), key=lambda kv: sorted(kv[0]))
        if v == 1
    ]
    unknown = [
        tuple(form.labels[i] for i in sorted(t))
        for t, v in sorted(form.coefficients.items(), key=lambda kv: sorted(kv[0]))
        if v == UNKNOWN
    ]
    return Hypergraph("base", list(form.labels), edges, unknown)


def lift_full(base: Hypergraph) -> Hypergraph:
    """Three copies of every vertex; each base hyperedge lifts to the six
    copy-permutation hyperedges."""
    if base.kind != "base":
        raise ValueError("lift_full expects a base hypergraph")
    vertices = [(v, c) for v in base.vertices for c in (1, 2, 3)]
    edges = []
    for (u, v, w) in base.hyperedges:
        for perm in itertools.permutations((1, 2, 3)):
            edges.append(((u, perm[0]), (v, perm[1]), (w, perm[2])))
    unknown = []
    for (u, v, w) in base.unknown_triples:
        for perm in itertools.permutations((1, 2, 3)):
            unknown.append(((u, perm[0]), (v, perm[1]), (w, perm[2])))
    return Hypergraph("full", vertices, edges, unknown)


def magic_state_complexity(full: Hypergraph) -> int:
    """kappa = number of logical CCZ gates = hyperedges of the full
    hypergraph = 6 x (number of triple intersection points)."""
    if full.kind != "full":
        raise ValueError("complexity is defined on the full hypergraph")
    if full.unknown_triples:
        raise ValueError("complexity undefined with UNKNOWN-ALGEBRAIC triples present")
    return len(full.hyperedges)


@dataclass
class ColoredGraph:
    """CZ interaction graph: edges that fire together share a color."""

    vertices: list
    edges: list[tuple]  # ((beta, copy_i), (gamma, copy_j))
    color: str

    def same_color_count(self) -> int:
        return len(self.edges)


def cz_interaction_graph(form: TripleForm, alpha: str, copies: tuple[int, int] = (1, 2)) -> ColoredGraph:
    """Edges (beta; i) - (gamma; j) for each unit coefficient containing the
    membrane class alpha, all firing together (one color class)."""
    if alpha not in form.labels:
        raise ValueError(f"unknown membrane class {alpha!r}")
    ai = form.labels.index(alpha)
    i, j = copies
    edges = []
    for t, v in sorted(form.coefficients.items(), key=lambda kv: sorted(kv[0])):
        if v == UNKNOWN and ai in t:
            raise ValueError(f"triple {sorted(t)} is UNKNOWN-ALGEBRAIC")
        if v != 1 or ai not in t:
            continue
        rest = sorted(t - {ai})
        beta, gamma = (form.labels[rest[0]], form.labels[rest[1]])
        edges.append(((beta, i), (gamma, j)))
        edges.append(((gamma, i), (beta, j)))
    vertices = [(lab, c) for lab in form.labels for c in sorted({i, j})]
    return ColoredGraph(vertices, edges, color=f"CZ[{alpha};{i},{j}]")


@dataclass
class DegreeReport:
    degrees: dict
    histogram: dict[int, int]
    max_degree: int
    star_like: bool

    def text(self) -> str:
        lines = [f"max degree {self.max_degree}; star-like: {self.star_like}"]
        for d in sorted(self.histogram):
            lines.append(f"  degree {d}: {self.histogram[d]} vertices")
        return "\n".join(lines)


def degree_report(h: Hypergraph) -> DegreeReport:
    """Per-vertex degrees with a star-structure verdict (max degree at least
    half the hyperedges)."""
    degs = h.degrees()
    hist: dict[int, int] = {}
    for d in degs.values():
        hist[d] = hist.get(d, 0) + 1
    mx = max(degs.values(), default=0)
    star = len(h.hyperedges) > 0 and mx >= max(1, len(h.hyperedges) / 2)
    return DegreeReport(degs, hist, mx, star)


def to_dot(h: Hypergraph) -> str:
    """DOT export; hyperedges drawn as square tri-junction nodes."""
    lines = ["graph hypergraph {"]
    names = {}
    for i, v in enumerate(h.vertices):
        names[v] = f"v{i}"
        lines.append(f'  v{i} [label="{_vstr(v)}", shape=circle];')
    for i, e in enumerate(h.hyperedges):
        lines.append(f'  e{i} [label="", shape=square, width=0.12, style=filled];')
        for v in e:
            lines.append(f"  e{i} -- {names[v]};")
    for i, e in enumerate(h.unknown_triples):
        lines.append(f'  u{i} [label="?", shape=square, style=dashed];')
        for v in e:
            lines.append(f"  u{i} -- {names[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _vstr(v) -> str:
    if isinstance(v, tuple):
        return f"{v[0]};{v[1]}"
    return str(v)
