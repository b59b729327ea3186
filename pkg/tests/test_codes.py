import itertools
import random

import pytest

from tricode import homology
from tricode.codes import (
    CssCode,
    color_code,
    distance,
    stabilizer_weights,
    systole_bfs,
    toric_code,
)
from tricode.complexes import (
    barycentric_subdivide,
    build_sigma_g,
    build_torus3,
    product_with_circle,
)
from tricode.gf2 import BitMatrix, dot, popcount, vec_from_support

from conftest import tetrahedron_boundary


def brute_force_min_logical(code: CssCode, sector: str) -> int | None:
    """Independent oracle: scan all 2^n supports."""
    stab, pair = (code.hz, code.logical_x) if sector == "z" else (code.hx, code.logical_z)
    commute = code.hx if sector == "z" else code.hz
    best = None
    for v in range(1, 1 << code.n):
        if commute.matvec(v) != 0:
            continue
        if not any(dot(v, p) for p in pair):
            continue
        w = popcount(v)
        if best is None or w < best:
            best = w
    return best


def test_toric_t3_one_copy(t3):
    code = toric_code(t3, 1)
    assert (code.n, code.k) == (7, 3)
    assert code.css_condition()
    assert code.check_logicals() == []
    assert code.k == homology.betti(t3, 1)


def test_toric_t3_three_copies(t3):
    code = toric_code(t3, 3)
    assert (code.n, code.k) == (21, 9)
    assert code.check_logicals() == []


def test_toric_product_copies(s2xs1):
    code = toric_code(s2xs1, 3)
    assert code.k == 15  # 3 (2g + 1) with g = 2
    assert code.check_logicals() == []


def test_toric_labels_are_dual_2cycles(t3):
    labels = toric_code(t3, 1).logical_labels()
    assert labels == [("bxc", 1), ("axc", 1), ("axb", 1)]


def test_toric_surface_code(sigma2):
    code = toric_code(sigma2, 1)
    assert code.k == 4
    assert code.check_logicals() == []


def test_color_code_t3(t3):
    code = color_code(t3)
    assert (code.n, code.k) == (144, 9)
    assert code.css_condition()
    assert code.check_logicals() == []
    signs = code.meta["signs"]
    assert signs.count(1) == signs.count(-1) == 72


def test_color_equals_three_toric(t3, s2xs1):
    for K in (t3, s2xs1):
        assert color_code(K).k == 3 * toric_code(K, 1).k


def test_color_stabilizer_weights_bounded(t3):
    code = color_code(t3)
    wt = stabilizer_weights(code)
    # weights are the flag-incidence counts of the subdivision
    sub = barycentric_subdivide(t3)
    sd = sub.complex
    D = sd.dims
    incid = [0] * sd.n_cells(0)
    for s in range(sd.n_cells(D)):
        for i in range(D + 1):
            incid[sd.iterated_face(D, s, (i,))[1]] += 1
    assert max(wt["x"]) <= max(incid)


def test_distance_t3_exact(t3):
    code = toric_code(t3, 1)
    res = distance(code, "exact")
    assert res.exact
    assert res.dz == 1 == brute_force_min_logical(code, "z")
    assert res.dx == brute_force_min_logical(code, "x")
    assert popcount(res.certificate_z) == res.dz
    assert code.hx.matvec(res.certificate_z) == 0


def test_distance_zero_k():
    S = tetrahedron_boundary()
    code = toric_code(S, 1)
    assert code.k == 0
    res = distance(code)
    assert res.dx is None and res.dz is None
    assert "undefined" in res.flagged()


def test_distance_subdivision_monotone(t3):
    base = distance(toric_code(t3, 1), sector="z")
    sub = barycentric_subdivide(t3)
    fine = distance(toric_code(sub.complex, 1), sector="z", budget=1 << 22)
    assert fine.exact and base.exact
    assert fine.dz > base.dz


def test_distance_subdivision_monotone_surface(sigma2):
    base = distance(toric_code(sigma2, 1), sector="z")
    sub = barycentric_subdivide(sigma2)
    fine = distance(toric_code(sub.complex, 1), sector="z", budget=1 << 22)
    assert fine.exact and base.exact
    assert fine.dz >= base.dz


def test_distance_invariant_under_stabilizer_basis_change(t3):
    code = toric_code(t3, 1)
    ref = distance(code)
    rng = random.Random(17)
    for _ in range(5):
        rows = list(code.hz.rows)
        mixed = []
        for i in range(len(rows)):
            v = rows[i]
            for j in range(len(rows)):
                if i != j and rng.random() < 0.3:
                    v ^= rows[j]
            mixed.append(v)
        # keep the span: re-add originals at random
        m2 = CssCode(
            code.n,
            code.hx,
            BitMatrix(len(mixed), code.n, mixed),
            code.logical_x,
            code.logical_z,
            code.meta,
        )
        if BitMatrix(len(mixed), code.n, mixed).rank() != code.hz.rank():
            continue
        res = distance(m2)
        assert (res.dx, res.dz) == (ref.dx, ref.dz)


def test_distance_budget_flag(t3):
    code = toric_code(barycentric_subdivide(t3).complex, 1)
    res = distance(code, sector="x", budget=10)
    assert not res.exact
    assert "budget" in res.note


def test_systole_bfs_upper_bound(t3):
    w, cert = systole_bfs(t3)
    assert w == 1  # single-edge loops are nontrivial on the one-vertex complex
    sub = barycentric_subdivide(t3)
    w2, cert2 = systole_bfs(sub.complex)
    assert w2 == 2
    assert popcount(cert2) == 2
    # certificate is a homologically nontrivial cycle
    assert homology.boundary_matrix(sub.complex, 1).matvec(cert2) == 0


def test_systole_bfs_through_code_api(t3):
    code = toric_code(t3, 1)
    code.meta["complex"] = t3
    res = distance(code, "systole-bfs")
    assert res.dz == 1
    assert res.flagged() == "UPPER BOUND"


def test_code_json_roundtrip(t3):
    from tricode import serialize

    code = toric_code(t3, 3)
    data = serialize.code_to_json(code)
    back = serialize.code_from_json(data)
    assert back.n == code.n and back.k == code.k
    assert back.hx.rows == code.hx.rows and back.hz.rows == code.hz.rows
    assert back.logical_x == code.logical_x
    assert back.logical_labels() == code.logical_labels()
    assert back.check_logicals() == []
