import pytest

from tricode import homology
from tricode.complexes import (
    DeltaComplex,
    SimplicialAutomorphism,
    barycentric_subdivide,
    build_point,
    build_sigma_g,
    build_sigma_g_rotsym,
    build_torus3,
    check_isomorphism,
    cyclic_cover,
    flag_colors,
    holonomy_cocycle,
    is_closed,
    mapping_torus,
    product_with_circle,
    rotation_automorphism,
    validate,
    validate_automorphism,
)

from conftest import single_triangle, tetrahedron_boundary


def count_cube_paths():
    # independent oracle for the T^3 cell counts: monotone disjoint-step paths
    import itertools

    subsets = [frozenset(s) for r in (1, 2, 3) for s in itertools.combinations(range(3), r)]
    counts = [1]
    for n in (1, 2, 3):
        total = 0
        for steps in itertools.product(subsets, repeat=n):
            used: set = set()
            ok = True
            for st in steps:
                if used & st:
                    ok = False
                    break
                used |= st
            total += ok
        counts.append(total)
    return counts


def test_torus3_counts(t3):
    assert t3.counts == count_cube_paths() == [1, 7, 12, 6]


def test_torus3_valid_closed(t3):
    assert validate(t3) == []
    assert is_closed(t3)


def test_torus3_betti(t3):
    assert homology.betti_all(t3) == (1, 3, 3, 1)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_sigma_g(g):
    S = build_sigma_g(g)
    assert validate(S) == []
    assert is_closed(S)
    assert homology.betti_all(S) == (1, 2 * g, 1)
    labels = sorted(v for v in S.labels.values())
    assert labels == sorted([f"a{i}" for i in range(1, g + 1)] + [f"b{i}" for i in range(1, g + 1)])


def test_sigma_g_rejects_sphere():
    with pytest.raises(ValueError):
        build_sigma_g(0)


def test_torus_counts_match_sigma1():
    assert build_sigma_g(1).counts == [1, 3, 2]


@pytest.mark.parametrize("g,layers,b1", [(1, 1, 3), (2, 2, 5), (3, 1, 7)])
def test_product_with_circle_betti(g, layers, b1):
    P = product_with_circle(build_sigma_g(g), layers)
    assert validate(P) == []
    assert is_closed(P)
    assert homology.betti(P, 1) == b1


def test_product_point_circle():
    C = product_with_circle(build_point(), 3)
    assert C.counts == [3, 3]
    assert homology.betti(C, 1) == 1


def test_product_t2_has_t3_counts(t3):
    P = product_with_circle(build_sigma_g(1), 1)
    assert P.counts == t3.counts


def test_mapping_torus_identity_is_product(sigma2):
    ident = SimplicialAutomorphism.identity(sigma2)
    M = mapping_torus(sigma2, ident, 1)
    P = product_with_circle(sigma2, 1)
    perm = [list(range(c)) for c in M.counts]
    assert check_isomorphism(M, P, perm)


def test_mapping_torus_rotation_betti():
    R = build_sigma_g_rotsym(2)
    phi = rotation_automorphism(R, 2, 1)
    assert phi.order_of() == 2
    assert validate_automorphism(R, phi) == []
    M = mapping_torus(R, phi, 1)
    assert validate(M) == []
    # rank of the invariant subspace of the handle swap is 2, plus the base class
    assert homology.betti(M, 1) == 3


def test_mapping_torus_layers(sigma2):
    M = mapping_torus(sigma2, SimplicialAutomorphism.identity(sigma2), 2)
    assert homology.betti(M, 1) == 5


def test_mapping_torus_bad_twist(sigma2):
    perm = [list(range(c)) for c in sigma2.counts]
    perm[1][0], perm[1][1] = perm[1][1], perm[1][0]  # break face-map compatibility
    with pytest.raises(ValueError, match="twist incompatible"):
        mapping_torus(sigma2, SimplicialAutomorphism(perm), 1)


def test_euler_characteristic_matches_betti():
    for K in (build_torus3(), build_sigma_g(2), product_with_circle(build_sigma_g(2), 1)):
        chi_cells = K.euler_characteristic()
        chi_betti = sum((-1) ** n * homology.betti(K, n) for n in range(K.dims + 1))
        assert chi_cells == chi_betti


def test_validator_detects_range_violation(t3):
    face = [list(map(list, f)) for f in t3.face]
    face[2][0][1] = 99
    bad = validate(DeltaComplex([[() for _ in face[0]]] + [[tuple(r) for r in f] for f in face[1:]]))
    assert any("out of range" in b for b in bad)
    assert len(bad) == 1


def test_validator_detects_identity_violation(t3):
    face = [list(map(list, f)) for f in t3.face]
    # swap two faces of one tetrahedron: breaks d_i d_j = d_{j-1} d_i
    face[3][0][0], face[3][0][1] = face[3][0][1], face[3][0][0]
    K = DeltaComplex([[() for _ in face[0]]] + [[tuple(r) for r in f] for f in face[1:]])
    bad = validate(K)
    assert any("d_" in b and "simplex 0" in b for b in bad)


def test_subdivide_single_triangle():
    sub = barycentric_subdivide(single_triangle())
    assert sub.complex.counts == [7, 12, 6]
    assert validate(sub.complex) == []


def test_subdivide_t3_flags(t3):
    sub = barycentric_subdivide(t3)
    assert sub.complex.n_cells(3) == 6 * 24
    colors = flag_colors(sub, 0)
    assert set(c[0] for c in colors) == {0, 1, 2, 3}


def test_subdivide_preserves_betti(t3, sigma2):
    for K in (t3, sigma2):
        sub = barycentric_subdivide(K)
        assert validate(sub.complex) == []
        assert homology.betti_all(sub.complex) == homology.betti_all(K)


def test_orientation_signs(t3, sigma2):
    from tricode.complexes import orientation_signs

    for K in (t3, sigma2, product_with_circle(build_sigma_g(2), 1)):
        eps = orientation_signs(K)
        assert eps is not None
        assert set(eps) <= {1, -1}
        # signed top chain is an integer cycle
        acc = {}
        for t, fs in enumerate(K.face[K.dims]):
            for i, f in enumerate(fs):
                acc[f] = acc.get(f, 0) + eps[t] * (-1 if i % 2 else 1)
        assert all(v == 0 for v in acc.values())


def test_subdivision_flag_signs_alternate(t3):
    # the canonical colouring (permutation parity x ambient orientation)
    # alternates across every shared 2-face of the subdivision
    from tricode.codes import color_code

    code = color_code(t3)
    sub = barycentric_subdivide(t3)
    sd = sub.complex
    D = sd.dims
    signs = code.meta["signs"]
    by_face = {}
    for s in range(sd.n_cells(D)):
        for f in sd.face[D][s]:
            by_face.setdefault(f, []).append(s)
    for f, flags in by_face.items():
        if len(flags) == 2:
            assert signs[flags[0]] != signs[flags[1]]


def test_tetrahedron_boundary_is_sphere():
    S = tetrahedron_boundary()
    assert validate(S) == []
    assert is_closed(S)
    assert homology.betti_all(S) == (1, 0, 1)


def test_cyclic_cover_triple():
    S2 = build_sigma_g(2)
    a1 = S2.cell_index_by_label(1, "a1")
    c = holonomy_cocycle(S2, 3, {a1: 1})
    cover, deck = cyclic_cover(S2, c, 3)
    assert validate(cover) == []
    assert cover.euler_characteristic() == 3 * S2.euler_characteristic()
    assert homology.betti(cover, 1) == 8  # genus 4
    assert deck.order_of() == 3
    assert all(deck.perm[0][v] != v for v in range(cover.n_cells(0)))  # free


def test_cyclic_cover_rejects_non_cocycle():
    S2 = build_sigma_g(2)
    a1 = S2.cell_index_by_label(1, "a1")
    with pytest.raises(ValueError):
        cyclic_cover(S2, {a1: 1}, 3)  # a single edge is not a mod-3 cocycle here


def test_named_cycles_are_cycles(t3, s2xs1):
    for K in (t3, s2xs1):
        for nm, (d, cells) in K.cycles.items():
            from tricode.gf2 import vec_from_support

            z = vec_from_support(cells)
            assert homology.boundary_matrix(K, d).matvec(z) == 0, nm
