import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from tricode import complexes


@pytest.fixture(scope="session")
def t3():
    return complexes.build_torus3()


@pytest.fixture(scope="session")
def sigma2():
    return complexes.build_sigma_g(2)


@pytest.fixture(scope="session")
def s2xs1():
    return complexes.product_with_circle(complexes.build_sigma_g(2), 1)


@pytest.fixture(scope="session")
def t2xs1_2layers():
    return complexes.product_with_circle(complexes.build_sigma_g(1), 2)


def tetrahedron_boundary() -> complexes.DeltaComplex:
    """The 2-sphere as the boundary of a 3-simplex (no identifications)."""
    verts = list(range(4))
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    eidx = {e: i for i, e in enumerate(edges)}
    tris = [(i, j, k) for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4)]
    face1 = [(e[1], e[0]) for e in edges]  # d_0 = [v1], d_1 = [v0]
    face2 = [(eidx[(j, k)], eidx[(i, k)], eidx[(i, j)]) for (i, j, k) in tris]
    return complexes.DeltaComplex([[() for _ in verts], list(face1), list(face2)])


def single_triangle() -> complexes.DeltaComplex:
    face1 = [(1, 0), (2, 0), (2, 1)]  # edges 01, 02, 12 as (d0, d1)
    face2 = [(2, 1, 0)]  # triangle [v0 v1 v2]: d0 = [12], d1 = [02], d2 = [01]
    return complexes.DeltaComplex([[(), (), ()], face1, face2])


def path_graph(n: int) -> complexes.DeltaComplex:
    """n edges in a line, n+1 vertices."""
    face1 = [(i + 1, i) for i in range(n)]
    return complexes.DeltaComplex([[() for _ in range(n + 1)], face1])
