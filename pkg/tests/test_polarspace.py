from fractions import Fraction

import pytest

from polarlab.projspace import GeometryError, span, subspace_points
from polarlab.polarspace import (
    bound_min_weight_dual,
    canonical_family,
    classify_plane_section,
    count_kspaces_through,
    get_space,
    make_cone,
    nucleus,
    polar_image,
    prop_counts,
    tanner_bound_elliptic_5,
    tanner_bound_hermitian_4,
)

# (family, ambient n, field order, points, generators, gen_dim)
CASES = [
    ("Q", 4, 2, 15, 15, 1),
    ("Q", 4, 3, 40, 40, 1),
    ("Qplus", 5, 2, 35, 30, 2),
    ("Qminus", 5, 2, 27, 45, 1),
    ("Qplus", 7, 2, 135, 270, 3),
    ("H", 4, 4, 165, 297, 1),
    ("H", 5, 4, 693, 891, 2),
    ("W", 3, 2, 15, 15, 1),
    ("W", 3, 4, 85, 85, 1),
]


@pytest.mark.parametrize("family,n,order,npts,ngens,gdim", CASES)
def test_point_and_generator_counts(family, n, order, npts, ngens, gdim):
    P = get_space(family, n, order)
    assert len(P.points) == npts
    assert P.gen_dim == gdim
    assert len(P.singular_kspaces_with_supports(gdim)) == ngens


def test_family_aliases():
    assert canonical_family("Qplus") == "hyperbolic"
    assert canonical_family("hyperbolic") == "hyperbolic"
    assert canonical_family("W") == "symplectic"
    with pytest.raises(GeometryError):
        canonical_family("nope")


@pytest.mark.parametrize("family,n,order", [("Q", 4, 2), ("Qplus", 5, 3),
                                            ("H", 4, 4), ("W", 3, 2)])
def test_singular_kspaces_really_singular(family, n, order):
    P = get_space(family, n, order)
    F = P.F
    for S, sup in P.singular_kspaces_with_supports(1):
        pts = subspace_points(S, F)
        assert all(x in P.index for x in pts)
        assert sorted(P.index[x] for x in pts) == sorted(sup)
        for x in pts:
            for y in pts:
                assert P.collinear(x, y)


def test_every_point_on_equally_many_lines():
    P = get_space("Q", 4, 3)
    per_point = [0] * len(P.points)
    for _S, sup in P.singular_kspaces_with_supports(1):
        for i in sup:
            per_point[i] += 1
    assert set(per_point) == {P.q + 1}


def test_polar_image_is_an_incidence_reversing_involution():
    P = get_space("Qplus", 5, 2)
    F = P.F
    for pt in P.points[:8]:
        S = span([pt], F)
        perp = polar_image(P, S)
        assert perp.dim == P.n - 1
        assert polar_image(P, perp) == S


def test_polar_image_refused_for_even_parabolic():
    P = get_space("Q", 4, 2)
    with pytest.raises(GeometryError):
        polar_image(P, span([P.points[0]], P.F))


def test_nucleus_of_even_parabolic_quadric():
    P = get_space("Q", 4, 2)
    N = nucleus(P)
    assert N not in P.index  # the nucleus is never singular
    # the nucleus is collinear (in the polarized form) with every point
    assert all(P.form.pair(N, x) == 0 for x in P.points)


@pytest.mark.parametrize("q", [2])
def test_plane_section_classification(q):
    P = get_space("H", 5, q * q)
    F = P.F
    seen = set()
    for S, _sup in P.singular_kspaces_with_supports(2)[:3]:
        seen.add(classify_plane_section(P, S))
    assert seen == {"generator"}
    pi = span([(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)], F)
    assert classify_plane_section(P, pi) == "hermitian_curve"


def test_make_cone_sizes():
    # cone over an elliptic-quadric base from a singular vertex point
    P = get_space("Qminus", 5, 2)
    F = P.F
    base_amb = span([(0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0),
                     (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)], F)
    base = [x for x in subspace_points(base_amb, F) if x in P.index]
    vertex = span([(0, 0, 1, 0, 0, 0)], F)
    # vertex lies inside the base span: size check must refuse
    with pytest.raises(GeometryError):
        make_cone(vertex, base, F)
    vertex = span([(1, 0, 0, 0, 0, 0)], F)
    cone = make_cone(vertex, base, F)
    assert len(cone.points) == P.q * len(base) + 1
    trunc = make_cone(vertex, base, F, truncated=True)
    assert len(trunc.points) == len(cone.points) - 1


def test_count_kspaces_through_point_and_pair():
    P = get_space("Qplus", 5, 2)
    pt = P.points[0]
    assert count_kspaces_through(P, 2, pt) == 6
    # a collinear pair spans a singular line; 2 planes through each
    other = next(x for x in P.points[1:] if P.collinear(pt, x))
    assert count_kspaces_through(P, 2, (pt, other)) == 2


def test_prop_counts_match_enumeration():
    for family, n, k, ambient, order in [
        ("hyperbolic", 2, 1, 5, 2),
        ("hyperbolic", 2, 2, 5, 2),
        ("parabolic", 2, 1, 4, 3),
        ("elliptic", 2, 1, 5, 2),
        ("hermitian", 5, 2, 5, 4),
    ]:
        fam_cli = {"hyperbolic": "Qplus", "parabolic": "Q",
                   "elliptic": "Qminus", "hermitian": "H"}[family]
        P = get_space(fam_cli, ambient, order)
        M, N = prop_counts(family, n, k, P.q)
        pt = P.points[0]
        assert M == count_kspaces_through(P, k, pt)
        other = next(x for x in P.points[1:] if P.collinear(pt, x))
        assert N == count_kspaces_through(P, k, (pt, other))
        assert M == Fraction(int(M)) and N == Fraction(int(N))


def test_bounds():
    assert bound_min_weight_dual("hyperbolic", 2, 2, 2) == 4
    assert bound_min_weight_dual("hermitian", 5, 2, 2) == 10
    assert bound_min_weight_dual("elliptic", 2, 1, 2) == tanner_bound_elliptic_5(2) == 12
    assert bound_min_weight_dual("hermitian", 4, 1, 2) == tanner_bound_hermitian_4(2) == 30
    assert tanner_bound_elliptic_5(3) == 32
