"""Klein correspondence: lines of PG(3,q) <-> points of Q+(5,q).

Plucker coordinates are taken in the order (p01,p02,p03,p23,p31,p12), on
which the quadric relation reads p01*p23 + p02*p31 + p03*p12 = 0.  The
fixed permutation to (p01,p23,p02,p31,p03,p12) carries the image onto the
standard hyperbolic form x0x1 + x2x3 + x4x5.

Regular spreads come from field reduction of PG(1,q^2); their reguli
through a fixed line are additive cosets of GF(q), pulled through a
Mobius map when the line is not the one at infinity.
"""

from __future__ import annotations

from functools import lru_cache

from .gf import FieldSpec, field_of_order, embed_subfield
from .projspace import (
    GeometryError,
    Subspace,
    enumerate_lines,
    enumerate_points,
    intersect,
    normalize_point,
    span,
    subspace_points,
)
from .gfcode import CodewordVec

# plucker index -> coordinate pair, in the fixed output order
_PAIRS = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))

# position of each plucker coordinate in the standard hyperbolic form
_TO_QUADRIC = (0, 2, 4, 1, 3, 5)
_FROM_QUADRIC = tuple(_TO_QUADRIC.index(i) for i in range(6))


def plucker(L: Subspace, F: FieldSpec) -> tuple[int, ...]:
    """Normalized Plucker point of a line of PG(3,q)."""
    if L.dim != 1 or L.ambient != 3:
        raise GeometryError("plucker coordinates need a line of PG(3,q)")
    x, y = L.basis
    coords = tuple(
        F.sub(F.mul(x[i], y[j]), F.mul(x[j], y[i])) for i, j in _PAIRS)
    return normalize_point(coords, F)


def klein_relation(pt, F: FieldSpec) -> int:
    p01, p02, p03, p23, p31, p12 = pt
    return F.add(F.add(F.mul(p01, p23), F.mul(p02, p31)), F.mul(p03, p12))


def to_quadric_point(pt, F: FieldSpec) -> tuple[int, ...]:
    """Permute plucker coordinates onto the standard Q+(5,q) form."""
    out = [0] * 6
    for i, pos in enumerate(_TO_QUADRIC):
        out[pos] = pt[i]
    return normalize_point(tuple(out), F)


def from_quadric_point(pt, F: FieldSpec) -> tuple[int, ...]:
    out = [0] * 6
    for i, pos in enumerate(_FROM_QUADRIC):
        out[pos] = pt[i]
    return normalize_point(tuple(out), F)


def klein_point(L: Subspace, F: FieldSpec) -> tuple[int, ...]:
    """Image of a line on the standard hyperbolic quadric Q+(5,q)."""
    return to_quadric_point(plucker(L, F), F)


@lru_cache(maxsize=None)
def _plucker_table(F: FieldSpec) -> dict:
    return {plucker(L, F): L for L in enumerate_lines(3, F)}


def inverse_plucker(pt, F: FieldSpec) -> Subspace:
    if klein_relation(pt, F) != 0:
        raise GeometryError(f"{pt} is not on the Klein quadric")
    return _plucker_table(F)[normalize_point(pt, F)]


def inverse_klein_point(pt, F: FieldSpec) -> Subspace:
    return inverse_plucker(from_quadric_point(pt, F), F)


def lines_skew(L1: Subspace, L2: Subspace, F: FieldSpec) -> bool:
    return intersect(L1, L2, F) is None


def _transversal_through(x, L2: Subspace, L3: Subspace, F: FieldSpec) -> Subspace:
    pl2 = span(list(L2.basis) + [x], F)
    pl3 = span(list(L3.basis) + [x], F)
    T = intersect(pl2, pl3, F)
    if T is None or T.dim != 1:
        raise GeometryError("no transversal line through the point")
    return T


def common_transversals(L1: Subspace, L2: Subspace, L3: Subspace,
                        F: FieldSpec) -> list[Subspace]:
    """The q+1 lines meeting three pairwise skew lines of PG(3,q)."""
    for A, B in ((L1, L2), (L1, L3), (L2, L3)):
        if not lines_skew(A, B, F):
            raise GeometryError("lines are not pairwise skew")
    out = [_transversal_through(x, L2, L3, F) for x in subspace_points(L1, F)]
    return sorted(set(out))


def regulus_through(L1: Subspace, L2: Subspace, L3: Subspace,
                    F: FieldSpec) -> list[Subspace]:
    """The q+1 pairwise skew lines through every common transversal."""
    T = common_transversals(L1, L2, L3, F)
    return common_transversals(T[0], T[1], T[2], F)


def opposite_regulus(R, F: FieldSpec) -> list[Subspace]:
    return common_transversals(R[0], R[1], R[2], F)


@lru_cache(maxsize=None)
def _field_reduction(q: int):
    """Tables for viewing PG(3,q) as PG(1,q^2) over a basis (1, xi)."""
    F = field_of_order(q)
    K = field_of_order(q * q)
    emb, back = embed_subfield(F, K)
    image = set(emb)
    xi = min(a for a in K.elements() if a not in image)
    decomp = {}
    for c0 in F.elements():
        for c1 in F.elements():
            decomp[K.add(emb[c0], K.mul(emb[c1], xi))] = (c0, c1)
    return F, K, emb, xi, decomp


def _kpair_to_line(a: int, b: int, q: int) -> Subspace:
    """Line of PG(3,q) spanned by the GF(q)-span of the GF(q^2) vector
    (a,b) under coordinates (a0,a1,b0,b1)."""
    F, K, emb, xi, decomp = _field_reduction(q)
    rows = []
    for s in (1, xi):
        sa, sb = K.mul(s, a), K.mul(s, b)
        rows.append(decomp[sa] + decomp[sb])
    return span(rows, F)


def _pg1_points(q: int):
    """Points of PG(1,q^2) as normalized pairs: (1, b) and (0, 1)."""
    _F, K, *_ = _field_reduction(q)
    return [(1, b) for b in K.elements()] + [(0, 1)]


@lru_cache(maxsize=None)
def regular_spread(q: int) -> tuple[Subspace, ...]:
    """Field-reduction spread: q^2+1 pairwise skew lines of PG(3,q)."""
    return tuple(_kpair_to_line(a, b, q) for a, b in _pg1_points(q))


@lru_cache(maxsize=None)
def _spread_line_to_kpoint(q: int) -> dict:
    return {L: ab for ab, L in zip(_pg1_points(q), regular_spread(q))}


def reguli_partition_through(T, L: Subspace, q: int) -> list[list[Subspace]]:
    """q reguli of the regular spread through L, pairwise sharing only L
    and jointly covering the spread."""
    T = list(T)
    if list(regular_spread(q)) != sorted(T, key=lambda S: S.basis) and set(T) != set(regular_spread(q)):
        raise GeometryError("expected the regular spread")
    if L not in set(T):
        raise GeometryError("line is not in the spread")
    F, K, emb, xi, decomp = _field_reduction(q)
    kpt = _spread_line_to_kpoint(q)[L]

    # Mobius map sending the K-coordinate of L to infinity; identity when
    # L is already the line at infinity (0:1), i.e. z = infinity
    def mob_inv(z):  # K value or None for infinity, back to a PG(1) pair
        if kpt == (0, 1):
            return (1, z) if z is not None else (0, 1)
        # m(z) = 1/(z - c) with c the coordinate of L; inverse z = c + 1/w
        c = kpt[1]
        if z is None:
            return (1, c)
        return (0, 1) if z == 0 else (1, K.add(c, K.inv(z)))

    subfield = [emb[c] for c in F.elements()]
    cosets: list[list[int]] = []
    seen = set()
    for a in K.elements():
        if a in seen:
            continue
        coset = sorted(K.add(a, s) for s in subfield)
        seen.update(coset)
        cosets.append(coset)
    assert len(cosets) == q
    spread_of = {ab: Ln for Ln, ab in _spread_line_to_kpoint(q).items()}
    out = []
    for coset in cosets:
        pts = [mob_inv(None)] + [mob_inv(z) for z in coset]
        reg = sorted({spread_of[normalize_pair(p, K)] for p in pts})
        if len(reg) != q + 1:
            raise GeometryError("regulus construction degenerated")
        out.append(reg)
    return out


def normalize_pair(p, K: FieldSpec) -> tuple[int, int]:
    a, b = p
    if a:
        return (1, K.mul(K.inv(a), b))
    return (0, 1)


def check_line_conditions(symbols: dict, F: FieldSpec, parity_mode: str) -> dict:
    """Check a symbol-weighted line set of PG(3,q).

    dual_codeword mode: every plane and every point sees 0 or >= 2 lines
    of the set, and the symbol sums over the lines in a plane and through
    a point vanish mod p.  odd_blocking mode: every plane and every point
    sees an odd number of lines."""
    if parity_mode not in ("dual_codeword", "odd_blocking"):
        raise GeometryError(f"unknown parity mode {parity_mode!r}")
    p = F.p
    lines = list(symbols)
    points = enumerate_points(3, F)
    planes = enumerate_points(3, F)  # dual coordinates

    def through_point(pt):
        return [L for L in lines if _on_line(pt, L, F)]

    def in_plane(hp):
        return [L for L in lines
                if all(_dot(hp, row, F) == 0 for row in L.basis)]

    for kind, items, picker in (("point", points, through_point),
                                ("plane", planes, in_plane)):
        for obj in items:
            hit = picker(obj)
            if parity_mode == "odd_blocking":
                if len(hit) % 2 == 0:
                    return {"ok": False, "condition": f"odd count at {kind}",
                            "witness": obj, "count": len(hit)}
            else:
                if len(hit) == 1:
                    return {"ok": False, "condition": f"0-or-2 at {kind}",
                            "witness": obj, "count": 1}
                if sum(symbols[L] for L in hit) % p:
                    return {"ok": False, "condition": f"symbol sum at {kind}",
                            "witness": obj}
    return {"ok": True, "condition": None, "witness": None}


def _on_line(pt, L: Subspace, F: FieldSpec) -> bool:
    from .projspace import contains_point
    return contains_point(L, pt, F)


def _dot(u, v, F: FieldSpec) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def lineset_to_codeword(symbols: dict, P: PolarSpace) -> CodewordVec:
    """Transfer a symbol-weighted line set of PG(3,q) to a sparse vector
    over the points of the standard Q+(5,q)."""
    F = P.F
    support = {}
    for L, s in symbols.items():
        pt = klein_point(L, F)
        support[P.index[pt]] = s
    return CodewordVec(support, len(P.points), F.p)
