"""Points and subspaces of PG(n,q) with canonical representatives.

Points are tuples of field-element ints, normalized so the first nonzero
coordinate is 1.  Subspaces are frozen dataclasses holding a reduced
row-echelon basis, which is the unique canonical representative: equality
of subspaces is equality of basis matrices.

The global point order (lexicographic on normalized coordinate tuples)
defines the column indexing used everywhere downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .gf import FieldSpec

POINT_CAP = 10 ** 7


class GeometryError(ValueError):
    pass


class ResourceError(RuntimeError):
    pass


def theta(d: int, q: int) -> int:
    """Number of points of PG(d,q); theta(-1)=0, theta(0)=1."""
    if d < -1:
        raise GeometryError(f"theta undefined for d={d}")
    return (q ** (d + 1) - 1) // (q - 1)


def normalize_point(vec, F: FieldSpec) -> tuple[int, ...]:
    for c in vec:
        if c:
            if c == 1:
                return tuple(vec)
            s = F.inv(c)
            return tuple(F.mul(s, x) for x in vec)
    raise GeometryError("zero vector is not a projective point")


@lru_cache(maxsize=None)
def enumerate_points(n: int, F: FieldSpec) -> tuple[tuple[int, ...], ...]:
    q = F.order
    if theta(n, q) > POINT_CAP:
        raise ResourceError(f"theta({n},{q}) exceeds point cap {POINT_CAP}")
    pts = []
    for lead in range(n + 1):
        prefix = (0,) * lead + (1,)
        for rest in product(F.elements(), repeat=n - lead):
            pts.append(prefix + rest)
    pts.sort()
    assert len(pts) == theta(n, q)
    return tuple(pts)


@lru_cache(maxsize=None)
def point_index(n: int, F: FieldSpec) -> dict:
    return {pt: i for i, pt in enumerate(enumerate_points(n, F))}


@dataclass(frozen=True, order=True)
class Subspace:
    ambient: int
    basis: tuple[tuple[int, ...], ...]  # RREF rows

    @property
    def dim(self) -> int:
        return len(self.basis) - 1


def vec_add(u, v, F: FieldSpec):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_scale(c, u, F: FieldSpec):
    return tuple(F.mul(c, a) for a in u)


def rref(rows, F: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon form; zero rows dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        s = F.inv(mat[rank][col])
        if s != 1:
            mat[rank] = [F.mul(s, x) for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                c = mat[r][col]
                mat[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return tuple(tuple(r) for r in mat[:rank] if any(r))


def span(vectors, F: FieldSpec, ambient: int | None = None) -> Subspace:
    vectors = list(vectors)
    if not vectors:
        raise GeometryError("span of empty set")
    amb = (len(vectors[0]) - 1) if ambient is None else ambient
    return Subspace(amb, rref(vectors, F))


def contains_point(S: Subspace, pt, F: FieldSpec) -> bool:
    v = list(pt)
    for row in S.basis:
        lead = next(i for i, x in enumerate(row) if x)
        if v[lead]:
            c = v[lead]
            v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
    return not any(v)


def subspace_points(S: Subspace, F: FieldSpec) -> list[tuple[int, ...]]:
    """All theta(dim,q) points of S, sorted in the global point order.

    Combinations with first nonzero coefficient 1 of RREF rows are already
    normalized, so each point appears exactly once."""
    k = len(S.basis)
    pts = []
    for lead in range(k):
        for rest in product(F.elements(), repeat=k - 1 - lead):
            v = S.basis[lead]
            for c, row in zip(rest, S.basis[lead + 1:]):
                if c:
                    v = vec_add(v, vec_scale(c, row, F), F)
            pts.append(v)
    pts.sort()
    return pts


def nullspace(rows, width: int, F: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """RREF basis of {v : row . v = 0 for all rows}."""
    mat = rref(rows, F)
    pivots = [next(i for i, x in enumerate(r) if x) for r in mat]
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * width
        v[fc] = 1
        for r, pc in zip(mat, pivots):
            v[pc] = F.neg(r[fc])
        basis.append(tuple(v))
    return rref(basis, F)


def annihilator(S: Subspace, F: FieldSpec) -> tuple[tuple[int, ...], ...]:
    return nullspace(S.basis, S.ambient + 1, F)


def intersect(S: Subspace, T: Subspace, F: FieldSpec) -> Subspace | None:
    """Intersection via stacked dual constraints; None if empty."""
    rows = annihilator(S, F) + annihilator(T, F)
    basis = nullspace(rows, S.ambient + 1, F)
    if not basis:
        return None
    return Subspace(S.ambient, basis)


@lru_cache(maxsize=None)
def enumerate_lines(n: int, F: FieldSpec) -> tuple[Subspace, ...]:
    pts = enumerate_points(n, F)
    seen = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            L = span([pts[i], pts[j]], F)
            seen.setdefault(L.basis, L)
    return tuple(seen[k] for k in sorted(seen))


def hyperplanes(n: int, F: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """Hyperplanes as normalized dual coefficient vectors."""
    return enumerate_points(n, F)


def dot(u, v, F: FieldSpec) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def incidence_with_hyperplanes(points, n: int, F: FieldSpec):
    """Boolean matrix [i,j] = point i lies on hyperplane j.

    numpy fast path for characteristic 2, where vector addition is XOR."""
    import numpy as np

    duals = hyperplanes(n, F)
    if F.p == 2:
        mt = np.zeros((F.order, F.order), dtype=np.uint8)
        for a in range(F.order):
            for b in range(F.order):
                mt[a, b] = F.mul(a, b)
        P = np.array(points, dtype=np.uint8)
        D = np.array(duals, dtype=np.uint8)
        acc = np.zeros((len(points), len(duals)), dtype=np.uint8)
        for c in range(n + 1):
            acc ^= mt[np.ix_(P[:, c], D[:, c])]
        return acc == 0
    out = np.zeros((len(points), len(duals)), dtype=bool)
    for i, pt in enumerate(points):
        for j, hp in enumerate(duals):
            out[i, j] = dot(pt, hp, F) == 0
    return out
