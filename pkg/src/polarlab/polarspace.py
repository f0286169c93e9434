"""Classical polar spaces: quadrics, Hermitian varieties, symplectic space.

Standard coordinate forms (fixed for reproducibility):

  hyperbolic  Q+(2n+1,q):  x0 x1 + x2 x3 + ... + x_{2n} x_{2n+1}
  parabolic   Q(2n,q):     x0^2 + x1 x2 + ... + x_{2n-1} x_{2n}
  elliptic    Q-(2n+1,q):  f(x0,x1) + x2 x3 + ... + x_{2n} x_{2n+1},
              f the lexicographically least irreducible binary quadratic
  hermitian   H(n,q^2):    x0^{q+1} + ... + x_n^{q+1}
  symplectic  W(q) in PG(3,q): x0 y1 - x1 y0 + x2 y3 - x3 y2

Singular k-spaces are enumerated by depth-first extension inside perps
with canonical-form deduplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil

import numpy as np

from .gf import FieldSpec, field_of_order
from .projspace import (
    GeometryError,
    Subspace,
    enumerate_points,
    normalize_point,
    nullspace,
    span,
    subspace_points,
    theta,
)

FAMILIES = ("hyperbolic", "parabolic", "elliptic", "hermitian", "symplectic")

FAMILY_ALIASES = {
    "Qplus": "hyperbolic",
    "Q": "parabolic",
    "Qminus": "elliptic",
    "H": "hermitian",
    "W": "symplectic",
}


def canonical_family(name: str) -> str:
    fam = FAMILY_ALIASES.get(name, name)
    if fam not in FAMILIES:
        raise GeometryError(f"unknown family {name!r}")
    return fam


def least_irreducible_binary_quadratic(F: FieldSpec) -> tuple[int, int]:
    """Least (b,c) with t^2 + b t + c irreducible over F."""
    for b in F.elements():
        for c in F.elements():
            # f(t) = t^2 + b t + c has no root in F
            if all(F.add(F.add(F.mul(t, t), F.mul(b, t)), c) for t in F.elements()):
                return b, c
    raise GeometryError("no irreducible binary quadratic found")


@dataclass(frozen=True)
class FormSpec:
    family: str
    ambient_dim: int
    field: FieldSpec
    matrix: tuple[tuple[int, ...], ...]

    def evaluate(self, x) -> int:
        """Value of the form at a vector: Q(x), h(x,x), or b(x,x)=0."""
        F = self.field
        if self.family == "symplectic":
            return 0
        acc = 0
        if self.family == "hermitian":
            for c in x:
                if c:
                    acc = F.add(acc, F.mul(c, F.conj(c)))
            return acc
        A = self.matrix
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j in range(i, len(x)):
                if A[i][j] and x[j]:
                    acc = F.add(acc, F.mul(A[i][j], F.mul(xi, x[j])))
        return acc

    def bilinear_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of the associated reflexive form: the polarized form
        A + A^T for quadrics, the form matrix itself otherwise."""
        F = self.field
        A = self.matrix
        n = len(A)
        if self.family in ("hermitian", "symplectic"):
            return A
        return tuple(
            tuple(F.add(A[i][j], A[j][i]) for j in range(n)) for i in range(n)
        )

    def pair(self, x, y) -> int:
        """b(x,y), or h(x,y) for the hermitian family."""
        F = self.field
        B = self.bilinear_matrix()
        conj = self.family == "hermitian"
        acc = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = B[i]
            for j, yj in enumerate(y):
                if row[j] and yj:
                    t = F.conj(yj) if conj else yj
                    acc = F.add(acc, F.mul(row[j], F.mul(xi, t)))
        return acc


def _standard_matrix(family: str, n: int, F: FieldSpec):
    m = [[0] * (n + 1) for _ in range(n + 1)]
    if family == "hyperbolic":
        if n % 2 == 0:
            raise GeometryError("hyperbolic quadric needs odd ambient dimension")
        for i in range(0, n, 2):
            m[i][i + 1] = 1
    elif family == "parabolic":
        if n % 2:
            raise GeometryError("parabolic quadric needs even ambient dimension")
        m[0][0] = 1
        for i in range(1, n, 2):
            m[i][i + 1] = 1
    elif family == "elliptic":
        if n % 2 == 0:
            raise GeometryError("elliptic quadric needs odd ambient dimension")
        b, c = least_irreducible_binary_quadratic(F)
        m[0][0] = 1
        m[0][1] = b
        m[1][1] = c
        for i in range(2, n, 2):
            m[i][i + 1] = 1
    elif family == "hermitian":
        for i in range(n + 1):
            m[i][i] = 1
    elif family == "symplectic":
        if n != 3:
            raise GeometryError("symplectic space is modeled in PG(3,q) only")
        one, neg = 1, F.neg(1)
        m[0][1], m[1][0] = one, neg
        m[2][3], m[3][2] = one, neg
    return tuple(tuple(r) for r in m)


def polar_space_order(family: str, n: int, q: int) -> int:
    """Closed-form point count; q is the field order (q^2 for hermitian
    counts in terms of the square root parameter)."""
    if family == "hyperbolic":
        m = (n - 1) // 2
        return (q ** m + 1) * theta(m, q)
    if family == "parabolic":
        return theta(n - 1, q)
    if family == "elliptic":
        m = (n - 1) // 2
        return (q ** m - 1) * (q ** (m + 1) + 1) // (q - 1)
    if family == "hermitian":
        r = _isqrt_exact(q)
        return ((r ** (n + 1) - (-1) ** (n + 1)) * (r ** n - (-1) ** n)) // (r * r - 1)
    if family == "symplectic":
        return theta(n, q)
    raise GeometryError(f"unknown family {family!r}")


def _isqrt_exact(q: int) -> int:
    r = round(q ** 0.5)
    if r * r != q:
        raise GeometryError(f"hermitian family needs a square field order, got {q}")
    return r


def generator_dimension(family: str, n: int) -> int:
    if family == "hyperbolic":
        return (n - 1) // 2
    if family in ("parabolic", "elliptic"):
        return n // 2 - 1 if family == "parabolic" else (n - 1) // 2 - 1
    if family == "hermitian":
        return (n - 1) // 2
    if family == "symplectic":
        return 1
    raise GeometryError(f"unknown family {family!r}")


@lru_cache(maxsize=None)
def _np_tables(F: FieldSpec):
    q = F.order
    dt = np.uint8 if q <= 256 else np.uint16
    mul = np.zeros((q, q), dtype=dt)
    add = np.zeros((q, q), dtype=dt)
    for a in range(q):
        for b in range(q):
            mul[a, b] = F.mul(a, b)
            add[a, b] = F.add(a, b)
    conj = np.array([F.conj(a) for a in range(q)], dtype=dt) if F.has_conjugation else None
    return mul, add, conj


class PolarSpace:
    """A polar space with its singular points indexed in the PG order.

    Instances are immutable after construction and cached per parameter
    set, so identity hashing is safe for memoized enumeration."""

    def __init__(self, form: FormSpec):
        self.form = form
        self.family = form.family
        self.n = form.ambient_dim
        self.F = form.field
        self.q = self.F.sqrt_order if self.family == "hermitian" else self.F.order
        self.gen_dim = generator_dimension(self.family, self.n)
        ambient = enumerate_points(self.n, self.F)
        if self.family == "symplectic":
            self.points = ambient
        else:
            self.points = tuple(p for p in ambient if form.evaluate(p) == 0)
        expected = polar_space_order(self.family, self.n, self.F.order)
        if len(self.points) != expected:
            raise GeometryError(
                f"point count {len(self.points)} != closed form {expected}")
        self.index = {p: i for i, p in enumerate(self.points)}
        self._check_nondegenerate()
        self._adj = None
        self._kspace_cache = {}

    def __repr__(self):
        names = {v: k for k, v in FAMILY_ALIASES.items()}
        return f"{names[self.family]}({self.n},{self.F.order})"

    def _check_nondegenerate(self):
        B = self.form.bilinear_matrix()
        rad = nullspace(B, self.n + 1, self.F)
        if self.family in ("hermitian", "symplectic"):
            if rad:
                raise GeometryError("degenerate form")
        else:
            # even-q parabolic has a bilinear radical (the nucleus), but the
            # quadric itself is non-singular: no radical point lies on it
            for v in rad:
                if self.form.evaluate(v) == 0:
                    raise GeometryError("singular quadric")

    @property
    def rank_param(self) -> int:
        """The family parameter n used by the counting formulas: ambient
        dimension for hermitian spaces, half the (adjusted) ambient
        dimension for quadrics, and 2 for the symplectic GQ."""
        if self.family == "hermitian":
            return self.n
        if self.family == "parabolic":
            return self.n // 2
        if self.family == "symplectic":
            return 2
        return (self.n - 1) // 2

    def is_singular(self, pt) -> bool:
        return pt in self.index

    def pair(self, x, y) -> int:
        return self.form.pair(x, y)

    def collinear(self, x, y) -> bool:
        return self.form.pair(x, y) == 0

    def adjacency(self):
        """Per-point bitmask of other points joined by a singular line."""
        if self._adj is not None:
            return self._adj
        mul, add, conj = _np_tables(self.F)
        X = np.array(self.points, dtype=mul.dtype)
        Y = X if conj is None or self.family != "hermitian" else conj[X]
        B = self.form.bilinear_matrix()
        N = len(self.points)
        acc = np.zeros((N, N), dtype=mul.dtype)
        for i in range(self.n + 1):
            for j in range(self.n + 1):
                if B[i][j]:
                    term = mul[mul[B[i][j], X[:, i]][:, None], Y[None, :, j]]
                    acc = add[acc, term]
        zero = acc == 0
        np.fill_diagonal(zero, False)
        packed = np.packbits(zero, axis=1, bitorder="little")
        self._adj = [int.from_bytes(row.tobytes(), "little") for row in packed]
        return self._adj

    def line_points(self, i: int, j: int) -> list[int]:
        """Indices of the q+1 points on the singular line through two
        collinear singular points."""
        F = self.F
        x, y = self.points[i], self.points[j]
        out = [i, j]
        for t in F.elements():
            if t:
                v = normalize_point(
                    tuple(F.add(a, F.mul(t, b)) for a, b in zip(y, x)), F)
                out.append(self.index[v])
        out.sort()
        return out

    def singular_kspaces_with_supports(self, k: int):
        """All totally singular k-spaces with their point-index supports,
        ordered by support tuple."""
        if not 0 <= k <= self.gen_dim:
            raise GeometryError(f"k={k} out of range [0, {self.gen_dim}]")
        if k in self._kspace_cache:
            return self._kspace_cache[k]
        if k == 0:
            subs = [(span([p], self.F), (i,)) for i, p in enumerate(self.points)]
            self._kspace_cache[0] = subs
            return subs
        adj = self.adjacency()
        N = len(self.points)
        # level 1: singular lines, each computed once; remember the point
        # mask of the line through every collinear pair for reuse below
        pair_line: dict[tuple[int, int], int] = {}
        nodes: dict[int, tuple[tuple[int, ...], int]] = {}
        for i in range(N):
            m = adj[i] >> (i + 1)
            j = i + 1
            while m:
                step = (m & -m).bit_length()
                j += step - 1
                m >>= step
                if (i, j) not in pair_line:
                    lp = self.line_points(i, j)
                    lm = 0
                    for a in lp:
                        lm |= 1 << a
                    for a_pos, a in enumerate(lp):
                        for b in lp[a_pos + 1:]:
                            pair_line[(a, b)] = lm
                    common = adj[lp[0]]
                    for a in lp[1:]:
                        common &= adj[a]
                    nodes[lm] = ((i, j), common)
                j += 1
        # extend level by level: add a point from the common perp with
        # index above the last spanning point, dedupe by point mask
        for _level in range(2, k + 1):
            nxt: dict[int, tuple[tuple[int, ...], int]] = {}
            for mask, (spans, common) in nodes.items():
                cand = common & ~mask
                cand >>= spans[-1] + 1
                p = spans[-1] + 1
                while cand:
                    step = (cand & -cand).bit_length()
                    p += step - 1
                    cand >>= step
                    newmask = mask | (1 << p)
                    m = mask
                    a = 0
                    while m:
                        s = (m & -m).bit_length()
                        a += s - 1
                        m >>= s
                        lo, hi = (a, p) if a < p else (p, a)
                        newmask |= pair_line[(lo, hi)]
                        a += 1
                    if newmask not in nxt:
                        nxt[newmask] = (spans + (p,), common & adj[p])
                    p += 1
            nodes = nxt
        out = []
        for mask, (spans, _common) in nodes.items():
            support = []
            p = 0
            m = mask
            while m:
                s = (m & -m).bit_length()
                p += s - 1
                m >>= s
                support.append(p)
                p += 1
            out.append((span([self.points[s] for s in spans], self.F),
                        tuple(support)))
        out.sort(key=lambda t: t[1])
        self._kspace_cache[k] = out
        return out


def standard_polar_space(family: str, n: int, F: FieldSpec) -> PolarSpace:
    fam = canonical_family(family)
    if fam == "hermitian" and not F.has_conjugation:
        raise GeometryError("hermitian family needs a field of square order")
    return PolarSpace(FormSpec(fam, n, F, _standard_matrix(fam, n, F)))


@lru_cache(maxsize=None)
def get_space(family: str, n: int, order: int) -> PolarSpace:
    """Cached standard polar space; order is the defining field order
    (q^2 for the hermitian family)."""
    return standard_polar_space(family, n, field_of_order(order))


def enumerate_singular_kspaces(P: PolarSpace, k: int) -> list[Subspace]:
    return [S for S, _sup in P.singular_kspaces_with_supports(k)]


def polar_image(P: PolarSpace, S: Subspace) -> Subspace:
    """The perp of S under the polarity of P."""
    F = P.F
    if P.family == "parabolic" and F.p == 2:
        raise GeometryError(
            "parabolic quadric in even characteristic has no polarity; "
            "use nucleus()")
    B = P.form.bilinear_matrix()
    conj = P.family == "hermitian"
    rows = []
    for x in S.basis:
        row = []
        for j in range(P.n + 1):
            acc = 0
            for i, xi in enumerate(x):
                if xi and B[i][j]:
                    c = F.conj(xi) if conj else xi
                    acc = F.add(acc, F.mul(c, B[i][j]))
            row.append(acc)
        rows.append(tuple(row))
    basis = nullspace(rows, P.n + 1, F)
    return Subspace(P.n, basis)


def nucleus(P: PolarSpace):
    """The radical point of the polarized form of an even-order parabolic
    quadric; lies on every tangent hyperplane."""
    if P.family != "parabolic" or P.F.p != 2:
        raise GeometryError("nucleus is defined for parabolic quadrics, q even")
    rad = nullspace(P.form.bilinear_matrix(), P.n + 1, P.F)
    assert len(rad) == 1
    return normalize_point(rad[0], P.F)


def classify_plane_section(H: PolarSpace, plane: Subspace) -> str:
    """Kind of section of H(5,q^2) by a plane, decided by point count."""
    if H.family != "hermitian" or H.n != 5:
        raise GeometryError("plane section classification needs H(5,q^2)")
    if plane.dim != 2:
        raise GeometryError("expected a plane")
    q = H.q
    count = sum(1 for p in subspace_points(plane, H.F) if p in H.index)
    kinds = {
        q ** 3 + 1: "hermitian_curve",
        q ** 3 + q ** 2 + 1: "baer_cone",
        q ** 2 + 1: "single_line",
        q ** 4 + q ** 2 + 1: "generator",
    }
    if count not in kinds:
        raise GeometryError(f"unexpected hermitian plane section size {count}")
    return kinds[count]


@dataclass(frozen=True)
class Cone:
    vertex: Subspace | None
    base: tuple[tuple[int, ...], ...]
    points: tuple[tuple[int, ...], ...]
    truncated: bool


def make_cone(vertex: Subspace | None, base, F: FieldSpec,
              truncated: bool = False) -> Cone:
    """Union of the lines joining vertex points to base points.

    The truncated cone omits the vertex.  Size must come out to
    q^(v+1)*|B| (+ theta_v when the vertex is kept); anything else means
    the base meets the vertex span badly."""
    base = tuple(base)
    if vertex is None or not vertex.basis:
        pts = sorted(set(base))
        return Cone(vertex, base, tuple(pts), truncated)
    vdim = vertex.dim
    q = F.order
    ambient = len(base[0]) if base else vertex.ambient + 1
    # vectors of the vertex span, zero included
    from itertools import product as iproduct
    vvecs = []
    for coeffs in iproduct(F.elements(), repeat=vdim + 1):
        v = [0] * ambient
        for c, row in zip(coeffs, vertex.basis):
            if c:
                v = [F.add(a, F.mul(c, b)) for a, b in zip(v, row)]
        vvecs.append(tuple(v))
    pts = set()
    for b in base:
        for w in vvecs:
            pts.add(normalize_point(tuple(F.add(x, y) for x, y in zip(b, w)), F))
    expected = q ** (vdim + 1) * len(base)
    if len(pts) != expected:
        raise GeometryError(
            f"degenerate cone: {len(pts)} points, expected {expected}")
    if not truncated:
        pts.update(subspace_points(vertex, F))
    return Cone(vertex, base, tuple(sorted(pts)), truncated)


def count_kspaces_through(P: PolarSpace, k: int, anchor) -> int:
    """Exact count of singular k-spaces through a point or through a
    collinear point pair, by enumeration."""
    if isinstance(anchor[0], tuple):
        idxs = []
        for pt in anchor:
            if pt not in P.index:
                raise GeometryError(f"{pt} is not a point of {P!r}")
            idxs.append(P.index[pt])
        if len(idxs) == 2 and not P.collinear(anchor[0], anchor[1]):
            raise GeometryError("anchor pair is not collinear")
        need = set(idxs)
    else:
        if anchor not in P.index:
            raise GeometryError(f"{anchor} is not a point of {P!r}")
        need = {P.index[anchor]}
    return sum(1 for _S, sup in P.singular_kspaces_with_supports(k)
               if need.issubset(sup))


def prop_counts(family: str, n: int, k: int, q: int) -> tuple[Fraction, Fraction]:
    """Closed-form counts (M, N): singular k-spaces through one point and
    through a collinear pair.  n as in Q+(2n+1,q), Q(2n,q), Q-(2n+1,q);
    ambient dimension for H(n,q^2); q the square-root parameter for the
    hermitian family."""
    fam = canonical_family(family)
    if fam == "symplectic":
        fam, n = "parabolic", 2
    M = Fraction(1)
    N = Fraction(1)
    if fam == "hyperbolic":
        for i in range(k):
            M *= Fraction(q ** (n - i) - 1, q ** (i + 1) - 1)
        for i in range(n - k, n):
            M *= q ** i + 1
        for i in range(k - 1):
            N *= Fraction(q ** (n - i - 1) - 1, q ** (i + 1) - 1)
        for i in range(n - k, n - 1):
            N *= q ** i + 1
    elif fam == "parabolic":
        for i in range(k):
            M *= Fraction(q ** (n - 1 - i) - 1, q ** (i + 1) - 1)
        for i in range(n - k, n):
            M *= q ** i + 1
        for i in range(k - 1):
            N *= Fraction(q ** (n - 2 - i) - 1, q ** (i + 1) - 1)
        for i in range(n - k, n - 1):
            N *= q ** i + 1
    elif fam == "elliptic":
        for i in range(k):
            M *= Fraction(q ** (n - 1 - i) - 1, q ** (i + 1) - 1)
        for i in range(n - k + 1, n + 1):
            M *= q ** i + 1
        for i in range(k - 1):
            N *= Fraction(q ** (n - 2 - i) - 1, q ** (i + 1) - 1)
        for i in range(n - k + 1, n):
            N *= q ** i + 1
    elif fam == "hermitian":
        for i in range(n - 2 * k, n):
            M *= q ** i - (-1) ** i
        for j in range(1, k + 1):
            M /= q ** (2 * j) - 1
        for i in range(n - 2 * k, n - 2):
            N *= q ** i - (-1) ** i
        for j in range(1, k):
            N /= q ** (2 * j) - 1
    assert M.denominator == 1 and N.denominator == 1
    return M, N


TANNER_ELLIPTIC_5 = "q^3+q+2"
TANNER_HERMITIAN_4 = "q^5-q^4+q^3+q^2+2"


def tanner_bound_elliptic_5(q: int) -> int:
    return q ** 3 + q + 2


def tanner_bound_hermitian_4(q: int) -> int:
    return q ** 5 - q ** 4 + q ** 3 + q ** 2 + 2


def bound_min_weight_dual(family: str, n: int, k: int, q: int) -> int:
    """Lower bound on the minimum weight of the dual code of points versus
    singular k-spaces: ceil(1 + M/N), upgraded to the eigenvalue-based
    constants for point-line codes of Q-(5,q) and H(4,q^2)."""
    fam = canonical_family(family)
    M, N = prop_counts(fam, n, k, q)
    bound = ceil(1 + Fraction(M, N))
    if fam == "elliptic" and n == 2 and k == 1:
        bound = max(bound, tanner_bound_elliptic_5(q))
    if fam == "hermitian" and n == 4 and k == 1:
        bound = max(bound, tanner_bound_hermitian_4(q))
    return bound
