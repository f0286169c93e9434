"""Geometric predicates: blocking sets, ovoids, spreads, covers, even-type
sets, minihypers, and line-sum decompositions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldSpec
from .projspace import (
    GeometryError,
    enumerate_points,
)
from .polarspace import PolarSpace, _np_tables


def _as_index_set(P: PolarSpace, pts):
    out = set()
    for x in pts:
        if isinstance(x, int):
            out.add(x)
        else:
            out.add(P.index[x])
    return out


def is_blocking_set(P: PolarSpace, B, k: int):
    """(True, None) or (False, first k-space missed by B)."""
    idx = _as_index_set(P, B)
    for S, sup in P.singular_kspaces_with_supports(k):
        if idx.isdisjoint(sup):
            return False, S
    return True, None


def is_ovoid(P: PolarSpace, O) -> bool:
    """Every generator meets O exactly once."""
    idx = _as_index_set(P, O)
    return all(len(idx.intersection(sup)) == 1
               for _S, sup in P.singular_kspaces_with_supports(P.gen_dim))


def _line_supports(P: PolarSpace, lines):
    table = {S: sup for S, sup in P.singular_kspaces_with_supports(1)}
    out = []
    for L in lines:
        if L not in table:
            raise GeometryError("not a singular line of the space")
        out.append(table[L])
    return out


def is_spread(P: PolarSpace, lines) -> bool:
    """Pairwise disjoint lines partitioning the point set."""
    sups = _line_supports(P, lines)
    seen: set[int] = set()
    for sup in sups:
        if seen.intersection(sup):
            return False
        seen.update(sup)
    return len(seen) == len(P.points)


def is_cover(P: PolarSpace, lines) -> bool:
    covered = set()
    for sup in _line_supports(P, lines):
        covered.update(sup)
    return len(covered) == len(P.points)


def excess_profile(P: PolarSpace, cover):
    """Point excesses mu(P)-1 of a line cover, the excess of every line of
    the space, and the total excess."""
    sups = _line_supports(P, cover)
    mult = [0] * len(P.points)
    for sup in sups:
        for i in sup:
            mult[i] += 1
    if any(m == 0 for m in mult):
        raise GeometryError("line set is not a cover")
    excess = {i: m - 1 for i, m in enumerate(mult)}
    line_excess = {S: sum(excess[i] for i in sup)
                   for S, sup in P.singular_kspaces_with_supports(1)}
    return excess, line_excess, sum(excess.values())


def find_good_line(P: PolarSpace, cover):
    """A line outside the cover all of whose points have excess zero."""
    q = P.q
    r = len(cover) - (q * q + 1)
    if not 0 <= r <= q:
        raise GeometryError(f"cover size {len(cover)} out of range")
    excess, _le, _tot = excess_profile(P, cover)
    in_cover = set(cover)
    for S, sup in P.singular_kspaces_with_supports(1):
        if S not in in_cover and all(excess[i] == 0 for i in sup):
            return S
    return None


def extract_spread(P: PolarSpace, cover):
    """Drop redundant cover lines, highest canonical index first,
    restarting after each removal; a spread if minimality lands there."""
    lines = sorted(set(cover))
    sups = {L: sup for L, sup in zip(lines, _line_supports(P, lines))}
    changed = True
    while changed:
        changed = False
        mult = [0] * len(P.points)
        for L in lines:
            for i in sups[L]:
                mult[i] += 1
        for L in reversed(lines):
            if all(mult[i] > 1 for i in sups[L]):
                lines.remove(L)
                changed = True
                break
    if len(lines) == P.q ** 2 + 1 and is_spread(P, lines):
        return lines
    return None


def extract_ovoid(P: PolarSpace, blocking):
    """Drop redundant points of a generator-blocking set, highest index
    first; an ovoid if minimality lands at q^2+1 points."""
    pts = sorted(_as_index_set(P, blocking))
    gens = [set(sup) for _S, sup in
            P.singular_kspaces_with_supports(P.gen_dim)]
    changed = True
    while changed:
        changed = False
        chosen = set(pts)
        for x in reversed(pts):
            if all(len(g.intersection(chosen)) > 1
                   for g in gens if x in g):
                pts.remove(x)
                changed = True
                break
    if len(pts) == P.q ** 2 + 1 and is_ovoid(P, pts):
        return pts
    return None


def is_even_type(P: PolarSpace, S, k: int) -> bool:
    if P.F.p != 2:
        raise GeometryError("even-type sets live in characteristic 2")
    idx = _as_index_set(P, S)
    return all(len(idx.intersection(sup)) % 2 == 0
               for _Sp, sup in P.singular_kspaces_with_supports(k))


@dataclass
class WeightedPointSet:
    weights: dict  # point tuple -> positive integer
    ambient: int
    field: FieldSpec

    def __post_init__(self):
        self.weights = {pt: w for pt, w in self.weights.items() if w > 0}

    @property
    def total(self) -> int:
        return sum(self.weights.values())


def hyperplane_weights(W: WeightedPointSet) -> np.ndarray:
    """Total weight of W in each hyperplane of PG(n,q), in the canonical
    dual order.  Table-based evaluation keeps q=8 scans fast."""
    F = W.field
    n = W.ambient
    duals = enumerate_points(n, F)
    pts = list(W.weights)
    wts = np.array([W.weights[p] for p in pts], dtype=np.int64)
    mul, add, _conj = _np_tables(F)
    X = np.array(pts, dtype=mul.dtype)
    D = np.array(duals, dtype=mul.dtype)
    acc = np.zeros((len(pts), len(duals)), dtype=mul.dtype)
    for c in range(n + 1):
        acc = add[acc, mul[X[:, c][:, None], D[None, :, c]]]
    return ((acc == 0) * wts[:, None]).sum(axis=0)


def is_minihyper(W: WeightedPointSet, f: int, m: int) -> bool:
    """Total weight f and minimum hyperplane weight exactly m."""
    if W.total != f:
        return False
    hw = hyperplane_weights(W)
    return int(hw.min()) == m


def decompose_sum_of_lines(P: PolarSpace, W: WeightedPointSet):
    """Write a weight function on Q(4,q) as a sum of x singular lines,
    by peeling a fully-covered line and recursing; None if impossible."""
    q = P.q
    total = W.total
    if total % (q + 1):
        raise GeometryError(f"total weight {total} is not a multiple of q+1")
    lines = P.singular_kspaces_with_supports(1)
    w0 = {P.index[pt]: wt for pt, wt in W.weights.items()}

    def peel(w, x):
        if x == 0:
            return [] if not w else None
        for S, sup in lines:
            if all(w.get(i, 0) > 0 for i in sup):
                w2 = dict(w)
                for i in sup:
                    w2[i] -= 1
                    if not w2[i]:
                        del w2[i]
                rest = peel(w2, x - 1)
                if rest is not None:
                    return [S] + rest
        return None

    return peel(w0, total // (q + 1))


def outside_lemma_hypothesis(x: int, q: int) -> bool:
    """The decomposition guarantee assumes x < q/2."""
    return not x < q / 2


def find_spread(P: PolarSpace):
    """First spread in canonical order, by exact-cover backtracking over
    the singular lines; None if the space has no spread."""
    lines = P.singular_kspaces_with_supports(1)
    n_pts = len(P.points)
    want = n_pts // (P.q + 1)

    def rec(covered, start, chosen):
        if len(chosen) == want:
            return list(chosen)
        lowest = min(i for i in range(n_pts) if i not in covered)
        for j in range(start, len(lines)):
            S, sup = lines[j]
            if lowest in sup and covered.isdisjoint(sup):
                got = rec(covered | set(sup), 0, chosen + [S])
                if got is not None:
                    return got
        return None

    return rec(set(), 0, [])


def find_ovoid(P: PolarSpace):
    """First ovoid in canonical order, by exact-cover backtracking:
    pick pairwise non-collinear points hitting every generator once."""
    gens = [set(sup) for _S, sup in
            P.singular_kspaces_with_supports(P.gen_dim)]
    adj = P.adjacency()
    n_pts = len(P.points)
    want = P.q ** 2 + 1

    def rec(chosen, blocked, hit):
        if len(hit) == len(gens):
            return sorted(chosen) if len(chosen) == want else None
        gi = min((i for i in range(len(gens)) if i not in hit),
                 key=lambda i: len(gens[i] - blocked))
        for x in sorted(gens[gi] - blocked):
            newly = {i for i in range(len(gens))
                     if i not in hit and x in gens[i]}
            if any(not gens[i].isdisjoint(chosen) for i in newly):
                continue
            got = rec(chosen | {x},
                      blocked | {x} | _bits(adj[x], n_pts), hit | newly)
            if got is not None:
                return got
        return None

    return rec(set(), set(), set())


def _bits(mask: int, n: int) -> set[int]:
    out = set()
    i = 0
    while mask:
        s = (mask & -mask).bit_length()
        i += s - 1
        mask >>= s
        out.add(i)
        i += 1
    return out
