"""GF(p) linear algebra for point versus k-space incidence codes.

The code of a polar space is spanned by the rows of its point/k-space
incidence matrix over the prime field; its dual is the right nullspace.
Weight scans enumerate the dual exhaustively when the nullity is small
enough and otherwise refuse or report explicitly partial results.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .projspace import theta
from .polarspace import PolarSpace

ROW_CAP = 10 ** 6
DEFAULT_FULL_SCAN_NULLITY = 24

JSON_SCHEMA = "polar-code-lab/v1"


class CodeError(ValueError):
    pass


class ScanRefused(RuntimeError):
    pass


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 incidence of polar-space points (columns) vs k-spaces (rows)."""
    supports: tuple[tuple[int, ...], ...]
    n_cols: int
    p: int
    k: int
    q: int  # ambient field order, for the theta row-weight check

    @property
    def n_rows(self) -> int:
        return len(self.supports)

    def dense(self) -> np.ndarray:
        A = np.zeros((self.n_rows, self.n_cols), dtype=np.int64)
        for i, sup in enumerate(self.supports):
            A[i, list(sup)] = 1
        return A


@dataclass
class CodewordVec:
    """Sparse vector over GF(p): column index -> nonzero symbol."""
    support: dict[int, int]
    n_cols: int
    p: int

    def __post_init__(self):
        self.support = {c: s % self.p for c, s in self.support.items()
                        if s % self.p}

    @property
    def weight(self) -> int:
        return len(self.support)

    def __add__(self, other: "CodewordVec") -> "CodewordVec":
        if (self.n_cols, self.p) != (other.n_cols, other.p):
            raise CodeError("incompatible codeword vectors")
        out = dict(self.support)
        for c, s in other.support.items():
            t = (out.get(c, 0) + s) % self.p
            if t:
                out[c] = t
            else:
                out.pop(c, None)
        return CodewordVec(out, self.n_cols, self.p)

    def scaled(self, a: int) -> "CodewordVec":
        a %= self.p
        if a == 0:
            return CodewordVec({}, self.n_cols, self.p)
        return CodewordVec({c: (s * a) % self.p for c, s in self.support.items()},
                           self.n_cols, self.p)

    def dense(self) -> np.ndarray:
        v = np.zeros(self.n_cols, dtype=np.int64)
        for c, s in self.support.items():
            v[c] = s
        return v


@lru_cache(maxsize=None)
def build_incidence(P: PolarSpace, k: int) -> IncidenceMatrix:
    spaces = P.singular_kspaces_with_supports(k)
    if len(spaces) > ROW_CAP:
        raise CodeError(f"{len(spaces)} rows exceeds cap {ROW_CAP}")
    return IncidenceMatrix(
        supports=tuple(sup for _S, sup in spaces),
        n_cols=len(P.points),
        p=P.F.p,
        k=k,
        q=P.F.order,
    )


def is_dual_codeword(c: CodewordVec, A: IncidenceMatrix):
    """(True, None) or (False, index of the first violating row)."""
    if c.n_cols != A.n_cols or c.p != A.p:
        raise CodeError("codeword/matrix dimension or field mismatch")
    sup = c.support
    for i, row in enumerate(A.supports):
        acc = 0
        for col in row:
            acc += sup.get(col, 0)
        if acc % A.p:
            return False, i
    return True, None


def _rref_mod_p(A: np.ndarray, p: int):
    """Row reduction over GF(p); returns (reduced matrix, pivot columns)."""
    M = A.copy() % p
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        M[r] = (M[r] * pow(int(M[r, c]), -1, p)) % p
        hit = np.nonzero(M[:, c])[0]
        for i in hit:
            if i != r:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def rank_and_nullspace(A: IncidenceMatrix):
    """Rank of A over GF(p) and a basis of the dual code."""
    M, pivots = _rref_mod_p(A.dense(), A.p)
    p = A.p
    rank = len(pivots)
    free = [c for c in range(A.n_cols) if c not in pivots]
    basis = []
    for fc in free:
        sup = {fc: 1}
        for r, pc in enumerate(pivots):
            v = (-int(M[r, fc])) % p
            if v:
                sup[pc] = v
        basis.append(CodewordVec(sup, A.n_cols, p))
    return rank, basis


def _pack(c: CodewordVec) -> int:
    m = 0
    for col in c.support:
        m |= 1 << col
    return m


def scan_dual_weights(A: IncidenceMatrix,
                      max_nullity_for_full_scan: int = DEFAULT_FULL_SCAN_NULLITY,
                      weight_window: tuple[int, int] | None = None,
                      allow_partial: bool = False,
                      partial_support_bound: int = 3) -> dict:
    """Weight multiset of the dual code.

    Full scan when p^nullity <= 2^max_nullity_for_full_scan.  Otherwise a
    partial report over combinations of at most partial_support_bound
    basis vectors, but only when explicitly allowed."""
    rank, basis = rank_and_nullspace(A)
    nullity = len(basis)
    p = A.p
    full = p ** nullity <= 2 ** max_nullity_for_full_scan
    if not full and not allow_partial:
        raise ScanRefused(
            f"dual has nullity {nullity} over GF({p}); full scan needs "
            f"p^nullity <= 2^{max_nullity_for_full_scan}")
    weights: Counter[int] = Counter()
    if full:
        if p == 2:
            packed = [_pack(b) for b in basis]
            cur = 0
            weights[0] += 1
            gray_prev = 0
            for x in range(1, 1 << nullity):
                gray = x ^ (x >> 1)
                bit = (gray ^ gray_prev).bit_length() - 1
                gray_prev = gray
                cur ^= packed[bit]
                weights[cur.bit_count()] += 1
        else:
            dense = np.array([b.dense() for b in basis], dtype=np.int16)
            # tail vectors are enumerated in one numpy block, head
            # coefficients drive an outer python loop: bounded memory
            tail = 0
            while tail < nullity and p ** (tail + 1) <= 1 << 16:
                tail += 1
            T = np.zeros((1, A.n_cols), dtype=np.int16)
            for b in dense[:tail]:
                T = np.concatenate([(T + c * b) % p for c in range(p)])
            for x in range(p ** (nullity - tail)):
                head = np.zeros(A.n_cols, dtype=np.int16)
                for b in dense[tail:]:
                    x, c = divmod(x, p)
                    if c:
                        head = (head + c * b) % p
                block = (T + head) % p
                counts = np.bincount((block != 0).sum(axis=1),
                                     minlength=A.n_cols + 1)
                for w, m in enumerate(counts):
                    if m:
                        weights[w] += int(m)
        mode = "FULL"
    else:
        from itertools import combinations, product
        weights[0] += 1
        if p == 2:
            packed = [_pack(b) for b in basis]
            for size in range(1, partial_support_bound + 1):
                for idxs in combinations(range(nullity), size):
                    acc = 0
                    for i in idxs:
                        acc ^= packed[i]
                    weights[acc.bit_count()] += 1
        else:
            dense = [b.dense().astype(np.int64) for b in basis]
            for size in range(1, partial_support_bound + 1):
                for idxs in combinations(range(nullity), size):
                    for coeffs in product(range(1, p), repeat=size):
                        v = sum(c * dense[i] for i, c in zip(idxs, coeffs)) % p
                        weights[int(np.count_nonzero(v))] += 1
        mode = "PARTIAL"
    if weight_window is not None:
        lo, hi = weight_window
        weights = Counter({w: m for w, m in weights.items() if lo <= w <= hi})
    return {
        "mode": mode,
        "rank": rank,
        "nullity": nullity,
        "weights": weights,
        "window": weight_window,
    }


def primal_row_weight_check(A: IncidenceMatrix) -> bool:
    want = theta(A.k, A.q)
    return all(len(sup) == want for sup in A.supports)


def export_alist(A: IncidenceMatrix, path: str) -> str:
    """Sparse parity-check text format; rows of A are the checks."""
    if A.p != 2:
        raise CodeError("alist export is defined for binary codes only")
    col_deg = [0] * A.n_cols
    for sup in A.supports:
        for c in sup:
            col_deg[c] += 1
    cols = [[] for _ in range(A.n_cols)]
    for i, sup in enumerate(A.supports):
        for c in sup:
            cols[c].append(i + 1)
    max_col = max(col_deg) if col_deg else 0
    max_row = max((len(s) for s in A.supports), default=0)
    lines = [
        f"{A.n_cols} {A.n_rows}",
        f"{max_col} {max_row}",
        " ".join(map(str, col_deg)),
        " ".join(str(len(s)) for s in A.supports),
    ]
    for cl in cols:
        lines.append(" ".join(map(str, cl + [0] * (max_col - len(cl)))))
    for sup in A.supports:
        row = [c + 1 for c in sup]
        lines.append(" ".join(map(str, row + [0] * (max_row - len(row)))))
    data = "\n".join(lines) + "\n"
    with open(path, "w") as fh:
        fh.write(data)
    return hashlib.sha256(data.encode()).hexdigest()


def geometry_payload(P: PolarSpace, k: int) -> dict:
    A = build_incidence(P, k)
    return {
        "schema": JSON_SCHEMA,
        "geometry": {
            "family": P.family,
            "ambient_dim": P.n,
            "order": P.F.order,
            "k": k,
        },
        "points": [list(pt) for pt in P.points],
        "kspaces": [list(sup) for sup in A.supports],
    }


def codeword_payload(c: CodewordVec, meta: dict | None = None) -> dict:
    return {
        "schema": JSON_SCHEMA,
        "codeword": {
            "n_cols": c.n_cols,
            "p": c.p,
            "support": sorted(c.support.items()),
        },
        **({"meta": meta} if meta else {}),
    }


def export_json(payload: dict, path: str) -> str:
    data = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    with open(path, "w") as fh:
        fh.write(data)
    return hashlib.sha256(data.encode()).hexdigest()


def import_json(path: str) -> dict:
    with open(path) as fh:
        payload = json.load(fh)
    if payload.get("schema") != JSON_SCHEMA:
        raise CodeError(f"unsupported schema {payload.get('schema')!r}")
    return payload


def codeword_from_payload(payload: dict) -> CodewordVec:
    cw = payload["codeword"]
    return CodewordVec({int(c): int(s) for c, s in cw["support"]},
                       cw["n_cols"], cw["p"])
