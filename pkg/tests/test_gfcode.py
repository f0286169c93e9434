import json

import pytest
from hypothesis import given, strategies as st

from polarlab.polarspace import get_space
from polarlab.gfcode import (
    CodewordVec,
    ScanRefused,
    build_incidence,
    codeword_from_payload,
    codeword_payload,
    export_alist,
    export_json,
    geometry_payload,
    import_json,
    is_dual_codeword,
    primal_row_weight_check,
    rank_and_nullspace,
    scan_dual_weights,
)


def test_incidence_shape_and_row_weights():
    P = get_space("Q", 4, 2)
    A = build_incidence(P, 1)
    assert A.n_cols == 15 and len(A.supports) == 15
    assert primal_row_weight_check(A)
    dense = A.dense()
    assert dense.shape == (15, 15)
    assert all(dense[i].sum() == 3 for i in range(15))


def test_incidence_is_cached():
    P = get_space("Q", 4, 2)
    assert build_incidence(P, 1) is build_incidence(P, 1)


@given(st.lists(st.tuples(st.integers(0, 14), st.integers(1, 1)),
                min_size=0, max_size=8, unique_by=lambda t: t[0]))
def test_codeword_arithmetic_gf2(items):
    a = CodewordVec(dict(items), 15, 2)
    z = a + a
    assert z.weight == 0  # char 2: everything cancels
    assert (a + CodewordVec({}, 15, 2)).support == a.support


def test_codeword_mod_p_cleanup():
    c = CodewordVec({0: 3, 1: 2, 2: 4}, 10, 3)
    assert c.support == {1: 2, 2: 1}
    assert c.weight == 2
    d = c.scaled(2)
    assert d.support == {1: 1, 2: 2}


def test_dual_membership_witness():
    P = get_space("Q", 4, 2)
    A = build_incidence(P, 1)
    ok, row = is_dual_codeword(CodewordVec({0: 1}, 15, 2), A)
    assert not ok and row is not None
    zero = CodewordVec({}, 15, 2)
    assert is_dual_codeword(zero, A) == (True, None)


def test_rank_and_nullspace_q42():
    P = get_space("Q", 4, 2)
    A = build_incidence(P, 1)
    rank, null = rank_and_nullspace(A)
    assert rank == 10 and len(null) == 5
    for c in null:
        assert is_dual_codeword(c, A)[0]


def test_full_scan_q42():
    P = get_space("Q", 4, 2)
    A = build_incidence(P, 1)
    rep = scan_dual_weights(A)
    assert rep["mode"] == "FULL"
    assert rep["weights"] == {0: 1, 6: 10, 8: 15, 10: 6}


def test_scan_window():
    P = get_space("Q", 4, 2)
    A = build_incidence(P, 1)
    rep = scan_dual_weights(A, weight_window=(6, 6))
    assert set(rep["weights"]) == {6} and rep["weights"][6] == 10


def test_scan_odd_characteristic():
    # points vs lines of PG(2,3), mod 3: nullity small enough to scan
    from polarlab.gf import field_of_order
    from polarlab.projspace import enumerate_lines, point_index
    from polarlab.gfcode import IncidenceMatrix

    F = field_of_order(3)
    idx = point_index(2, F)
    from polarlab.projspace import subspace_points
    supports = tuple(tuple(sorted(idx[x] for x in subspace_points(L, F)))
                     for L in enumerate_lines(2, F))
    A = IncidenceMatrix(supports, 13, 3, 1, 3)
    rep = scan_dual_weights(A)
    assert rep["mode"] == "FULL"
    assert rep["rank"] + rep["nullity"] == 13
    weights = rep["weights"]
    assert sum(weights.values()) == 3 ** rep["nullity"]
    assert weights[0] == 1
    # nonzero codewords come in scalar-multiple pairs over GF(3)
    assert all(m % 2 == 0 for w, m in weights.items() if w)


def test_scan_refusal_and_partial():
    P = get_space("H", 5, 4)
    A = build_incidence(P, 2)
    with pytest.raises(ScanRefused):
        scan_dual_weights(A)
    rep = scan_dual_weights(A, allow_partial=True, partial_support_bound=1)
    assert rep["mode"] == "PARTIAL"
    assert sum(rep["weights"].values()) == rep["nullity"] + 1


def test_alist_export(tmp_path):
    P = get_space("Q", 4, 2)
    A = build_incidence(P, 1)
    path = tmp_path / "q42.alist"
    sha1 = export_alist(A, str(path))
    sha2 = export_alist(A, str(path))
    assert sha1 == sha2  # deterministic bytes
    lines = path.read_text().splitlines()
    assert lines[0] == "15 15"
    assert lines[1] == "3 3"


def test_json_roundtrip(tmp_path):
    P = get_space("Q", 4, 2)
    path = tmp_path / "geom.json"
    sha1 = export_json(geometry_payload(P, 1), str(path))
    payload = import_json(str(path))
    assert payload["schema"] == "polar-code-lab/v1"
    path2 = tmp_path / "geom2.json"
    sha2 = export_json(payload, str(path2))
    assert sha1 == sha2 and path.read_bytes() == path2.read_bytes()


def test_codeword_payload_roundtrip(tmp_path):
    c = CodewordVec({3: 1, 7: 1}, 15, 2)
    payload = codeword_payload(c, {"note": "test"})
    path = tmp_path / "cw.json"
    export_json(payload, str(path))
    back = codeword_from_payload(import_json(str(path)))
    assert back.support == c.support
    assert back.n_cols == c.n_cols and back.p == c.p
