#!/usr/bin/env python3
"""Print the full table of constructed dual codewords with their exact
weights, closed-form predictions, lower bounds, and verification verdicts.

Usage: python3 scripts/weight_table.py
"""

import sys
import time

from polarlab import constructions as C
from polarlab.polarspace import bound_min_weight_dual


ROWS = [
    ("two-reguli q=2", lambda: C.cw_two_reguli(2)),
    ("two-reguli q=3", lambda: C.cw_two_reguli(3)),
    ("two-reguli q=4", lambda: C.cw_two_reguli(4)),
    ("two-pencils q=2", lambda: C.cw_two_pencils(2)),
    ("two-pencils q=3", lambda: C.cw_two_pencils(3)),
    ("two-pencils q=4", lambda: C.cw_two_pencils(4)),
    ("regulus-switch q=2 i=0", lambda: C.cw_regulus_switch(2, 0)),
    ("regulus-switch q=2 i=1", lambda: C.cw_regulus_switch(2, 1)),
    ("regulus-switch q=4 i=0", lambda: C.cw_regulus_switch(4, 0)),
    ("regulus-switch q=4 i=1", lambda: C.cw_regulus_switch(4, 1)),
    ("regulus-switch q=4 i=2", lambda: C.cw_regulus_switch(4, 2)),
    ("complement-ovoid Q(4,2)", lambda: C.cw_complement_ovoid("Q", 2)),
    ("complement-ovoid Q(4,4)", lambda: C.cw_complement_ovoid("Q", 4)),
    ("complement-ovoid Q+(5,2)", lambda: C.cw_complement_ovoid("Qplus", 2)),
    ("W(2) affine", lambda: C.cw_wq_examples(2, "affine")),
    ("W(2) affine+pair", lambda: C.cw_wq_examples(2, "affine_plus_pair")),
    ("W(2) ovoid+pair", lambda: C.cw_wq_examples(2, "ovoid_plus_pair")),
    ("W(4) affine", lambda: C.cw_wq_examples(4, "affine")),
    ("W(4) affine+pair", lambda: C.cw_wq_examples(4, "affine_plus_pair")),
    ("W(4) ovoid+pair", lambda: C.cw_wq_examples(4, "ovoid_plus_pair")),
    ("hermitian curve pair q=2", lambda: C.cw_hermitian_pair(2, "curve_pair")),
    ("hermitian cone pair q=2", lambda: C.cw_hermitian_pair(2, "cone_pair")),
    ("perp cones Q-(5,2)", lambda: C.cw_disjoint_perp_cones("Qminus", 2)),
    ("perp cones H(4,4)", lambda: C.cw_disjoint_perp_cones("H", 2)),
    ("polar pair Q+(5,2)", lambda: C.cw_polar_pair("Qplus", 2, 2)),
    ("polar pair Q+(7,2)", lambda: C.cw_polar_pair("Qplus", 3, 2)),
    ("complement Q+(7,2) parabolic", lambda: C.cw_complement_cone("Qplus", 3, 2, 1, "parabolic")),
    ("complement Q+(7,2) tangent", lambda: C.cw_complement_cone("Qplus", 3, 2, 1, "tangent")),
    ("complement Q+(7,2) k=2", lambda: C.cw_complement_cone("Qplus", 3, 2, 2)),
    ("complement Q(6,2)", lambda: C.cw_complement_cone("Q", 3, 2, 1)),
    ("complement Q-(7,2)", lambda: C.cw_complement_cone("Qminus", 3, 2, 1)),
    ("complement H(4,4)", lambda: C.cw_complement_cone("H", 4, 2, 1)),
    ("complement H(5,4)", lambda: C.cw_complement_cone("H", 5, 2, 1)),
]


def main() -> int:
    failures = 0
    print(f"{'construction':34} {'weight':>7} {'predicted':>9} "
          f"{'bound':>6} verdict")
    for label, build in ROWS:
        t0 = time.time()
        r = build()
        weight_ok, dual_ok, _witness = r.check()
        bound = bound_min_weight_dual(
            r.space.family, r.space.rank_param, r.k, r.space.q)
        verdict = "PASS" if (weight_ok and dual_ok
                             and r.codeword.weight >= bound) else "FAIL"
        if verdict == "FAIL":
            failures += 1
        print(f"{label:34} {r.codeword.weight:7d} {r.predicted_weight:9d} "
              f"{bound:6d} {verdict}  ({time.time() - t0:.2f}s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
