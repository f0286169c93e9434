"""Command-line front end: geometry summaries, codeword construction and
verification, dual-weight scans, and alist/JSON export.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 refused
scan, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

from .projspace import GeometryError, ResourceError
from .polarspace import (
    bound_min_weight_dual,
    canonical_family,
    get_space,
)
from .gfcode import (
    CodeError,
    ScanRefused,
    build_incidence,
    codeword_payload,
    export_alist,
    export_json,
    geometry_payload,
    is_dual_codeword,
    scan_dual_weights,
)
from .constructions import CONSTRUCTIONS

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3
EXIT_IO = 4

# --q is always the GQ-style parameter: hermitian spaces live over q^2
_HERMITIAN = ("H", "hermitian")


@dataclass
class RunConfig:
    """Everything needed to reproduce a run byte-for-byte."""
    subcommand: str
    family: str | None = None
    n: int | None = None
    q: int | None = None
    k: int | None = None
    construction: str | None = None
    params: dict = field(default_factory=dict)
    out: str | None = None
    window: tuple | None = None
    partial: bool = False
    seed: int = 0
    threads: int = 1

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _space(family: str, n: int, q: int):
    order = q * q if canonical_family(family) == "hermitian" else q
    return get_space(family, n, order)


_KSPACE_NAMES = {0: "points", 1: "lines", 2: "planes", 3: "solids"}


def cmd_geometry(cfg: RunConfig) -> int:
    P = _space(cfg.family, cfg.n, cfg.q)
    parts = [f"points: {len(P.points)}"]
    for k in range(1, P.gen_dim + 1):
        name = _KSPACE_NAMES.get(k, f"{k}-spaces")
        parts.append(f"{name}: {len(P.singular_kspaces_with_supports(k))}")
    print(", ".join(parts))
    print(f"generator dimension: {P.gen_dim}")
    if cfg.out:
        k = cfg.k if cfg.k is not None else 1
        sha = export_json(geometry_payload(P, k), cfg.out)
        print(f"wrote {cfg.out} sha256={sha}")
    return EXIT_OK


def cmd_construct(cfg: RunConfig) -> int:
    fn = CONSTRUCTIONS[cfg.construction]
    kwargs = dict(cfg.params)
    result = fn(**kwargs)
    if result is None:
        print("search outcome: no configuration found")
        return EXIT_VERIFY
    A = result.matrix
    ok_dual, witness = is_dual_codeword(result.codeword, A)
    ok_weight = result.codeword.weight == result.predicted_weight
    bound = bound_min_weight_dual(result.space.family, result.space.rank_param,
                                  result.k, result.space.q)
    print(f"construction: {cfg.construction}")
    print(f"configuration: {result.witness}")
    print(f"weight: {result.codeword.weight} (predicted {result.predicted_weight})")
    print(f"lower bound for this code: {bound}")
    verdict = ok_dual and ok_weight
    print(f"verdict: {'PASS' if verdict else 'FAIL'}")
    if not ok_dual:
        print(f"failing incidence row: {witness}")
    if cfg.out:
        run_config = asdict(cfg)
        run_config.pop("out")  # payload bytes must not depend on the path
        meta = {"construction": cfg.construction, "params": cfg.params,
                "predicted_weight": result.predicted_weight,
                "run_config": run_config}
        sha = export_json(codeword_payload(result.codeword, meta), cfg.out)
        print(f"wrote {cfg.out} sha256={sha}")
    return EXIT_OK if verdict else EXIT_VERIFY


def cmd_scan(cfg: RunConfig) -> int:
    P = _space(cfg.family, cfg.n, cfg.q)
    A = build_incidence(P, cfg.k)
    report = scan_dual_weights(A, weight_window=cfg.window,
                               allow_partial=cfg.partial)
    print(f"mode: {report['mode']}")
    print(f"rank: {report['rank']}, nullity: {report['nullity']}")
    weights = report["weights"]
    nonzero = sorted(w for w in weights if w > 0)
    for w in sorted(weights):
        print(f"weight {w}: {weights[w]}")
    if nonzero:
        print(f"min nonzero weight: {nonzero[0]}")
        print(f"max weight: {nonzero[-1]}")
    if cfg.out:
        payload = {"schema": "polar-code-lab/v1", "kind": "scan",
                   "run_config": asdict(cfg),
                   "mode": report["mode"], "rank": report["rank"],
                   "nullity": report["nullity"],
                   "weights": {str(w): c for w, c in sorted(weights.items())}}
        sha = export_json(payload, cfg.out)
        print(f"wrote {cfg.out} sha256={sha}")
    return EXIT_OK


def cmd_export(cfg: RunConfig) -> int:
    P = _space(cfg.family, cfg.n, cfg.q)
    A = build_incidence(P, cfg.k)
    if cfg.params["target"] == "alist":
        sha = export_alist(A, cfg.out)
    else:
        sha = export_json(geometry_payload(P, cfg.k), cfg.out)
    print(f"wrote {cfg.out} sha256={sha}")
    return EXIT_OK


def _add_common(sub):
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--threads", type=int, default=1)
    sub.add_argument("--out", default=None, help="machine-readable output path")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polarlab",
        description="codes of points and k-spaces of classical polar spaces")
    subs = ap.add_subparsers(dest="subcommand", required=True)

    g = subs.add_parser("geometry", help="summarize a polar space")
    g.add_argument("--family", required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--k", type=int, default=None)
    _add_common(g)

    c = subs.add_parser("construct", help="build and verify a codeword")
    c.add_argument("name", choices=sorted(CONSTRUCTIONS))
    c.add_argument("--family", default=None)
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--i", type=int, default=None, help="switch count")
    c.add_argument("--alpha", type=int, default=None, help="nonzero symbol")
    c.add_argument("--beta", type=int, default=None, help="nonzero symbol")
    c.add_argument("--variant", default=None)
    c.add_argument("--flavor", default=None,
                   help="removed-set flavor for complement-cone")
    c.add_argument("--common-lines", type=int, default=None, dest="common_lines")
    c.add_argument("--orientation", type=int, default=None)
    _add_common(c)

    s = subs.add_parser("scan", help="scan dual codeword weights")
    s.add_argument("--family", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--window", type=int, nargs=2, default=None,
                   metavar=("LO", "HI"))
    s.add_argument("--partial", action="store_true",
                   help="allow a partial low-support scan when the full "
                        "scan is infeasible")
    _add_common(s)

    e = subs.add_parser("export", help="write the incidence matrix")
    e.add_argument("target", choices=("alist", "json"))
    e.add_argument("--family", required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--k", type=int, default=1)
    _add_common(e)
    return ap


_VARIANT_ALIASES = {
    "curve": "curve_pair", "cone": "cone_pair",
    "affine-plus-pair": "affine_plus_pair",
    "ovoid-plus-pair": "ovoid_plus_pair",
}

# which keyword arguments each construction accepts
_CONSTRUCT_PARAMS = {
    "two-reguli": ("q", "alpha"),
    "two-pencils": ("q", "beta"),
    "regulus-combination": ("q", "common_lines", "orientation", "alpha"),
    "regulus-switch": ("q", "i"),
    "complement-ovoid": ("family", "q"),
    "wq-example": ("q", "variant"),
    "hermitian-pair": ("q", "variant", "alpha"),
    "disjoint-cones": ("family", "q", "alpha"),
    "polar-pair": ("family", "n", "q", "alpha"),
    "complement-cone": ("family", "n", "q", "k", "flavor"),
}

_REQUIRED = {
    "regulus-switch": ("i",),
    "regulus-combination": ("common_lines",),
    "complement-ovoid": ("family",),
    "wq-example": ("variant",),
    "hermitian-pair": ("variant",),
    "disjoint-cones": ("family",),
    "polar-pair": ("family", "n"),
    "complement-cone": ("family", "n", "k"),
}


def _construct_config(ns) -> RunConfig:
    name = ns.name
    for req in _REQUIRED.get(name, ()):
        if getattr(ns, req) is None:
            flag = "--" + req.replace("_", "-")
            raise SystemExit(f"polarlab construct {name}: {flag} is required")
    params = {}
    for key in _CONSTRUCT_PARAMS[name]:
        val = getattr(ns, key)
        if val is None:
            continue
        if key == "variant":
            val = _VARIANT_ALIASES.get(val, val)
        params[key] = val
    return RunConfig(subcommand="construct", family=ns.family, n=ns.n,
                     q=ns.q, k=ns.k, construction=name, params=params,
                     out=ns.out, seed=ns.seed, threads=ns.threads)


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    if ns.subcommand == "construct":
        return _construct_config(ns)
    cfg = RunConfig(subcommand=ns.subcommand, family=ns.family, n=ns.n,
                    q=ns.q, out=ns.out, seed=ns.seed, threads=ns.threads)
    cfg.k = getattr(ns, "k", None)
    if ns.subcommand == "scan":
        cfg.window = tuple(ns.window) if ns.window else None
        cfg.partial = ns.partial
    if ns.subcommand == "export":
        cfg.params = {"target": ns.target}
    return cfg


_DISPATCH = {
    "geometry": cmd_geometry,
    "construct": cmd_construct,
    "scan": cmd_scan,
    "export": cmd_export,
}


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors; normalize messages we raise
        if isinstance(e.code, str):
            print(e.code, file=sys.stderr)
            return EXIT_USAGE
        return EXIT_USAGE if e.code else EXIT_OK
    if cfg.subcommand == "export" and not cfg.out:
        print("export requires --out", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _DISPATCH[cfg.subcommand](cfg)
    except ScanRefused as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (GeometryError, ResourceError, CodeError, KeyError,
            TypeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
