"""Command-line front end: `hqt build|rmatrices|minimal|oracle|accept`."""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .abgroup import eta, validate_extension
from .catalog import (
    FAMILIES,
    CatalogSpec,
    InvalidSpec,
    canonical_json,
    extension_to_json,
    fingerprint,
    from_spec,
)
from .hopf import HopfAlgebra, NotK8nShape, k8n_generators
from .oracle import DimensionCapExceeded, compare, solve_all
from .rmatrix import (
    AmbientFieldTooSmall,
    UnsupportedFamily,
    classify_form,
    enumerate_all,
    enumerate_nontrivial,
    enumerate_trivial,
    minimality,
    minimality_criterion,
    verify_quasitriangular,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ValidationFailed(ValueError):
    pass


def _spec(args) -> CatalogSpec:
    return CatalogSpec(args.family, args.n, args.root_index, args.data)


def _load(args):
    data = from_spec(_spec(args))
    rep = validate_extension(data)
    if not rep.ok:
        raise ValidationFailed(f"extension data fails: {rep.failures[:3]}")
    return data, HopfAlgebra(data)


def _eta_ab(data):
    G = data.group
    if len(G.invariants) < 2:
        return None
    v = eta(data)(G.generator(0), G.generator(1))
    return str(v.coeffs[0]) if v.is_rational() else repr(v)


def _header(data) -> dict:
    return {"fingerprint": fingerprint(data), "ambient_order": data.order}


def _emit(args, obj, text: str):
    payload = canonical_json(obj) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    if args.json:
        sys.stdout.write(payload)
    else:
        print(text)


def _item(H, R, idx: int) -> dict:
    m = minimality(H, R)
    return {
        "index": idx,
        "form": classify_form(R),
        "verified": verify_quasitriangular(H, R).ok,
        "minimality": m.verdict,
        "span_dim": m.span_dim,
        "R": R.to_json(),
    }


# ---------------------------------------------------------------------------


def cmd_build(args) -> int:
    data, H = _load(args)
    obj = {**_header(data), "dim": H.dim, "eta_ab": _eta_ab(data), "valid": True}
    if args.dump:
        obj["data"] = extension_to_json(data)
    if args.dump and not args.json and not args.out:
        sys.stdout.write(canonical_json(obj) + "\n")
        return EXIT_OK
    _emit(args, obj, f"dim {H.dim}, eta(a,b) = {obj['eta_ab']}, fingerprint {obj['fingerprint']}")
    return EXIT_OK


def cmd_rmatrices(args) -> int:
    data, H = _load(args)
    obj = _header(data)
    if args.trivial_only:
        Rs = enumerate_trivial(H)
    elif args.nontrivial_only:
        Rs = enumerate_nontrivial(H)
    else:
        try:
            Rs = enumerate_all(H)
        except UnsupportedFamily:
            if not args.oracle:
                raise
            Rs = None
    if args.oracle:
        res = solve_all(H)
        obj["oracle"] = {"exhaustive": res.exhaustive, "ambient_order": res.ambient_order, "count": len(res.solutions)}
        if Rs is not None:
            diff = compare(res, Rs)
            obj["diff"] = {"only_oracle": len(diff.only_oracle), "only_constructed": len(diff.only_constructed)}
        else:
            Rs = res.solutions
    obj["items"] = [_item(H, R, i) for i, R in enumerate(Rs)]
    lines = [f"{len(Rs)} R-matrices ({obj['fingerprint']})"]
    lines += [f"  #{it['index']}: {it['form']}, verified={it['verified']}, {it['minimality']}" for it in obj["items"]]
    if "diff" in obj:
        lines.append(f"oracle: {obj['oracle']['count']} solutions, exhaustive={obj['oracle']['exhaustive']}, diff={obj['diff']}")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_minimal(args) -> int:
    data, H = _load(args)
    n, a, b = k8n_generators(data)
    crit = minimality_criterion(H)
    members = []
    for R in crit.minimal_set:
        members.append(
            {
                "alpha": R.get(4, a, a).to_json(),
                "beta": R.get(4, a, H.group.mul[a][b]).to_json(),
                "verified_minimal": minimality(H, R).minimal,
                "R": R.to_json(),
            }
        )
    obj = {
        **_header(data),
        "n": n,
        "eta_ab": crit.eta_ab,
        "verdict": crit.verdict,
        "omega_witnesses": [w.to_json() for w in crit.omega_witnesses],
        "minimal_set": members,
    }
    text = f"{crit.verdict}; omega witnesses: {[repr(w) for w in crit.omega_witnesses]}; {len(members)} minimal R"
    _emit(args, obj, text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    data, H = _load(args)
    res = solve_all(H, args.M)
    obj = {**_header(data), **res.to_json(), "issues": [list(map(str, i)) for i in res.issues]}
    _emit(args, obj, f"{len(res.solutions)} solutions in Q(z_{res.ambient_order}), exhaustive={res.exhaustive}")
    return EXIT_OK


def cmd_accept(args) -> int:
    if args.only:
        nums = []
        for tok in args.only.split(","):
            if tok in acceptance.SUBSETS:
                nums += acceptance.SUBSETS[tok]
            elif tok.isdigit() and int(tok) in acceptance.CRITERIA:
                nums.append(int(tok))
            else:
                print(f"error: unknown criterion or subset {tok!r}", file=sys.stderr)
                return EXIT_USAGE
    else:
        nums = None
    results = acceptance.run(nums)
    obj = {"passed": all(r.passed for r in results), "criteria": [r.to_json() for r in results]}
    _emit(args, obj, "\n".join(r.line() for r in results))
    return EXIT_OK if obj["passed"] else EXIT_FAIL


# ---------------------------------------------------------------------------


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hqt", description="Exact quasitriangular structures on k^G #_{sigma,tau} kZ_2.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print canonical JSON")
    common.add_argument("--out", metavar="FILE", help="also write the JSON report to FILE")
    inst = argparse.ArgumentParser(add_help=False)
    inst.add_argument("--family", choices=FAMILIES, required=True)
    inst.add_argument("--n", type=int)
    inst.add_argument("--root-index", type=int, default=0)
    inst.add_argument("--data", metavar="FILE", help="JSON sigma/tau tables (k8n_custom, flat_custom)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common, inst], help="build and validate an instance")
    b.add_argument("--dump", action="store_true", help="include the extension data tables")
    b.set_defaults(fn=cmd_build)

    r = sub.add_parser("rmatrices", parents=[common, inst], help="list R-matrices")
    r.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    g = r.add_mutually_exclusive_group()
    g.add_argument("--trivial-only", action="store_true")
    g.add_argument("--nontrivial-only", action="store_true")
    r.set_defaults(fn=cmd_rmatrices)

    m = sub.add_parser("minimal", parents=[common, inst], help="minimality verdict for K(8n) data")
    m.set_defaults(fn=cmd_minimal)

    o = sub.add_parser("oracle", parents=[common, inst], help="brute-force every R-matrix")
    o.add_argument("--M", type=int, help="ambient cyclotomic order (default: the instance's)")
    o.set_defaults(fn=cmd_oracle)

    a = sub.add_parser("accept", parents=[common], help="run the acceptance suite")
    a.add_argument("--only", help="comma-separated criterion numbers or subsets: " + ", ".join(acceptance.SUBSETS))
    a.set_defaults(fn=cmd_accept)
    return p


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidSpec, ValidationFailed, NotK8nShape, UnsupportedFamily, DimensionCapExceeded, AmbientFieldTooSmall) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
