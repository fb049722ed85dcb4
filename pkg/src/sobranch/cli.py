"""Command-line front end; every library operation behind one subcommand.

Output is JSON by default (machine mode) or aligned tables with --table.
Exit codes: 0 success, 2 malformed parameters, 3 parameters outside the
supported family, 4 verification-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import __version__
from .branching import (
    diagram_to_json,
    finite_dim_branch,
    branch_enumerate,
    gp_tempered_check,
    multiplicity,
    render_diagram,
)
from .cohomology import bilinear_gate, pairing_trivial_rho
from .errors import InvalidDescriptorError, OutOfRangeError, SobranchError
from .oracle import SUITE_NAMES, default_bounds, run_suite
from .periods import (
    distinguished_subgroup,
    distinguishing_chain,
    is_aq_lambda,
    minimal_k_type_trivial_rho,
    period_value,
)
from .reps import (
    DiscreteSeries,
    EnhancedParam,
    FiniteDim,
    Nontempered,
    RepDescriptor,
    Signature,
    TemperedPS,
    classify,
    descriptor_to_json,
    enhanced_from_langlands,
    hasse_sequence,
    height,
    langlands_from_enhanced,
    signature,
    standard_sequence,
    theta_param_str,
)
from .weights import GroupTag, Weight, validate_weight


def _parse_csv_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise OutOfRangeError(f"cannot parse integer list {text!r}") from exc


def _parse_kv(text: str, positional_key: str | None = None) -> dict[str, str]:
    out: dict[str, str] = {}
    for idx, part in enumerate(text.split(";")):
        part = part.strip()
        if not part:
            continue
        if "=" in part:
            key, value = part.split("=", 1)
            out[key.strip()] = value.strip()
        elif idx == 0 and positional_key is not None:
            out[positional_key] = part
        else:
            raise OutOfRangeError(f"cannot parse parameter fragment {part!r}")
    return out


def parse_enhanced(group: GroupTag, text: str) -> EnhancedParam:
    """Parse the flag syntax "1,1,0;h=1;sig=-" into an enhanced parameter."""
    fields = _parse_kv(text, positional_key="weight")
    missing = {"weight", "h", "sig"} - fields.keys()
    if missing:
        raise OutOfRangeError(f"enhanced parameter missing {sorted(missing)} in {text!r}")
    weight = validate_weight(_parse_csv_ints(fields["weight"]), group)
    return EnhancedParam(group, weight, int(fields["h"]), Signature.parse(fields["sig"]))


def parse_langlands(group: GroupTag, text: str) -> RepDescriptor:
    """Parse "sigma=2,0;delta=+;lambda=0" and friends into a descriptor.

    The variant is inferred from the keys: weight/sig gives the
    finite-dimensional form, sigma with both delta and lambda the
    nontempered one, sigma with delta only the tempered principal series,
    sigma with lambda only the discrete series.
    """
    fields = _parse_kv(text)
    if "weight" in fields:
        return FiniteDim(
            group,
            validate_weight(_parse_csv_ints(fields["weight"]), group),
            Signature.parse(fields.get("sig", "+")),
        )
    if "sigma" not in fields:
        raise OutOfRangeError(f"langlands parameter needs sigma= in {text!r}")
    sigma = Weight(_parse_csv_ints(fields["sigma"]))
    has_delta = "delta" in fields
    has_lambda = "lambda" in fields
    if has_delta and has_lambda:
        return Nontempered(
            group, sigma, Signature.parse(fields["delta"]), int(fields["lambda"])
        )
    if has_delta:
        return TemperedPS(group, sigma, Signature.parse(fields["delta"]))
    if has_lambda:
        return DiscreteSeries(group, sigma, int(fields["lambda"]))
    raise OutOfRangeError(f"langlands parameter needs delta= or lambda= in {text!r}")


def _descriptor_input(args: argparse.Namespace, group: GroupTag) -> RepDescriptor:
    if getattr(args, "langlands", None):
        return parse_langlands(group, args.langlands)
    if getattr(args, "enhanced", None):
        return langlands_from_enhanced(parse_enhanced(group, args.enhanced))
    raise OutOfRangeError("provide --langlands or --enhanced")


def _table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(x) for x in row] for row in rows]
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in cells)) if cells else len(headers[i])
        for i in range(len(headers))
    ]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for r in cells:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(len(r))).rstrip())
    return "\n".join(lines)


def _emit(args: argparse.Namespace, payload: dict, table_text: str | None = None) -> None:
    if getattr(args, "table", False) and table_text is not None:
        print(table_text)
    else:
        print(json.dumps(payload, ensure_ascii=False, indent=2))


# ---------------------------------------------------------------- handlers


def _cmd_classify(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    s = validate_weight(_parse_csv_ints(args.weight), group)
    descriptors = classify(group, s)
    items = []
    rows = []
    for d in descriptors:
        e = enhanced_from_langlands(d)
        items.append(
            {
                "descriptor": descriptor_to_json(d),
                "enhanced": e.to_json(),
                "theta": theta_param_str(e),
            }
        )
        rows.append([e.height, e.sig.value, descriptor_to_json(d)["variant"], theta_param_str(e)])
    payload = {
        "group": str(group),
        "weight": s.to_json(),
        "count": len(items),
        "representations": items,
    }
    _emit(args, payload, _table(["height", "sig", "variant", "theta-parameter"], rows))
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    d = _descriptor_input(args, group)
    e = enhanced_from_langlands(d)
    payload = {
        "group": str(group),
        "langlands": descriptor_to_json(d),
        "enhanced": e.to_json(),
        "theta": theta_param_str(e),
    }
    rows = [["langlands", json.dumps(descriptor_to_json(d))], ["theta", theta_param_str(e)]]
    _emit(args, payload, _table(["form", "value"], rows))
    return 0


def _cmd_height(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    d = _descriptor_input(args, group)
    payload = {"group": str(group), "height": height(d)}
    _emit(args, payload, f"height {height(d)}")
    return 0


def _cmd_signature(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    d = _descriptor_input(args, group)
    payload = {"group": str(group), "signature": signature(d).value}
    _emit(args, payload, f"signature {signature(d).value}")
    return 0


def _cmd_hasse(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    s = validate_weight(_parse_csv_ints(args.weight), group)
    sig0 = Signature.parse(args.sig0)
    seq = (standard_sequence if args.standard else hasse_sequence)(group, s, sig0)
    payload = {
        "group": str(group),
        "weight": s.to_json(),
        "sig0": sig0.value,
        "kind": "standard" if args.standard else "hasse",
        "members": [e.to_json() for e in seq],
    }
    rows = [[e.height, e.sig.value, theta_param_str(e)] for e in seq]
    _emit(args, payload, _table(["height", "sig", "theta-parameter"], rows))
    return 0


def _cmd_branch(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    big = parse_enhanced(group, args.enhanced)
    if args.to is not None:
        small = parse_enhanced(group.subgroup, args.to)
        m = multiplicity(big, small)
        payload = {
            "group": str(group),
            "subgroup": str(group.subgroup),
            "big": big.to_json(),
            "small": small.to_json(),
            "multiplicity": m,
        }
        _emit(args, payload, f"multiplicity {m}")
        return 0
    targets = list(branch_enumerate(big))
    payload = {
        "group": str(group),
        "subgroup": str(group.subgroup),
        "big": big.to_json(),
        "count": len(targets),
        "targets": [t.to_json() for t in targets],
    }
    rows = [[t.height, t.sig.value, theta_param_str(t)] for t in targets]
    _emit(args, payload, _table(["height", "sig", "theta-parameter"], rows))
    return 0


def _cmd_branch_fd(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    lam = validate_weight(_parse_csv_ints(args.weight), group)
    delta = Signature.parse(args.delta)
    comps = finite_dim_branch(group, lam, delta)
    payload = {
        "group": str(group),
        "subgroup": str(group.subgroup),
        "weight": lam.to_json(),
        "delta": delta.value,
        "components": [
            {"nu": c.nu.to_json(), "signature": c.sig.value, "self_dual": c.self_dual}
            for c in comps
        ],
    }
    rows = [[str(c.nu), c.sig.value, c.self_dual] for c in comps]
    _emit(args, payload, _table(["nu", "sig", "self-dual"], rows))
    return 0


def _cmd_diagram(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    s = validate_weight(_parse_csv_ints(args.weight), group)
    s_sub = validate_weight(_parse_csv_ints(args.subweight), group.subgroup)
    sig = Signature.parse(args.sig)
    payload = diagram_to_json(group, s, s_sub, sig)
    _emit(args, payload, render_diagram(group, s, s_sub, sig))
    return 0


def _cmd_gp_check(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    big = parse_langlands(group, args.big)
    small = parse_langlands(group.subgroup, args.small)
    if not isinstance(big, TemperedPS) or not isinstance(small, DiscreteSeries):
        raise InvalidDescriptorError(
            "gp-check expects a tempered principal series (sigma=...;delta=...) "
            "over SO(2m+1,1) and a discrete series (sigma=...;lambda=...) below it"
        )
    ok = gp_tempered_check(big, small)
    payload = {
        "group": str(group),
        "big": descriptor_to_json(big),
        "small": descriptor_to_json(small),
        "nonzero": ok,
    }
    _emit(args, payload, f"nonzero {ok}")
    return 0


def _cmd_period(args: argparse.Namespace) -> int:
    if args.ktype:
        label = minimal_k_type_trivial_rho(args.n, args.i)
        payload = {"n": args.n, "i": args.i, "minimal_k_type": label.to_json()}
        _emit(args, payload, label.pretty() + f"  dim {label.dimension}")
        return 0
    value = period_value(args.n, args.i)
    payload = {"n": args.n, "i": args.i, **value.to_json()}
    _emit(args, payload, value.pretty())
    return 0


def _cmd_distinguished(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    e = parse_enhanced(group, args.enhanced)
    aq = is_aq_lambda(e)
    if aq is None:
        payload = {"group": str(group), "param": e.to_json(), "aq": None}
        _emit(args, payload, "not of cohomologically induced shape")
        return 0
    sub = distinguished_subgroup(e)
    payload = {
        "group": str(group),
        "param": e.to_json(),
        "aq": aq.to_json(),
        "distinguished_for": str(sub),
    }
    _emit(args, payload, f"distinguished for {sub}")
    return 0


def _cmd_chain(args: argparse.Namespace) -> int:
    group = GroupTag.parse(args.group)
    e = parse_enhanced(group, args.enhanced)
    target = GroupTag.parse(args.target)
    psi = Signature.parse(args.psi)
    chain = distinguishing_chain(e, target, psi)
    payload = {
        "group": str(group),
        "target": str(target),
        "psi": psi.value,
        "found": chain is not None,
        "chain": None
        if chain is None
        else [{"group": str(t.group), **t.to_json()} for t in chain],
    }
    if chain is None:
        _emit(args, payload, "no chain")
    else:
        rows = [[str(t.group), t.height, t.sig.value, theta_param_str(t)] for t in chain]
        _emit(args, payload, _table(["group", "height", "sig", "theta-parameter"], rows))
    return 0


def _cmd_cohomology(args: argparse.Namespace) -> int:
    if args.gate is not None:
        group = GroupTag.parse(args.group)
        big = parse_enhanced(group, args.enhanced)
        small = parse_enhanced(group.subgroup, args.gate)
        coeff_big = (
            Weight(_parse_csv_ints(args.coeff)) if args.coeff is not None else big.s
        )
        coeff_small = (
            Weight(_parse_csv_ints(args.subcoeff)) if args.subcoeff is not None else small.s
        )
        degree = bilinear_gate(big, small, coeff_big, coeff_small)
        payload = {
            "group": str(group),
            "big": big.to_json(),
            "small": small.to_json(),
            "degree": degree,
        }
        _emit(args, payload, f"degree {degree}")
        return 0
    if args.n is None or args.i is None or args.j is None:
        raise OutOfRangeError("cohomology needs --n, --i and --j (or gate mode flags)")
    delta = Signature.parse(args.delta)
    desc = pairing_trivial_rho(args.n, args.i, delta, args.j, args.intro_rendering)
    payload = desc.to_json()
    _emit(args, payload, f"nonzero {desc.nonzero}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    bounds_map = default_bounds()
    if args.grids:
        with open(args.grids, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        data.pop("_comment", None)
        bounds_map.update(data)
    names = args.suite or list(SUITE_NAMES)
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = {name: pool.submit(run_suite, name, bounds_map.get(name)) for name in names}
            reports = [futures[name].result() for name in names]
    else:
        reports = [run_suite(name, bounds_map.get(name)) for name in names]
    payload = {
        "suites": [r.to_json() for r in reports],
        "passed": all(r.passed for r in reports),
    }
    table = "\n".join(r.summary_line() for r in reports)
    _emit(args, payload, table)
    return 0 if payload["passed"] else 4


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sobranch",
        description="Exact branching calculus for representations of SO(N,1)",
    )
    parser.add_argument("--version", action="version", version=f"sobranch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, func) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="table", action="store_false", default=False,
                         help="machine-readable output (default)")
        fmt.add_argument("--table", dest="table", action="store_true",
                         help="aligned human-readable output")
        return p

    p = add("classify", "all irreducibles with the infinitesimal character of a weight", _cmd_classify)
    p.add_argument("--group", required=True, metavar="SO(N,1)")
    p.add_argument("--weight", required=True, metavar="CSV")

    for name, func, help_text in (
        ("convert", _cmd_convert, "convert between Langlands and enhanced parameters"),
        ("height", _cmd_height, "height of a representation"),
        ("signature", _cmd_signature, "signature of a representation"),
    ):
        p = add(name, help_text, func)
        p.add_argument("--group", required=True, metavar="SO(N,1)")
        p.add_argument("--langlands", metavar="sigma=..;delta=..;lambda=..")
        p.add_argument("--enhanced", metavar="w1,..;h=..;sig=..")

    p = add("hasse", "Hasse or standard sequence starting at a finite-dimensional member", _cmd_hasse)
    p.add_argument("--group", required=True, metavar="SO(N,1)")
    p.add_argument("--weight", required=True, metavar="CSV")
    p.add_argument("--sig0", default="+", metavar="SIGN")
    p.add_argument("--standard", action="store_true", help="twist into the standard sequence")

    p = add("branch", "branching targets or a single multiplicity", _cmd_branch)
    p.add_argument("--group", required=True, metavar="SO(N,1)")
    p.add_argument("--enhanced", required=True, metavar="w1,..;h=..;sig=..")
    p.add_argument("--list", action="store_true", help="list all targets (default)")
    p.add_argument("--to", metavar="w1,..;h=..;sig=..",
                   help="target parameter over the subgroup; print the multiplicity")

    p = add("branch-fd", "restriction of a finite-dimensional module", _cmd_branch_fd)
    p.add_argument("--group", required=True, metavar="SO(N,1)")
    p.add_argument("--weight", required=True, metavar="CSV")
    p.add_argument("--delta", default="+", metavar="SIGN")

    p = add("diagram", "symmetry-breaking arrows between two standard sequences", _cmd_diagram)
    p.add_argument("--group", required=True, metavar="SO(N,1)")
    p.add_argument("--weight", required=True, metavar="CSV")
    p.add_argument("--subweight", required=True, metavar="CSV")
    p.add_argument("--sig", default="+", metavar="SIGN")

    p = add("gp-check", "tempered pairing test at top height", _cmd_gp_check)
    p.add_argument("--group", required=True, metavar="SO(2m+1,1)")
    p.add_argument("--big", required=True, metavar="sigma=..;delta=..")
    p.add_argument("--small", required=True, metavar="sigma=..;lambda=..")

    p = add("period", "exact period value (or minimal K-type) for the regular family", _cmd_period)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--ktype", action="store_true", help="print the minimal K-type instead")

    p = add("distinguished", "distinguished subgroup of a cohomologically induced parameter", _cmd_distinguished)
    p.add_argument("--group", required=True, metavar="SO(N,1)")
    p.add_argument("--enhanced", required=True, metavar="w1,..;h=..;sig=..")

    p = add("chain", "stepwise distinguishing chain down to a character", _cmd_chain)
    p.add_argument("--group", required=True, metavar="SO(N,1)")
    p.add_argument("--enhanced", required=True, metavar="w1,..;h=..;sig=..")
    p.add_argument("--target", required=True, metavar="SO(M,1)")
    p.add_argument("--psi", default="+", metavar="SIGN")

    p = add("cohomology", "nonvanishing of induced bilinear forms on cohomology", _cmd_cohomology)
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--delta", default="+", metavar="SIGN")
    p.add_argument("--j", type=int)
    p.add_argument("--intro-rendering", action="store_true",
                   help="label the pairing partner by the alternate published convention")
    p.add_argument("--group", metavar="SO(N,1)", help="gate mode: the big group")
    p.add_argument("--enhanced", metavar="w1,..;h=..;sig=..", help="gate mode: big parameter")
    p.add_argument("--gate", metavar="w1,..;h=..;sig=..",
                   help="gate mode: subgroup parameter; prints the pairing degree")
    p.add_argument("--coeff", metavar="CSV", help="gate mode: coefficient weight for the big side")
    p.add_argument("--subcoeff", metavar="CSV", help="gate mode: coefficient weight for the small side")

    p = add("selftest", "run the brute-force verification suites", _cmd_selftest)
    p.add_argument("--suite", action="append", choices=SUITE_NAMES,
                   help="run only this suite (repeatable)")
    p.add_argument("--grids", metavar="PATH", help="JSON file overriding the default grid bounds")
    p.add_argument("--jobs", type=int, default=1, help="run suites in parallel processes")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SobranchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
