"""Command-line interface.

Subcommands: wdd, orbit, grade, upsilon, catalog, oracle, verify.
Pair descriptors use the grammar <type>/<g0>[-diagram], where <type> is a
Cartan label (E6, B4) or a classical name (sl6, so10, sp8) and <g0> is a
fixed-algebra descriptor such as C4, gl5, so8, so7+so4, gl2+gl4, A5+A1.
Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exceptional import exceptional_lookup
from .gradings import (check_02, check_04, check_4k2, decompose,
                       decompose_classical, grading_grid, upsilon)
from .involutions import catalog, pair_by_descriptor
from .orbits import (ClassicalOrbit, Partition, centralizer_dims,
                     is_divisible, is_even, half_orbit, reductive_type,
                     wdd_from_partition)
from .oracle import centralizer_dim, ker_ad_squared, triple_from_partition
from .roots import SimpleType
from .verify import SUITES, run_suite


class UsageError(ValueError):
    pass


def parse_ambient(text: str) -> tuple[SimpleType, tuple[str, int] | None]:
    """Accept 'E6', 'B4', 'sl6', 'so10', 'sp8'."""
    text = text.strip()
    low = text.lower()
    for kind in ("sl", "so", "sp"):
        if low.startswith(kind) and low[len(kind):].isdigit():
            n = int(low[len(kind):])
            if kind == "sl":
                t = SimpleType("A", n - 1)
            elif kind == "sp":
                t = SimpleType("C", n // 2)
            elif n % 2 == 1:
                t = SimpleType("B", (n - 1) // 2)
            else:
                t = SimpleType("D", n // 2)
            return t, (kind, n)
    t = SimpleType.parse(text)
    amb = None
    if t.family == "A":
        amb = ("sl", t.rank + 1)
    elif t.family == "B":
        amb = ("so", 2 * t.rank + 1)
    elif t.family == "C":
        amb = ("sp", 2 * t.rank)
    elif t.family == "D":
        amb = ("so", 2 * t.rank)
    return t, amb


def parse_pair(text: str):
    if "/" not in text:
        raise UsageError(f"pair descriptor must look like E6/C4, "
                         f"got {text!r}")
    amb_text, g0 = text.split("/", 1)
    diagram = g0.endswith("-diagram")
    if diagram:
        g0 = g0[: -len("-diagram")]
    t, _ = parse_ambient(amb_text)
    pair = pair_by_descriptor(t, g0)
    if diagram and pair.inner:
        raise UsageError(f"{pair} is inner, not a diagram involution")
    return pair


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_wdd(args) -> int:
    t, amb = parse_ambient(args.type)
    if amb is None:
        rec = exceptional_lookup(t, args.partition)
        text = (f"{t} orbit {rec.bala_carter_label}\n{rec.wdd.render()}\n"
                f"dim g^e = {rec.dim_centralizer}, red = {rec.red_type}, "
                f"nil = {rec.dim_nil}")
        _emit(args, {"orbit": rec.bala_carter_label,
                     "wdd": rec.wdd.to_json(),
                     "dim_centralizer": rec.dim_centralizer,
                     "red": rec.red_type, "dim_nil": rec.dim_nil}, text)
        return 0
    kind, n = amb
    orbit = ClassicalOrbit(kind, n, Partition.parse(args.partition))
    wdd = wdd_from_partition(orbit)
    total, red, nil = centralizer_dims(orbit)
    lines = [f"{orbit} in type {t}", wdd.render(),
             f"labels: {wdd.labels}",
             f"dim g^e = {total}, red = {reductive_type(orbit)} "
             f"(dim {red}), nil = {nil}",
             f"even: {is_even(orbit)}, divisible: {is_divisible(orbit)}"]
    if is_divisible(orbit) and kind != "sp":
        lines.append(f"half orbit: {half_orbit(orbit).partition}")
    _emit(args, {"orbit": str(orbit), "wdd": wdd.to_json(),
                 "dim_centralizer": total, "red": str(reductive_type(orbit)),
                 "dim_red": red, "dim_nil": nil,
                 "even": is_even(orbit), "divisible": is_divisible(orbit)},
          "\n".join(lines))
    return 0


def cmd_orbit(args) -> int:
    return cmd_wdd(args)


def cmd_grade(args) -> int:
    pair = parse_pair(args.pair)
    if args.partition:
        if pair.ambient is None:
            raise UsageError("explicit partitions apply to classical "
                             "ambients only")
        lam = Partition.parse(args.partition)
        if len(pair.factors) != 1:
            raise UsageError("explicit partitions are supported for "
                             "single-factor fixed algebras")
        pd = decompose_classical(pair, [lam])
    else:
        pd = decompose(pair)
    mg = grading_grid(pd)
    flags = {"d0(0)=d1(2)": check_02(mg), "d0(0)=d1(4)": check_04(mg),
             "d0(4k+2)=d1(4k+2)": check_4k2(mg)}
    orbit = (pd.orbit_label if pd.orbit_label
             else str(pd.ambient_partition))
    text = (f"{pair}  e: {orbit}\n"
            f"M0 = {pd.m0}\nM1 = {pd.m1}\n{mg.render()}\n"
            + "  ".join(f"{k}: {v}" for k, v in flags.items()))
    _emit(args, {"pair": pair.to_json(), "orbit": orbit,
                 "m0": pd.m0.to_json(), "m1": pd.m1.to_json(),
                 "grid": mg.to_json(), "flags": flags}, text)
    return 0


def cmd_upsilon(args) -> int:
    pair = parse_pair(args.pair)
    u = upsilon(decompose(pair))
    text = (f"sigma       = {pair}\n"
            f"sigma-check = {u.sigma_check}  "
            f"[Sat {u.sigma_check.satake.render()}]\n"
            f"product     = {u.sigma_sigma_check}  "
            f"[Sat {u.sigma_sigma_check.satake.render()}]")
    _emit(args, u.to_json(), text)
    return 0


def cmd_catalog(args) -> int:
    t, _ = parse_ambient(args.type)
    rows = []
    for p in catalog(t):
        rows.append(f"{p.descriptor:14s} dim g0 = {p.dim_g0:4d}  "
                    f"{'inner' if p.inner else 'outer'}  "
                    f"{'IBN ' if p.satake.ibn else '    '} "
                    f"{p.satake.render()}")
    _emit(args, {"type": t.to_json(),
                 "pairs": [p.to_json() for p in catalog(t)]},
          "\n".join(rows))
    return 0


def cmd_oracle(args) -> int:
    t, amb = parse_ambient(args.type)
    if amb is None:
        raise UsageError("the matrix oracle covers classical types only")
    kind, n = amb
    orbit = ClassicalOrbit(kind, n, Partition.parse(args.partition))
    triple = triple_from_partition(kind, n, orbit.partition)
    rel = triple.check_relations()
    z = centralizer_dim(triple)
    k2 = ker_ad_squared(triple)
    text = (f"{orbit}: triple relations {'ok' if rel else 'FAILED'}, "
            f"dim z(e) = {z} (formula {centralizer_dims(orbit)[0]}), "
            f"dim ker(ad e)^2 = {k2}")
    _emit(args, {"orbit": str(orbit), "relations_ok": rel,
                 "centralizer": z, "ker_ad_squared": k2}, text)
    return 0


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    reports = []
    for name in names:
        rep = run_suite(name, max_rank=args.max_rank)
        reports.append(rep)
        failed += rep.num_failed
        if not args.json:
            print(rep.render(verbose=args.verbose))
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nilorbits",
        description="nilpotent orbits, mixed gradings and involutions, "
                    "in exact arithmetic")
    ap.add_argument("--json", action="store_true",
                    help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wdd", help="weighted diagram and orbit facts")
    p.add_argument("type")
    p.add_argument("partition",
                   help="partition literal like '(5,3,1)', or a label like "
                        "'E6(a1)' for exceptional types")
    p.set_defaults(func=cmd_wdd)

    p = sub.add_parser("orbit", help="alias of wdd")
    p.add_argument("type")
    p.add_argument("partition")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("grade", help="mixed grading grid of a pair")
    p.add_argument("pair", help="for example E6/C4 or so10/gl5")
    p.add_argument("partition", nargs="?", default=None,
                   help="optional Jordan type of e (single-factor g0)")
    p.set_defaults(func=cmd_grade)

    p = sub.add_parser("upsilon", help="derived involution classes")
    p.add_argument("pair")
    p.set_defaults(func=cmd_upsilon)

    p = sub.add_parser("catalog", help="involution classes of a type")
    p.add_argument("type")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("oracle", help="matrix-level spot checks")
    p.add_argument("type")
    p.add_argument("partition")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=sorted(SUITES) + ["all"])
    p.add_argument("--verbose", action="store_true",
                   help="print passing cases too")
    p.add_argument("--max-rank", type=int, default=8,
                   help="rank bound for the classical sweeps")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as ex:
        print(f"usage error: {ex}", file=sys.stderr)
        return 2
    except (KeyError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
