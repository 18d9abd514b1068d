"""Command line front end.

Exit codes: 0 success, 1 a failed check or a violated structural fact,
2 a usage error or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from . import construct, geom, jsonio
from . import verify as vf
from .construct import GenSpec, GenerationError
from .jsonio import FormatError
from .verify import PreconditionError, TheoremViolation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _yes(flag: Optional[bool]) -> str:
    return {True: "yes", False: "no", None: "n/a"}[flag]


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None


def _load_family(path: str) -> vf.LineFamily:
    obj = _load(path)
    try:
        return jsonio.family_from_json(obj)
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _spec(args) -> GenSpec:
    try:
        return GenSpec(args.seed, args.coeff_bound, args.max_retries)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen_fano13(args) -> int:
    family = construct.gen_fano_13(_spec(args))
    _emit(jsonio.dumps(jsonio.family_to_json(family)), args.out)
    return EXIT_OK


def cmd_gen_planes_r5(args) -> int:
    planes = construct.gen_planes_r5(_spec(args))
    _emit(jsonio.dumps(jsonio.planes_to_json(planes)), args.out)
    return EXIT_OK


def cmd_gen_25(args) -> int:
    try:
        t = [jsonio.rat_from_json(x.strip(), f"--t-values[{i}]") for i, x in enumerate(args.t_values.split(","))]
        family = construct.gen_25(_spec(args), t)
    except (FormatError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    _emit(jsonio.dumps(jsonio.family_to_json(family)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    family = _load_family(args.file)
    skew, skew_w = vf.pairwise_skew(family)
    result = {"n_members": len(family), "member_dim": family.member_dim, "skew": skew,
              "skew_witness": list(skew_w) if skew_w else None}
    if skew:
        arr = vf.build_hulls(family)
        design_w = vf.ordinary_hull_pair(arr)
        result.update(
            is_design=design_w is None,
            design_witness=list(design_w) if design_w else None,
            n_hulls=arr.n_hulls,
            lines_per_hull=[list(s) for s in arr.lines_per_hull],
            multiplicities=vf.hull_multiplicities(arr),
        )
    ok = skew and result["is_design"]
    if args.json:
        _emit(jsonio.dumps(result), None)
    else:
        lines = [f"members: {len(family)} flats of dimension {family.member_dim} in Q^{family.ambient_dim}"]
        lines.append(f"pairwise skew: {_yes(skew)}" + (f" (members {skew_w[0]} and {skew_w[1]} are not skew)" if skew_w else ""))
        if skew:
            w = result["design_witness"]
            lines.append(
                f"every pair's hull holds a third member: {_yes(result['is_design'])}"
                + (f" (hull of members {w[0]} and {w[1]} holds only them)" if w else "")
            )
            lines.append(f"distinct hulls: {result['n_hulls']}")
            for j, s in enumerate(result["lines_per_hull"]):
                lines.append(f"  hull {j}: members {s}")
            lines.append(f"hulls per member: {result['multiplicities']}")
        _emit("\n".join(lines) + "\n", None)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_central(args) -> int:
    arr = vf.build_hulls(_load_family(args.file))
    center = vf.is_central(arr) if arr.n_hulls else None
    if args.json:
        _emit(jsonio.dumps({
            "n_hulls": arr.n_hulls,
            "central": center is not None,
            "common_flat": None if center is None else jsonio.flat_to_json(center),
        }), None)
    else:
        text = f"distinct hulls: {arr.n_hulls}\ncentral: {_yes(center is not None)}\n"
        if center is not None:
            text += f"common flat: {center!r}\n"
        _emit(text, None)
    return EXIT_OK


def cmd_transversal(args) -> int:
    arr = vf.build_hulls(_load_family(args.file))
    if arr.n_hulls == 0:
        raise PreconditionError("hull count", "a single member has no hulls")
    center = vf.is_central(arr)
    if center is None:
        raise PreconditionError("centrality", "the hulls have no common point")
    axis = vf.extract_transversal(vf.translate_to_origin(arr, center))
    line = geom.translate(axis, center.base)
    if args.json:
        _emit(jsonio.dumps({"transversal": jsonio.flat_to_json(line)}), None)
    else:
        _emit(f"transversal through the common point: {line!r}\n", None)
    return EXIT_OK


def cmd_theorem(args) -> int:
    family = _load_family(args.file)
    r = vf.check_main_theorem(family)
    if args.json:
        _emit(jsonio.dumps(jsonio.report_to_json(r)), None)
    else:
        limit = 2 * r.member_dim + 1
        lines = [
            f"members: {r.n_members} flats of dimension {r.member_dim} in Q^{r.ambient_dim}",
            f"pairwise skew: {_yes(r.skew)}" + (f" (witness {list(r.skew_witness)})" if r.skew_witness else ""),
            f"design (every pair's hull holds a third member): {_yes(r.is_design)}"
            + (f" (witness {list(r.design_witness)})" if r.design_witness else ""),
            f"distinct hulls: {r.n_hulls}",
            f"hulls per member: {r.multiplicities}",
            f"hull arrangement central: {_yes(r.central)}",
            f"enclosing flat dimension: {r.enclosing_dim} (in {limit}-flat: {_yes(r.all_in_3d)})",
        ]
        if r.transversal is not None:
            lines.append(f"transversal: {r.transversal!r}")
        if r.transversal_error is not None:
            lines.append(f"transversal extraction failed: {r.transversal_error}")
        if r.projected_points is not None:
            lines.append(f"projected configuration: SGC {_yes(r.projected_is_sgc)}, collinear {_yes(r.projected_collinear)}")
        lines.append(f"central <=> enclosed in a {limit}-flat: {'holds' if r.consistent else 'FAILS'}")
        _emit("\n".join(lines) + "\n", None)
    return EXIT_OK if (r.skew and r.is_design and r.consistent and r.sylvester_gallai_holds) else EXIT_FAIL


def cmd_ordinary_line(args) -> int:
    obj = _load(args.file)
    try:
        pts = jsonio.points_from_json(obj)
    except FormatError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    try:
        pair = vf.find_ordinary_line(pts)
        collinear = vf.are_collinear(pts)
    except ValueError as exc:
        raise PreconditionError("distinct points", str(exc)) from None
    if args.json:
        _emit(jsonio.dumps({"ordinary_pair": None if pair is None else list(pair), "collinear": collinear}), None)
    else:
        if pair is None:
            _emit(f"no ordinary line (SGC); collinear: {_yes(collinear)}\n", None)
        else:
            _emit(f"ordinary line through points {pair[0]} and {pair[1]}; collinear: {_yes(collinear)}\n", None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgdesign", description="Exact Sylvester-Gallai designs of skew flats.")
    sub = parser.add_subparsers(dest="command", required=True)

    def gen(name: str, func: Callable, help: str):
        p = sub.add_parser(name, help=help)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--coeff-bound", type=int, default=10)
        p.add_argument("--max-retries", type=int, default=1000)
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.set_defaults(func=func)
        return p

    gen("gen-fano13", cmd_gen_fano13, "seven skew lines of Q^4 realizing the Fano plane")
    gen("gen-planes-r5", cmd_gen_planes_r5, "seven planes of Q^5 meeting pairwise at the origin")
    p = gen("gen-25", cmd_gen_25, "seven skew 2-flats of Q^6 with linear pairwise hulls")
    p.add_argument("--t-values", default="1,2,3,4,5,6,7", help="comma-separated distinct nonzero rationals")

    for name, func, help in [
        ("verify", cmd_verify, "check skewness and the design property"),
        ("central", cmd_central, "intersect all pairwise hulls"),
        ("transversal", cmd_transversal, "extract the common transversal of a central arrangement"),
        ("theorem", cmd_theorem, "full report: design, centrality, enclosing flat"),
        ("ordinary-line", cmd_ordinary_line, "find a line through exactly two of the given projective points"),
    ]:
        p = sub.add_parser(name, help=help)
        p.add_argument("file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (TheoremViolation, GenerationError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
