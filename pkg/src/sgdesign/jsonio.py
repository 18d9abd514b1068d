"""JSON wire formats.

Rationals travel as strings ``"p/q"`` (``"p"`` when the denominator is 1);
plain JSON integers are accepted on input, floats are refused. Flats are
``{"ambient_dim", "base", "dirs"}`` objects and families wrap them as
``{"ambient_dim", "member_dim", "members"}``. Everything read is put in
canonical form, so re-serializing a file normalizes it.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .geom import AffineSubspace
from .ratlin import QMat, QVec
from .verify import LineFamily, TheoremReport


class FormatError(ValueError):
    """Input JSON does not match the expected schema; ``where`` locates the problem."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


def rat_to_json(x: Fraction) -> str:
    return str(x)


def vec_to_json(v: QVec) -> list:
    return [str(x) for x in v]


def mat_to_json(m: QMat) -> list:
    return [vec_to_json(r) for r in m.rows]


def rat_from_json(obj: Any, where: str) -> Fraction:
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise FormatError(where, f"expected a rational string like \"-3/7\", got {obj!r}")
    try:
        return Fraction(obj)
    except (ValueError, ZeroDivisionError):
        raise FormatError(where, f"not a rational: {obj!r}") from None


def vec_from_json(obj: Any, where: str, dim: Optional[int] = None) -> QVec:
    if not isinstance(obj, list):
        raise FormatError(where, "expected an array")
    if dim is not None and len(obj) != dim:
        raise FormatError(where, f"expected {dim} entries, got {len(obj)}")
    return tuple(rat_from_json(x, f"{where}[{i}]") for i, x in enumerate(obj))


def _field(obj: Any, key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise FormatError(where, "expected an object")
    if key not in obj:
        raise FormatError(where, f"missing key {key!r}")
    return obj[key]


def _int_field(obj: Any, key: str, where: str) -> int:
    v = _field(obj, key, where)
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise FormatError(f"{where}.{key}", f"expected a positive integer, got {v!r}")
    return v


def flat_to_json(w: AffineSubspace) -> dict:
    return {"ambient_dim": w.ambient_dim, "base": vec_to_json(w.base), "dirs": mat_to_json(w.dirs)}


def flat_from_json(obj: Any, where: str = "$") -> AffineSubspace:
    n = _int_field(obj, "ambient_dim", where)
    base = vec_from_json(_field(obj, "base", where), f"{where}.base", n)
    rows = _field(obj, "dirs", where)
    if not isinstance(rows, list):
        raise FormatError(f"{where}.dirs", "expected an array of vectors")
    dirs = tuple(vec_from_json(r, f"{where}.dirs[{i}]", n) for i, r in enumerate(rows))
    return AffineSubspace(n, base, QMat(dirs, n))


def family_to_json(family: LineFamily) -> dict:
    return {
        "ambient_dim": family.ambient_dim,
        "member_dim": family.member_dim,
        "members": [flat_to_json(m) for m in family.members],
    }


def family_from_json(obj: Any, where: str = "$") -> LineFamily:
    n = _int_field(obj, "ambient_dim", where)
    raw = _field(obj, "members", where)
    if not isinstance(raw, list) or not raw:
        raise FormatError(f"{where}.members", "expected a nonempty array")
    members = tuple(flat_from_json(m, f"{where}.members[{i}]") for i, m in enumerate(raw))
    for i, m in enumerate(members):
        if m.ambient_dim != n:
            raise FormatError(f"{where}.members[{i}]", f"lives in Q^{m.ambient_dim}, family in Q^{n}")
    if "member_dim" in obj:
        k = obj["member_dim"]
        for i, m in enumerate(members):
            if m.dim != k:
                raise FormatError(f"{where}.members[{i}]", f"has dimension {m.dim}, member_dim is {k}")
    try:
        return LineFamily(n, members)
    except ValueError as exc:
        raise FormatError(f"{where}.members", str(exc)) from None


def planes_to_json(planes: list) -> dict:
    """A list of equal-dimension flats in the family envelope."""
    return family_to_json(LineFamily(planes[0].ambient_dim, tuple(planes)))


def points_from_json(obj: Any, where: str = "$") -> list[QVec]:
    if not isinstance(obj, list):
        raise FormatError(where, "expected an array of projective points")
    return [vec_from_json(p, f"{where}[{i}]") for i, p in enumerate(obj)]


def report_to_json(report: TheoremReport) -> dict:
    def opt_vec(v):
        return None if v is None else vec_to_json(v)

    return {
        "ambient_dim": report.ambient_dim,
        "member_dim": report.member_dim,
        "n_members": report.n_members,
        "skew": report.skew,
        "skew_witness": None if report.skew_witness is None else list(report.skew_witness),
        "is_design": report.is_design,
        "design_witness": None if report.design_witness is None else list(report.design_witness),
        "n_hulls": report.n_hulls,
        "multiplicities": list(report.multiplicities),
        "central": report.central,
        "common_point": opt_vec(report.common_point),
        "enclosing_dim": report.enclosing_dim,
        "all_in_3d": report.all_in_3d,
        "transversal": None if report.transversal is None else flat_to_json(report.transversal),
        "transversal_error": report.transversal_error,
        "projected_points": None
        if report.projected_points is None
        else [vec_to_json(p) for p in report.projected_points],
        "projected_is_sgc": report.projected_is_sgc,
        "projected_collinear": report.projected_collinear,
        "consistent": report.consistent,
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
