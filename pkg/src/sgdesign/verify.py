"""Checks on families of mutually skew flats.

The pipeline: pairwise skewness, the arrangement of pairwise affine hulls
with both incidence maps, the Sylvester-Gallai design property, centrality
of the hull arrangement, extraction of the common transversal line of a
central arrangement, projection of the family to a point configuration, and
the ordinary-line search on that configuration.

Structural facts that must hold for every design are enforced as they are
computed and raise :class:`TheoremViolation` rather than being corrected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from . import geom
from . import ratlin as rl
from .geom import AffineSubspace
from .ratlin import QMat, QVec


class TheoremViolation(AssertionError):
    """A configuration contradicts one of the structural facts being checked."""


class PreconditionError(ValueError):
    """An operation was handed input outside its domain.

    ``check`` names the failed condition so that front ends can report it.
    """

    def __init__(self, check: str, message: str):
        super().__init__(f"{check}: {message}")
        self.check = check


@dataclass(frozen=True)
class LineFamily:
    """An ordered family of flats of one common dimension in Q^ambient_dim.

    Skewness is deliberately not enforced here; :func:`pairwise_skew` is the
    check, so that offending inputs can be loaded and reported on.
    """

    ambient_dim: int
    members: tuple

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise ValueError("a family needs at least one member")
        if {m.ambient_dim for m in members} != {self.ambient_dim}:
            raise ValueError(f"members must all live in Q^{self.ambient_dim}")
        if len({m.dim for m in members}) != 1:
            raise ValueError(f"members have mixed dimensions {sorted({m.dim for m in members})}")
        object.__setattr__(self, "members", members)

    @property
    def member_dim(self) -> int:
        return self.members[0].dim

    def __len__(self) -> int:
        return len(self.members)

    def translated(self, v: QVec) -> "LineFamily":
        return LineFamily(self.ambient_dim, tuple(geom.translate(m, v) for m in self.members))

    def without(self, index: int) -> "LineFamily":
        return LineFamily(self.ambient_dim, self.members[:index] + self.members[index + 1 :])


@dataclass(frozen=True)
class HullArrangement:
    """Distinct pairwise hulls of a skew family and their incidences.

    ``lines_per_hull[j]`` is the sorted tuple of member indices inside hull
    ``j``; ``hulls_per_line[i]`` is the sorted tuple of hull indices
    containing member ``i``. Hulls are numbered in order of the first
    (lexicographic) member pair producing them.
    """

    family: LineFamily
    hulls: tuple
    lines_per_hull: tuple
    hulls_per_line: tuple

    @property
    def n_hulls(self) -> int:
        return len(self.hulls)

    def hull_of_pair(self, i: int, j: int) -> int:
        both = set(self.hulls_per_line[i]) & set(self.hulls_per_line[j])
        (h,) = both
        return h

    @property
    def is_design(self) -> bool:
        return all(len(s) >= 3 for s in self.lines_per_hull)


def pairwise_skew(family: LineFamily) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether all members are mutually skew; otherwise the first offending pair."""
    for i, j in combinations(range(len(family)), 2):
        if not geom.is_skew(family.members[i], family.members[j]):
            return False, (i, j)
    return True, None


def build_hulls(family: LineFamily) -> HullArrangement:
    ok, witness = pairwise_skew(family)
    if not ok:
        raise PreconditionError("pairwise skewness", f"members {witness[0]} and {witness[1]} are not skew")
    members = family.members
    index: dict = {}
    hulls: list[AffineSubspace] = []
    for i, j in combinations(range(len(members)), 2):
        h = geom.affine_hull(members[i], members[j])
        if h not in index:
            index[h] = len(hulls)
            hulls.append(h)
    lines_per_hull = tuple(
        tuple(i for i, m in enumerate(members) if geom.contains_flat(h, m)) for h in hulls
    )
    hulls_per_line = tuple(
        tuple(j for j, s in enumerate(lines_per_hull) if i in s) for i in range(len(members))
    )
    arr = HullArrangement(family, tuple(hulls), lines_per_hull, hulls_per_line)
    _check_arrangement(arr)
    return arr


def _check_arrangement(arr: HullArrangement) -> None:
    for a, b in combinations(range(arr.n_hulls), 2):
        shared = set(arr.lines_per_hull[a]) & set(arr.lines_per_hull[b])
        if len(shared) > 1:
            raise TheoremViolation(f"hulls {a} and {b} share members {sorted(shared)}")
    if arr.is_design:
        check_design_invariants(arr)


def check_design_invariants(arr: HullArrangement) -> None:
    """Small designs collapse to one hull; otherwise every member lies in >= 3 hulls."""
    n = len(arr.family)
    if n <= 6 and arr.n_hulls > 1:
        raise TheoremViolation(f"design with {n} members has {arr.n_hulls} hulls, expected 1")
    if arr.n_hulls > 1:
        low = [i for i, hs in enumerate(arr.hulls_per_line) if len(hs) < 3]
        if low:
            raise TheoremViolation(f"members {low} lie in fewer than three hulls of a multi-hull design")


def is_sg_design(family: LineFamily) -> tuple[bool, Optional[tuple[int, int]]]:
    """Every pair's hull holds a third member; otherwise the first pair whose hull holds just two."""
    witness = ordinary_hull_pair(build_hulls(family))
    return witness is None, witness


def ordinary_hull_pair(arr: HullArrangement) -> Optional[tuple[int, int]]:
    for i, j in combinations(range(len(arr.family)), 2):
        if len(arr.lines_per_hull[arr.hull_of_pair(i, j)]) == 2:
            return i, j
    return None


def hull_multiplicities(arr: HullArrangement) -> list[int]:
    counts = [len(hs) for hs in arr.hulls_per_line]
    if arr.is_design and arr.n_hulls > 1 and min(counts) < 3:
        raise TheoremViolation(f"hull multiplicities {counts} in a multi-hull design")
    return counts


def is_central(arr: HullArrangement) -> Optional[AffineSubspace]:
    """Common intersection of all hulls, or None if they share no point."""
    if not arr.hulls:
        raise PreconditionError("hull count", "no hulls to intersect")
    acc = arr.hulls[0]
    for h in arr.hulls[1:]:
        acc = geom.intersect(acc, h)
        if acc is None:
            return None
    return acc


def translate_to_origin(arr: HullArrangement, center: AffineSubspace) -> HullArrangement:
    """Rebuild the arrangement with the canonical point of ``center`` moved to O."""
    shift = tuple(-x for x in center.base)
    return build_hulls(arr.family.translated(shift))


def extract_transversal(arr: HullArrangement) -> AffineSubspace:
    """The line through O coplanar with every member of a central arrangement.

    Takes the first hull and its first two members ``a``, ``b``, one further
    hull through each of them, sums the three normal spaces and returns the
    orthogonal complement of that sum.
    """
    l = arr.family.ambient_dim
    k = arr.family.member_dim
    if arr.n_hulls < 2:
        raise PreconditionError("hull count", f"needs at least two hulls, got {arr.n_hulls}")
    if not all(geom.passes_through_origin(h) for h in arr.hulls):
        raise PreconditionError("centrality", "hulls must all pass through the origin")
    h0 = next(j for j, s in enumerate(arr.lines_per_hull) if len(s) >= 2)
    a, b = arr.lines_per_hull[h0][:2]
    others_a = [j for j in arr.hulls_per_line[a] if j != h0]
    others_b = [j for j in arr.hulls_per_line[b] if j != h0]
    if not others_a or not others_b:
        raise PreconditionError("hull multiplicity", f"members {a}, {b} need a second hull each")
    chosen = (h0, others_a[0], others_b[0])
    normals = [rl.orthogonal_complement(arr.hulls[j].dirs, l) for j in chosen]
    v = rl.subspace_sum(normals)
    if v.nrows != l - 1:
        raise TheoremViolation(
            f"normal spaces of hulls {list(chosen)} sum to dimension {v.nrows}, expected {l - 1}"
        )
    t = geom.linear(rl.orthogonal_complement(v, l))
    for j, h in enumerate(arr.hulls):
        if not geom.contains_flat(h, t):
            raise TheoremViolation(f"transversal is not contained in hull {j}")
    for i, m in enumerate(arr.family.members):
        if geom.affine_hull(t, m).dim > k + 1:
            raise TheoremViolation(f"transversal is not coplanar with member {i}")
        if geom.contains_flat(m, t):
            raise TheoremViolation(f"transversal coincides with member {i}")
    return t


def project_family(family: LineFamily, axis: AffineSubspace) -> list[QVec]:
    """Project each member's plane through ``axis`` to a point of P(axis-perp).

    Each returned vector is the normalized spanning row of a 1-dimensional
    subspace of the orthogonal complement of ``axis``.
    """
    if axis.dim != 1 or not geom.passes_through_origin(axis):
        raise PreconditionError("projection axis", "must be a line through the origin")
    if family.member_dim != 1:
        raise PreconditionError("member dimension", "projection is defined for lines")
    points: list[QVec] = []
    for i, m in enumerate(family.members):
        if m == axis:
            raise PreconditionError("transversal", f"member {i} equals the projection axis")
        plane = geom.affine_hull(axis, m)
        if plane.dim != 2:
            raise PreconditionError("coplanarity", f"member {i} is not coplanar with the axis")
        img = geom.project_along(plane, axis)
        points.append(img.rows[0])
    seen: dict = {}
    for i, p in enumerate(points):
        if p in seen:
            raise PreconditionError(
                "skewness", f"members {seen[p]} and {i} span the same plane with the axis"
            )
        seen[p] = i
    return points


def _canonical_points(points: Sequence[QVec]) -> list[QVec]:
    if not points:
        return []
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise ValueError(f"points of mixed dimensions {sorted(dims)}")
    canon = [rl.normalize(rl.vec(p)) for p in points]
    seen: dict = {}
    for i, p in enumerate(canon):
        if p in seen:
            raise ValueError(f"points {seen[p]} and {i} are the same projective point")
        seen[p] = i
    return canon


def _ordinary_pairs(canon: list[QVec], first_only: bool) -> list[tuple[int, int]]:
    n = len(canon)
    found = []
    for i, j in combinations(range(n), 2):
        eqs = rl.kernel(QMat((canon[i], canon[j]), len(canon[i])))
        if not any(
            all(rl.dot(e, canon[k]) == 0 for e in eqs.rows) for k in range(n) if k != i and k != j
        ):
            found.append((i, j))
            if first_only:
                break
    return found


def find_ordinary_line(points: Sequence[QVec]) -> Optional[tuple[int, int]]:
    """Lexicographically first pair whose joining line holds no third point."""
    found = _ordinary_pairs(_canonical_points(points), first_only=True)
    return found[0] if found else None


def ordinary_pairs(points: Sequence[QVec]) -> list[tuple[int, int]]:
    return _ordinary_pairs(_canonical_points(points), first_only=False)


def is_sgc(points: Sequence[QVec]) -> bool:
    return find_ordinary_line(points) is None


def are_collinear(points: Sequence[QVec]) -> bool:
    canon = _canonical_points(points)
    if not canon:
        return True
    return rl.rank(QMat(tuple(canon), len(canon[0]))) <= 2


def min_enclosing_flat(family: LineFamily) -> AffineSubspace:
    return geom.hull_of(family.members)


@dataclass
class TheoremReport:
    """Outcome of running every check on one family.

    ``all_in_3d`` means the enclosing flat has dimension at most
    ``2 * member_dim + 1`` (3 for lines). ``consistent`` states whether the
    equivalence "central iff all_in_3d" holds; it is vacuously true when
    the family is not a skew design.
    """

    member_dim: int
    ambient_dim: int
    n_members: int
    skew: bool
    skew_witness: Optional[tuple] = None
    is_design: bool = False
    design_witness: Optional[tuple] = None
    n_hulls: int = 0
    multiplicities: list = field(default_factory=list)
    central: bool = False
    common_point: Optional[QVec] = None
    enclosing_dim: Optional[int] = None
    all_in_3d: bool = False
    transversal: Optional[AffineSubspace] = None
    transversal_error: Optional[str] = None
    projected_points: Optional[list] = None
    projected_is_sgc: Optional[bool] = None
    projected_collinear: Optional[bool] = None
    consistent: bool = True

    @property
    def sylvester_gallai_holds(self) -> bool:
        """A projected configuration that is an SGC must be collinear."""
        return not (self.projected_is_sgc and not self.projected_collinear)


def check_main_theorem(family: LineFamily) -> TheoremReport:
    k = family.member_dim
    report = TheoremReport(k, family.ambient_dim, len(family), skew=False)
    report.skew, report.skew_witness = pairwise_skew(family)
    enclosing = min_enclosing_flat(family)
    report.enclosing_dim = enclosing.dim
    report.all_in_3d = enclosing.dim <= 2 * k + 1
    if not report.skew:
        return report

    arr = build_hulls(family)
    report.design_witness = ordinary_hull_pair(arr)
    report.is_design = report.design_witness is None
    report.n_hulls = arr.n_hulls
    report.multiplicities = hull_multiplicities(arr)
    if arr.n_hulls == 0:
        # a lone member: the empty intersection is the whole space
        center = geom.linear(QMat.identity(family.ambient_dim))
    else:
        center = is_central(arr)
    report.central = center is not None
    if center is not None:
        report.common_point = center.base
        if arr.n_hulls >= 2:
            _run_transversal(report, translate_to_origin(arr, center), center.base)

    report.consistent = (not report.is_design) or (report.central == report.all_in_3d)
    return report


def _run_transversal(report: TheoremReport, arr: HullArrangement, shift: QVec) -> None:
    try:
        axis = extract_transversal(arr)
        # reported in the caller's coordinates, through the common point
        report.transversal = geom.translate(axis, shift)
        if arr.family.member_dim == 1:
            pts = project_family(arr.family, axis)
            report.projected_points = pts
            report.projected_is_sgc = is_sgc(pts)
            report.projected_collinear = are_collinear(pts)
    except (PreconditionError, TheoremViolation) as exc:
        report.transversal_error = str(exc)
