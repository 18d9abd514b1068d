"""Generators for explicit skew families.

* :func:`gen_fano_13` -- seven skew lines in Q^4 realizing the Fano plane,
  cut out of a random generic arrangement of seven hyperplanes.
* :func:`gen_planes_r5` -- the cones of those lines placed in ``{z5 = 1}``,
  seven planes of Q^5 meeting pairwise only at the origin.
* :func:`gen_25` -- seven mutually skew 2-flats of Q^6 whose pairwise hulls
  are all linear 5-spaces, yet which span all of Q^6.

All randomness comes from a :class:`random.Random` seeded by the caller's
:class:`GenSpec`; equal specs give identical output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import geom
from . import ratlin as rl
from .geom import AffineSubspace
from .incidence import blocks_through, fano_plane
from .ratlin import QMat, QVec
from .verify import LineFamily, build_hulls, pairwise_skew


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Hyperplane:
    """The locus ``normal . x = offset``, scaled so the first nonzero normal entry is 1."""

    normal: QVec
    offset: Fraction

    def __post_init__(self):
        normal = rl.vec(self.normal)
        if rl.is_zero(normal):
            raise ValueError("hyperplane normal must be nonzero")
        lead = next(x for x in normal if x != 0)
        object.__setattr__(self, "normal", tuple(x / lead for x in normal))
        object.__setattr__(self, "offset", rl.rat(self.offset) / lead)

    @property
    def ambient_dim(self) -> int:
        return len(self.normal)

    def flat(self) -> AffineSubspace:
        return geom.from_equations(QMat((self.normal,), self.ambient_dim), (self.offset,))


@dataclass(frozen=True)
class GenSpec:
    seed: int = 0
    coeff_bound: int = 10
    max_retries: int = 1000

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.coeff_bound < 2:
            raise ValueError("coeff_bound must be at least 2")
        if self.max_retries < 1:
            raise ValueError("max_retries must be positive")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def random_hyperplanes(
    l: int, count: int, spec: GenSpec, rng: Optional[random.Random] = None
) -> list[Hyperplane]:
    """Draw ``count`` hyperplanes of Q^l with integer data in ``[-bound, bound]``.

    Without ``rng`` a fresh generator seeded by ``spec.seed`` is used, so the
    call is reproducible; passing one continues its stream (used for retries).
    """
    if l < 2 or count < 1:
        raise ValueError("need l >= 2 and count >= 1")
    rng = rng or spec.rng()
    b = spec.coeff_bound
    out = []
    while len(out) < count:
        normal = [rng.randint(-b, b) for _ in range(l)]
        offset = rng.randint(-b, b)
        if any(normal):
            out.append(Hyperplane(rl.vec(normal), Fraction(offset)))
    return out


def is_generic(hyperplanes: Sequence[Hyperplane]) -> bool:
    """Every four meet in exactly one point and every five have no common point (Q^4 only)."""
    if any(h.ambient_dim != 4 for h in hyperplanes):
        raise ValueError("genericity is only defined here for hyperplanes of Q^4")
    for quad in combinations(hyperplanes, 4):
        if rl.rank(QMat(tuple(h.normal for h in quad), 4)) != 4:
            return False
    for quint in combinations(hyperplanes, 5):
        aug = QMat(tuple(h.normal + (h.offset,) for h in quint), 5)
        if rl.rank(aug) != 5:
            return False
    return True


def fano_lines_from_hyperplanes(hyperplanes: Sequence[Hyperplane]) -> list[AffineSubspace]:
    """Line ``i`` is the common intersection of the hyperplanes of the three blocks through point ``i``."""
    if len(hyperplanes) != 7:
        raise ValueError(f"need seven hyperplanes, got {len(hyperplanes)}")
    n = hyperplanes[0].ambient_dim
    design = fano_plane()
    lines = []
    for pt in range(1, 8):
        hs = [hyperplanes[b - 1] for b in blocks_through(design, pt)]
        flat = geom.from_equations(QMat(tuple(h.normal for h in hs), n), tuple(h.offset for h in hs))
        if flat is None or flat.dim != 1:
            got = "empty" if flat is None else f"of dim {flat.dim}"
            raise GenerationError(f"hyperplanes through point {pt} meet in a set {got}, not a line")
        lines.append(flat)
    return lines


def _fano_rejection(hyperplanes: list[Hyperplane], lines: list[AffineSubspace]) -> Optional[str]:
    """Why a drawn arrangement fails to give a Fano representation, or None."""
    family = LineFamily(4, tuple(lines))
    ok, witness = pairwise_skew(family)
    if not ok:
        return f"lines {witness} not skew"
    arr = build_hulls(family)
    design = fano_plane()
    expected = {b: hyperplanes[i].flat() for i, b in enumerate(design.blocks)}
    if arr.n_hulls != 7:
        return f"{arr.n_hulls} hulls"
    for hull, members in zip(arr.hulls, arr.lines_per_hull):
        block = tuple(m + 1 for m in members)
        if block not in expected or expected[block] != hull:
            return f"hull holding lines {block} is not a block hyperplane"
    if geom.hull_of(lines).dim != 4:
        return "lines lie in a 3-flat"
    return None


def draw_fano_13(spec: GenSpec) -> tuple[list[Hyperplane], LineFamily]:
    """The accepted hyperplane arrangement together with its seven lines."""
    rng = spec.rng()
    for _ in range(spec.max_retries):
        hyperplanes = random_hyperplanes(4, 7, spec, rng)
        if not is_generic(hyperplanes):
            continue
        lines = fano_lines_from_hyperplanes(hyperplanes)
        if _fano_rejection(hyperplanes, lines) is None:
            return hyperplanes, LineFamily(4, tuple(lines))
    raise GenerationError(f"no Fano representation found in {spec.max_retries} draws (seed {spec.seed})")


def gen_fano_13(spec: GenSpec) -> LineFamily:
    return draw_fano_13(spec)[1]


def embed_in_slice(w: AffineSubspace) -> AffineSubspace:
    """Place a flat of Q^d in the slice ``{x_{d+1} = 1}`` of Q^{d+1}."""
    dirs = QMat(tuple(r + (Fraction(0),) for r in w.dirs.rows), w.ambient_dim + 1)
    return AffineSubspace(w.ambient_dim + 1, w.base + (Fraction(1),), dirs)


def cone_over_origin(w: AffineSubspace) -> AffineSubspace:
    """Linear span of a flat lying in the slice where the last coordinate is 1."""
    if w.base[-1] != 1 or any(r[-1] != 0 for r in w.dirs.rows):
        raise ValueError("flat does not lie in the slice {last coordinate = 1}")
    return geom.linear(w.dirs.stack(QMat((w.base,), w.ambient_dim)))


def _check_planes(planes: Sequence[AffineSubspace]) -> None:
    n = planes[0].ambient_dim
    for (i, p), (j, q) in combinations(enumerate(planes), 2):
        meet = geom.intersect(p, q)
        if meet is None or meet.dim != 0:
            raise GenerationError(f"planes {i} and {j} meet in more than the origin")
    for a, b, c in fano_plane().blocks:
        pair = rl.subspace_sum([planes[a - 1].dirs, planes[b - 1].dirs])
        if pair.nrows != 4 or not geom.contains_flat(geom.linear(pair), planes[c - 1]):
            raise GenerationError(f"plane {c} is not in the span of planes {a} and {b}")
    if rl.subspace_sum([p.dirs for p in planes]).nrows != n:
        raise GenerationError("the seven planes lie in a hyperplane")


def gen_planes_r5(spec: GenSpec) -> list[AffineSubspace]:
    lines = gen_fano_13(spec).members
    planes = [cone_over_origin(embed_in_slice(m)) for m in lines]
    _check_planes(planes)
    return planes


DEFAULT_T = tuple(Fraction(i) for i in range(1, 8))


def lift_plane(plane: AffineSubspace, t: Fraction) -> AffineSubspace:
    """The 2-flat ``t*e_last + (plane x 0)`` inside ``plane x Q``."""
    n = plane.ambient_dim + 1
    cyl = rl.span(
        QMat(tuple(r + (Fraction(0),) for r in plane.dirs.rows) + (rl.unit_vec(n, n - 1),), n)
    )
    _, _, pivots = rl.rref(cyl)
    dirs = QMat(tuple(r for r, p in zip(cyl.rows, pivots) if p != n - 1), n)
    return AffineSubspace(n, rl.scale(t, rl.unit_vec(n, n - 1)), dirs)


def _check_25(family: LineFamily, t: Sequence[Fraction]) -> Optional[str]:
    n = family.ambient_dim
    axis = geom.line(rl.zero_vec(n), rl.unit_vec(n, n - 1))
    for i, (a, ti) in enumerate(zip(family.members, t)):
        meet = geom.intersect(a, axis)
        if meet is None or meet.dim != 0 or meet.base != rl.scale(ti, rl.unit_vec(n, n - 1)):
            return f"flat {i} does not meet the last axis exactly at t_{i}"
    ok, witness = pairwise_skew(family)
    if not ok:
        return f"flats {witness} not skew"
    arr = build_hulls(family)
    if arr.n_hulls != 7:
        return f"{arr.n_hulls} hulls"
    for hull, members in zip(arr.hulls, arr.lines_per_hull):
        if hull.dim != 5 or not geom.passes_through_origin(hull):
            return "a pairwise hull is not a linear 5-space"
        if tuple(m + 1 for m in members) not in fano_plane().blocks:
            return f"hull holds flats {members}, not a Fano block"
    if geom.hull_of(family.members).dim != n:
        return "the flats do not span the whole space"
    return None


def gen_25(spec: GenSpec, t: Sequence = DEFAULT_T) -> LineFamily:
    """Seven mutually skew 2-flats of Q^6 meeting the last axis at ``t_i * e6``."""
    t = tuple(rl.rat(x) for x in t)
    if len(t) != 7 or len(set(t)) != 7 or any(x == 0 for x in t):
        raise ValueError("t must be seven distinct nonzero rationals")
    seed = spec.seed
    for _ in range(spec.max_retries):
        s = GenSpec(seed, spec.coeff_bound, spec.max_retries)
        planes = gen_planes_r5(s)
        family = LineFamily(6, tuple(lift_plane(p, ti) for p, ti in zip(planes, t)))
        if _check_25(family, t) is None:
            return family
        seed = (seed + 1) % 2**64
    raise GenerationError(f"no (2,5) family verified after {spec.max_retries} seeds from {spec.seed}")
