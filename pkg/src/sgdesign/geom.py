"""Affine subspaces (flats) of Q^l and the incidence predicates on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import ratlin as rl
from .ratlin import QMat, QVec


@dataclass(frozen=True)
class AffineSubspace:
    """A flat ``base + rowspan(dirs)``, always held in canonical form.

    ``dirs`` is the RREF basis of the direction space and ``base`` is the
    unique point of the flat whose coordinates at the pivot columns of
    ``dirs`` vanish. Two instances describe the same flat iff they are equal.
    """

    ambient_dim: int
    base: QVec
    dirs: QMat

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        if len(self.base) != self.ambient_dim or self.dirs.ncols != self.ambient_dim:
            raise ValueError(
                f"base of dim {len(self.base)} / directions in Q^{self.dirs.ncols} "
                f"for ambient Q^{self.ambient_dim}"
            )
        d, _, pivots = rl.rref(self.dirs)
        base = list(rl.vec(self.base))
        for row, p in zip(d.rows, pivots):
            c = base[p]
            if c:
                base = [x - c * y for x, y in zip(base, row)]
        object.__setattr__(self, "base", tuple(base))
        object.__setattr__(self, "dirs", d)

    @property
    def dim(self) -> int:
        return self.dirs.nrows

    def __repr__(self) -> str:
        base = ", ".join(map(str, self.base))
        dirs = "; ".join(", ".join(map(str, r)) for r in self.dirs.rows)
        return f"AffineSubspace(Q^{self.ambient_dim}, base=({base}), dirs=[{dirs}])"


def canonicalize(base: Iterable, dirs: Iterable | QMat, ambient_dim: Optional[int] = None) -> AffineSubspace:
    base = rl.vec(base)
    n = ambient_dim if ambient_dim is not None else len(base)
    if not isinstance(dirs, QMat):
        dirs = QMat.of(dirs, n)
    return AffineSubspace(n, base, dirs)


def point(p: Iterable) -> AffineSubspace:
    p = rl.vec(p)
    return AffineSubspace(len(p), p, QMat.empty(len(p)))


def linear(dirs: QMat) -> AffineSubspace:
    """The linear subspace spanned by the rows of ``dirs``."""
    return AffineSubspace(dirs.ncols, rl.zero_vec(dirs.ncols), dirs)


def line(base: Iterable, direction: Iterable) -> AffineSubspace:
    base = rl.vec(base)
    return AffineSubspace(len(base), base, QMat.of([direction], len(base)))


def dim(w: AffineSubspace) -> int:
    return w.dim


def _same_ambient(*ws: AffineSubspace) -> None:
    dims = {w.ambient_dim for w in ws}
    if len(dims) > 1:
        raise ValueError(f"ambient dimension mismatch: {sorted(dims)}")


def contains_point(w: AffineSubspace, p: QVec) -> bool:
    if len(p) != w.ambient_dim:
        raise ValueError(f"point of dim {len(p)} tested against a flat in Q^{w.ambient_dim}")
    return rl.in_span(w.dirs, rl.sub(rl.vec(p), w.base))


def contains_flat(w1: AffineSubspace, w2: AffineSubspace) -> bool:
    """True when ``w2`` is a subset of ``w1``."""
    _same_ambient(w1, w2)
    if not contains_point(w1, w2.base):
        return False
    return rl.rank(w1.dirs.stack(w2.dirs)) == w1.dim


def intersect(w1: AffineSubspace, w2: AffineSubspace) -> Optional[AffineSubspace]:
    """The set intersection as a canonical flat, or None when empty."""
    _same_ambient(w1, w2)
    # base1 + D1^T s = base2 + D2^T t  <=>  [D1^T | -D2^T] (s, t) = base2 - base1
    n = w1.ambient_dim
    k1, k2 = w1.dim, w2.dim
    cols1 = w1.dirs.transpose().rows
    cols2 = w2.dirs.transpose().rows
    a = QMat(tuple(tuple(r1) + tuple(-x for x in r2) for r1, r2 in zip(cols1, cols2)), k1 + k2)
    sol = rl.solve_affine(a, rl.sub(w2.base, w1.base))
    if sol is None:
        return None
    x, _ = sol
    p = w1.base
    for coeff, row in zip(x[:k1], w1.dirs.rows):
        if coeff:
            p = rl.add(p, rl.scale(coeff, row))
    return AffineSubspace(n, p, rl.subspace_intersection(w1.dirs, w2.dirs))


def affine_hull(w1: AffineSubspace, w2: AffineSubspace) -> AffineSubspace:
    """Smallest flat containing both inputs."""
    _same_ambient(w1, w2)
    offset = QMat((rl.sub(w2.base, w1.base),), w1.ambient_dim)
    return AffineSubspace(w1.ambient_dim, w1.base, w1.dirs.stack(w2.dirs).stack(offset))


def hull_of(flats: Iterable[AffineSubspace]) -> AffineSubspace:
    it = iter(flats)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("hull of an empty collection") from None
    for w in it:
        acc = affine_hull(acc, w)
    return acc


def is_skew(w1: AffineSubspace, w2: AffineSubspace) -> bool:
    """Skew in the hull-dimension sense: ``dim AH(W1, W2) = dim W1 + dim W2 + 1``."""
    return affine_hull(w1, w2).dim == w1.dim + w2.dim + 1


def lines_coplanar(l1: AffineSubspace, l2: AffineSubspace) -> bool:
    if l1.dim != 1 or l2.dim != 1:
        raise ValueError(f"lines_coplanar needs two lines, got dims {l1.dim} and {l2.dim}")
    return affine_hull(l1, l2).dim <= 2


def passes_through_origin(w: AffineSubspace) -> bool:
    return rl.is_zero(w.base)


def translate(w: AffineSubspace, v: QVec) -> AffineSubspace:
    return AffineSubspace(w.ambient_dim, rl.add(w.base, v), w.dirs)


def project_along(w: AffineSubspace, l0: AffineSubspace) -> QMat:
    """Image of the direction space of ``w`` under orthogonal projection onto ``l0``'s complement.

    ``l0`` must be a line through the origin and ``w`` a linear subspace
    containing it. For a plane through ``l0`` the image is one-dimensional,
    i.e. a point of the projective space of ``l0``'s complement.
    """
    _same_ambient(w, l0)
    if l0.dim != 1 or not passes_through_origin(l0):
        raise ValueError("projection axis must be a line through the origin")
    if not passes_through_origin(w):
        raise ValueError("projected flat must be a linear subspace")
    if not contains_flat(w, l0):
        raise ValueError("projected subspace does not contain the projection axis")
    d = l0.dirs.rows[0]
    dd = rl.dot(d, d)
    images = []
    for row in w.dirs.rows:
        c = rl.dot(row, d) / dd
        images.append(rl.sub(row, rl.scale(c, d)))
    return rl.span(QMat(tuple(images), w.ambient_dim))


def direction_spans_equal(w1: AffineSubspace, w2: AffineSubspace) -> bool:
    return w1.dirs == w2.dirs


def equations(w: AffineSubspace) -> tuple[QMat, QVec]:
    """Return ``(A, b)`` with ``w = {x : A x = b}``; rows of ``A`` span the normal space."""
    a = rl.orthogonal_complement(w.dirs, w.ambient_dim)
    return a, a.apply(w.base)


def from_equations(a: QMat, b: QVec) -> Optional[AffineSubspace]:
    sol = rl.solve_affine(a, b)
    if sol is None:
        return None
    x, k = sol
    return AffineSubspace(a.ncols, x, k)
