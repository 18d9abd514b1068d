"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`, vectors are tuples of fractions and
matrices are :class:`QMat` values carrying an explicit column count, so that
an empty basis still knows its ambient dimension.

Every subspace returned here is given by its RREF basis (pivots ascending,
pivot entries 1), which makes subspace equality a plain ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rat = Fraction
QVec = tuple  # tuple[Fraction, ...]

Scalar = Union[int, str, Fraction]


def rat(x: Scalar) -> Fraction:
    """Parse an int, a ``"p/q"`` string or a Fraction into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as an exact rational (floats are refused)")


def vec(entries: Iterable[Scalar]) -> QVec:
    return tuple(rat(x) for x in entries)


def zero_vec(n: int) -> QVec:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> QVec:
    return tuple(Fraction(int(j == i)) for j in range(n))


def add(u: QVec, v: QVec) -> QVec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: QVec, v: QVec) -> QVec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, v: QVec) -> QVec:
    return tuple(c * a for a in v)


def dot(u: QVec, v: QVec) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(v: QVec) -> bool:
    return not any(v)


@dataclass(frozen=True)
class QMat:
    """A rectangular rational matrix, stored row-wise."""

    rows: tuple
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(f"row of length {len(r)} in a matrix with {self.ncols} columns")

    @classmethod
    def of(cls, rows: Iterable[Iterable[Scalar]], ncols: Optional[int] = None) -> "QMat":
        rs = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rs:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rs[0])
        return cls(rs, ncols)

    @classmethod
    def empty(cls, ncols: int) -> "QMat":
        return cls((), ncols)

    @classmethod
    def identity(cls, n: int) -> "QMat":
        return cls(tuple(unit_vec(n, i) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def transpose(self) -> "QMat":
        return QMat(tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.nrows)

    def stack(self, other: "QMat") -> "QMat":
        _check_cols(self, other)
        return QMat(self.rows + other.rows, self.ncols)

    def apply(self, v: QVec) -> QVec:
        """Matrix-vector product ``M @ v``."""
        if len(v) != self.ncols:
            raise ValueError(f"vector of dim {len(v)} against {self.ncols} columns")
        return tuple(dot(r, v) for r in self.rows)


def _check_cols(*mats: QMat) -> None:
    if len({m.ncols for m in mats}) > 1:
        raise ValueError(f"ambient dimension mismatch: {[m.ncols for m in mats]}")


def rref(m: QMat) -> tuple[QMat, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Zero rows are dropped, so the returned matrix has exactly ``rank`` rows.
    """
    a = [list(r) for r in m.rows]
    nrows, ncols = len(a), m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            f = a[i][c]
            if i != r and f != 0:
                ai, ar = a[i], a[r]
                a[i] = [x - f * y for x, y in zip(ai, ar)]
        pivots.append(c)
        r += 1
    return QMat(tuple(tuple(row) for row in a[:r]), ncols), r, pivots


def rank(m: QMat) -> int:
    return rref(m)[1]


def span(m: QMat) -> QMat:
    """Canonical (RREF) basis of the row space."""
    return rref(m)[0]


def kernel(m: QMat) -> QMat:
    """RREF basis of ``{x : M x = 0}``."""
    r, _, pivots = rref(m)
    n = m.ncols
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(r.rows, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return span(QMat(tuple(basis), n))


def solve_affine(a: QMat, b: QVec) -> Optional[tuple[QVec, QMat]]:
    """Solve ``A x = b``.

    Returns ``(particular, kernel(A))`` with the free variables of the
    particular solution set to zero, or None when the system is inconsistent.
    """
    if len(b) != a.nrows:
        raise ValueError(f"right-hand side of dim {len(b)} for {a.nrows} equations")
    n = a.ncols
    aug = QMat(tuple(row + (bi,) for row, bi in zip(a.rows, b)), n + 1)
    r, _, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(r.rows, pivots):
        x[p] = row[n]
    return tuple(x), kernel(a)


def subspace_sum(bases: Sequence[QMat]) -> QMat:
    if not bases:
        raise ValueError("subspace_sum of no subspaces has no ambient dimension")
    _check_cols(*bases)
    rows = tuple(r for b in bases for r in b.rows)
    return span(QMat(rows, bases[0].ncols))


def orthogonal_complement(basis: QMat, ambient_dim: Optional[int] = None) -> QMat:
    """RREF basis of the orthogonal complement under the standard dot product."""
    if ambient_dim is not None and ambient_dim != basis.ncols:
        raise ValueError(f"basis lives in Q^{basis.ncols}, not Q^{ambient_dim}")
    return kernel(basis)


def subspace_intersection(u: QMat, v: QMat) -> QMat:
    _check_cols(u, v)
    return kernel(subspace_sum([kernel(u), kernel(v)]))


def in_span(basis: QMat, v: QVec) -> bool:
    return rank(basis.stack(QMat((tuple(v),), basis.ncols))) == rank(basis)


def normalize(v: QVec) -> QVec:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise ValueError("cannot normalize the zero vector")
    return tuple(x / lead for x in v)
