from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from sgdesign import geom
from sgdesign import ratlin as rl
from sgdesign.geom import AffineSubspace
from sgdesign.ratlin import QMat

from oracles import dot, minor_rank

F = Fraction


def flat(base, dirs, n=None):
    return geom.canonicalize(base, dirs, n)


def contains_by_rank(big, small):
    """Oracle: ``small`` is inside ``big`` iff appending its data does not raise the rank."""
    d = [list(r) for r in big.dirs.rows]
    r = minor_rank(d) if d else 0
    extra = [list(x) for x in small.dirs.rows] + [[a - b for a, b in zip(small.base, big.base)]]
    return all((minor_rank(d + [e]) if any(e) else r) == r for e in extra)


@st.composite
def flats(draw, n=4, max_dim=3):
    k = draw(st.integers(0, max_dim))
    base = draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    dirs = draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=k, max_size=k))
    return flat(base, QMat.of(dirs, n))


@st.composite
def lines(draw, n=4):
    base = draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    d = draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n).filter(any))
    return geom.line(rl.vec(base), rl.vec(d))


class TestCanonicalize:
    def test_x_axis(self):
        w = flat([1, 0, 0, 0], [[2, 0, 0, 0]])
        assert w.dirs == QMat.of([[1, 0, 0, 0]])
        assert w.base == rl.vec([0, 0, 0, 0])

    def test_point(self):
        w = flat([1, 2, 3, 4], QMat.empty(4))
        assert w.dim == 0 and w.base == rl.vec([1, 2, 3, 4])

    def test_two_parameterizations(self):
        a = flat([1, 1, 0, 2], [[1, 0, 1, 0], [0, 1, 1, 1]])
        b = flat([2, 3, 3, 4], [[1, 1, 2, 1], [2, -1, 1, -1]])
        assert contains_by_rank(a, b) and contains_by_rank(b, a)
        assert a == b

    def test_idempotent(self):
        a = flat([1, 1, 0, 2], [[1, 0, 1, 0], [0, 1, 1, 1]])
        assert AffineSubspace(4, a.base, a.dirs) == a

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            AffineSubspace(4, rl.vec([0, 0, 0]), QMat.empty(4))

    @given(flats(), st.lists(st.integers(-3, 3), min_size=3, max_size=3),
           st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
    def test_parameterization_independent(self, w, shift, mix):
        k = w.dim
        mix = [row[:k] for row in mix[:k]]
        assume(k == 0 or minor_rank(mix) == k)
        dirs = [tuple(sum((c * r[j] for c, r in zip(row, w.dirs.rows)), F(0)) for j in range(4)) for row in mix]
        base = w.base
        for c, r in zip(shift, w.dirs.rows):
            base = rl.add(base, rl.scale(F(c), r))
        assert flat(base, QMat(tuple(dirs), 4)) == w


class TestContainment:
    def test_point_on_axis(self):
        x = geom.line([0, 0, 0, 0], [1, 0, 0, 0])
        assert geom.contains_point(x, rl.vec([5, 0, 0, 0]))
        assert not geom.contains_point(x, rl.vec([0, 1, 0, 0]))

    def test_hyperplane_contains_line(self):
        h = geom.from_equations(QMat.of([[1, 0, 0, 0]]), (F(1),))
        l = geom.line([1, 0, 0, 0], [0, 1, 0, 0])
        # substitution: every point (1, t, 0, 0) satisfies x1 = 1
        assert all(dot([1, 0, 0, 0], [1, t, 0, 0]) == 1 for t in range(-3, 4))
        assert geom.contains_flat(h, l)
        assert not geom.contains_flat(l, h)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            geom.contains_flat(geom.point([0, 0]), geom.point([0, 0, 0]))
        with pytest.raises(ValueError):
            geom.contains_point(geom.point([0, 0]), rl.vec([0, 0, 0]))


def hyperplane(normal, offset):
    return geom.from_equations(QMat.of([normal]), (F(offset),))


class TestIntersect:
    def test_three_coordinate_hyperplanes(self):
        h = [hyperplane([1, 0, 0, 0], 1), hyperplane([0, 1, 0, 0], 1), hyperplane([0, 0, 1, 0], 1)]
        m = geom.intersect(geom.intersect(h[0], h[1]), h[2])
        assert m == geom.line([1, 1, 1, 0], [0, 0, 0, 1])

    def test_parallel(self):
        assert geom.intersect(hyperplane([1, 0, 0, 0], 0), hyperplane([1, 0, 0, 0], 1)) is None

    @given(st.lists(st.tuples(st.lists(st.integers(-5, 5), min_size=4, max_size=4), st.integers(-5, 5)),
                    min_size=3, max_size=3))
    def test_random_triple_is_a_line_in_each(self, data):
        assume(minor_rank([n for n, _ in data]) == 3)
        hs = [hyperplane(n, c) for n, c in data]
        m = geom.intersect(geom.intersect(hs[0], hs[1]), hs[2])
        assert m is not None and m.dim == 1
        for normal, c in data:
            assert dot(normal, m.base) == c
            assert dot(normal, m.dirs[0]) == 0

    @given(flats(), flats())
    def test_meet_inside_both(self, a, b):
        m = geom.intersect(a, b)
        if m is None:
            return
        assert contains_by_rank(a, m) and contains_by_rank(b, m)
        assert geom.affine_hull(m, a) == a


class TestHull:
    def test_same_line(self):
        l = geom.line([1, 2, 0, 0], [0, 1, 1, 0])
        assert geom.affine_hull(l, l) == l

    def test_two_lines_through_origin(self):
        h = geom.affine_hull(geom.line([0] * 4, [1, 0, 0, 0]), geom.line([0] * 4, [0, 1, 0, 0]))
        assert h.dim == 2 and geom.passes_through_origin(h)

    def test_skew_pair_hull(self):
        l1 = geom.line([0, 0, 0, 0], [1, 0, 0, 0])
        l2 = geom.line([0, 0, 1, 0], [0, 1, 0, 0])
        assert minor_rank([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]) == 3
        assert geom.affine_hull(l1, l2).dim == 3
        assert geom.is_skew(l1, l2)
        assert not geom.lines_coplanar(l1, l2)

    @given(flats(), flats())
    def test_hull_laws(self, a, b):
        h = geom.affine_hull(a, b)
        assert h == geom.affine_hull(b, a)
        assert contains_by_rank(h, a) and contains_by_rank(h, b)
        assert h.dim <= a.dim + b.dim + 1


class TestLines:
    def test_parallel_distinct(self):
        l1 = geom.line([0, 0, 0, 0], [1, 0, 0, 0])
        l2 = geom.line([0, 1, 0, 0], [1, 0, 0, 0])
        assert geom.affine_hull(l1, l2).dim == 2
        assert not geom.is_skew(l1, l2)
        assert geom.lines_coplanar(l1, l2)

    def test_intersecting(self):
        l1 = geom.line([0, 0, 0, 0], [1, 0, 0, 0])
        l2 = geom.line([0, 0, 0, 0], [1, 1, 1, 1])
        assert geom.lines_coplanar(l1, l2)

    def test_not_lines(self):
        with pytest.raises(ValueError):
            geom.lines_coplanar(geom.point([0, 0, 0, 0]), geom.line([0] * 4, [1, 0, 0, 0]))

    @given(lines(), lines())
    def test_skew_trichotomy(self, a, b):
        skew = geom.is_skew(a, b)
        assert skew == (not geom.lines_coplanar(a, b))
        assert skew == (geom.intersect(a, b) is None and a.dirs != b.dirs)

    def test_origin(self):
        assert geom.passes_through_origin(geom.line([0, 0, 0, 3], [0, 0, 0, 1]))
        assert not geom.passes_through_origin(geom.line([1, 0, 0, 0], [0, 1, 0, 0]))


class TestProjectAlong:
    axis = geom.line([0, 0, 0, 0], [0, 0, 0, 1])

    def test_plane_to_point(self):
        w = geom.linear(QMat.of([[0, 0, 0, 1], [1, 0, 0, 0]]))
        assert geom.project_along(w, self.axis) == QMat.of([[1, 0, 0, 0]])

    def test_axis_to_zero(self):
        assert geom.project_along(self.axis, self.axis).nrows == 0

    def test_oblique_axis(self):
        axis = geom.line([0, 0, 0], [1, 1, 0])
        w = geom.linear(QMat.of([[1, 1, 0], [1, 0, 0]]))
        img = geom.project_along(w, axis)
        assert img == QMat.of([[1, -1, 0]])
        assert dot(img[0], [1, 1, 0]) == 0

    def test_must_contain_axis(self):
        with pytest.raises(ValueError):
            geom.project_along(geom.linear(QMat.of([[1, 0, 0, 0]])), self.axis)

    def test_collinear_images(self):
        # planes through the axis whose traces on x4=0 are collinear points project to a rank-2 set
        traces = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [2, -3, 0]]
        imgs = []
        for i, t in enumerate(traces):
            plane = geom.linear(QMat.of([t + [i + 1], [0, 0, 0, 1]]))
            imgs.append(list(geom.project_along(plane, self.axis)[0]))
        assert minor_rank(imgs) == 2
