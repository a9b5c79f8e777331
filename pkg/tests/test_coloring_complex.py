from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signedhodge.coloring_complex import (
    ColoringComplex,
    EmptyComplexError,
    Face,
    apply_permutation,
    boundary_matrix,
    coloring_complex,
    contains_edge,
    f_vector,
    faces,
    facets,
    geometric_faces,
    group_orbit_count,
    parse_face,
    switch_face,
)
from signedhodge.group_algebra import AlgebraElement, eulerian_idempotent
from signedhodge.hyperoctahedral import SignedPermutation, signed_permutations
from signedhodge.ratmat import QMatrix, matmul
from signedhodge.signed_graph import SignedGraph

HALF2 = SignedGraph(2, half=[2])


def fs(*xs):
    return frozenset(xs)


class TestFace:
    def test_parse_and_serialize(self):
        f = parse_face("(1,3 | -2,5 | 6 | -1,2,-3,4,-4,-5,-6)")
        assert f.grade == 2 and f.n == 6
        assert f.serialize() == "1,3|-2,5|6|-1,2,-3,-4,4,-5,-6"
        assert parse_face(f.serialize()) == f

    def test_parse_rejects_non_partition(self):
        with pytest.raises(ValueError):
            parse_face("1|1,-1,2,-2")
        with pytest.raises(ValueError):
            parse_face("1|-1,2")

    def test_merge(self):
        f = parse_face("1|2|-1,-2")
        assert f.merge(0) == parse_face("1,2|-1,-2")
        assert f.merge(1) == parse_face("1|2,-1,-2")


class TestContainsEdge:
    def test_positive(self):
        g = SignedGraph(2, pos=[(1, 2)])
        assert contains_edge(fs(1, 2), g)
        assert contains_edge(fs(-1, -2), g)
        assert not contains_edge(fs(1, -2), g)

    def test_negative(self):
        g = SignedGraph(3, neg=[(2, 3)])
        assert contains_edge(fs(2, -3), g)
        assert contains_edge(fs(-2, 3), g)
        assert not contains_edge(fs(2, 3), g)


class TestFacets:
    def test_half_edge_on_two(self):
        assert facets(HALF2) == {parse_face("1|-1,2,-2"), parse_face("-1|1,2,-2")}

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_base_facets(self, n):
        tail = ",".join(str(-i) for i in range(1, n + 1))
        half = SignedGraph(n, half=[n])
        assert parse_face("|".join(str(i) for i in range(1, n)) + f"|{tail},{n}") in facets(half)
        edge = SignedGraph(n, pos=[(n - 1, n)])
        head = "|".join(str(i) for i in range(1, n - 1))
        text = (head + "|" if head else "") + f"{n},{n - 1}|{tail}"
        assert parse_face(text) in facets(edge)

    def test_empty_graph(self):
        with pytest.raises(EmptyComplexError):
            ColoringComplex(SignedGraph(2))

    def test_size_guard(self):
        with pytest.raises(ValueError):
            ColoringComplex(SignedGraph(7, half=[1]))


class TestFaces:
    def test_half_edge_on_two(self):
        got = faces(HALF2)
        assert {r: len(v) for r, v in got.items()} == {-1: 1, 0: 2}
        assert f_vector(HALF2) == (1, 2)

    def test_running_example_euler(self, example):
        fv = f_vector(example)
        assert fv[1] - fv[2] == -10
        assert fv[0] - fv[1] + fv[2] == 11
        assert fv == (1, 22, 32)

    @pytest.mark.parametrize(
        "g",
        [
            SignedGraph(2, half=[2]),
            SignedGraph(2, pos=[(1, 2)], neg=[(1, 2)]),
            SignedGraph(3, pos=[(1, 2)], neg=[(1, 2), (2, 3)], half=[1]),
            SignedGraph(3, neg=[(1, 3)], half=[2]),
        ],
        ids=str,
    )
    def test_geometric_oracle(self, g):
        cx = coloring_complex(g)
        geo = geometric_faces(g)
        for r in cx.grades:
            assert set(cx.faces[r]) == geo.get(r, set())

    def test_downward_closed(self, example):
        cx = coloring_complex(example)
        for r in range(0, cx.n - 1):
            for f in cx.faces[r]:
                assert all(f.merge(i) in cx.index[r - 1] for i in range(r + 1))


class TestBoundary:
    def test_half_edge_on_two(self):
        assert boundary_matrix(HALF2, 0) == QMatrix.from_dense([[1, 1]])

    def test_squares_to_zero(self, example):
        d0, d1 = boundary_matrix(example, 0), boundary_matrix(example, 1)
        assert matmul(d0, d1).is_zero()

    def test_grade_range(self):
        with pytest.raises(ValueError):
            boundary_matrix(HALF2, 1)


class TestAction:
    def test_worked_example(self):
        f = parse_face("1,3 | -2,5 | 6 | -1,2,-3,4,-4,-5,-6")
        got = apply_permutation(f, SignedPermutation((2, -1, -3)))
        assert got == parse_face("2,-5 | 1,3 | -6 | -1,-2,-3,4,-4,5,6")

    def test_identity(self, example):
        for f in faces(example)[1]:
            assert apply_permutation(f, SignedPermutation.identity(2)) == f

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            apply_permutation(parse_face("1|-1"), SignedPermutation.identity(2))

    def test_is_a_left_action(self, example):
        cx = coloring_complex(example)
        group = signed_permutations(2)
        for a in group:
            for b in group:
                assert cx.action_matrix(1, a * b) == matmul(cx.action_matrix(1, a), cx.action_matrix(1, b))

    def test_identity_matrix(self, example):
        cx = coloring_complex(example)
        assert cx.action_matrix(1, SignedPermutation.identity(2)) == QMatrix.identity(32)
        assert cx.algebra_action_matrix(1, AlgebraElement.identity(2)) == QMatrix.identity(32)

    def test_free_action(self, example):
        cx = coloring_complex(example)
        for r in range(0, cx.n - 1):
            size = len(signed_permutations(r + 1))
            assert group_orbit_count(cx, r) * size == cx.dim(r)

    def test_projectors(self, example):
        cx = coloring_complex(example)
        for r in cx.grades:
            total = QMatrix.zeros(cx.dim(r), cx.dim(r))
            for j in range(0, cx.n):
                p = cx.projector(r, j)
                assert matmul(p, p) == p
                total = total + p
            assert total == QMatrix.identity(cx.dim(r))

    def test_algebra_rank_mismatch(self, example):
        with pytest.raises(ValueError):
            coloring_complex(example).algebra_action_matrix(1, eulerian_idempotent(3, 0))


class TestSwitchFace:
    def test_involution(self, example):
        for f in faces(example)[1]:
            assert switch_face(switch_face(f, 2), 2) == f

    def test_swaps_sign(self):
        assert switch_face(parse_face("1,-2|-1,2"), 2) == parse_face("1,2|-1,-2")


@st.composite
def small_graphs(draw):
    n = draw(st.integers(2, 3))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    pos = draw(st.lists(st.sampled_from(pairs), unique=True))
    neg = draw(st.lists(st.sampled_from(pairs), unique=True))
    half = draw(st.lists(st.integers(1, n), unique=True))
    g = SignedGraph(n, pos, neg, half)
    if g.is_empty():
        g = SignedGraph(n, half=[1])
    return g


@settings(max_examples=25, deadline=None)
@given(small_graphs())
def test_action_preserves_geometric_faces(g):
    cx = coloring_complex(g)
    for r in range(0, cx.n - 1):
        for p in signed_permutations(r + 1):
            cx.action_indices(r, p)  # raises on escape
    for f in cx.faces[cx.n - 2]:
        assert f in geometric_faces(g)[cx.n - 2]
