import json
from fractions import Fraction

import pytest

from signedhodge.coloring_complex import EmptyComplexError, coloring_complex
from signedhodge.group_algebra import eulerian_idempotent
from signedhodge.hodge import (
    HodgeReport,
    base_cycle_face,
    base_cycle_graph,
    build_base_cycle,
    group_algebra_checks,
    homology_dims,
    hodge_dims_euler,
    hodge_dims_kernel,
    verify_block_diagonal,
    verify_intertwining,
    verify_main_theorem,
    verify_proof_identity,
    verify_switching_equivariance,
)
from signedhodge.signed_graph import SignedGraph

HALF2 = SignedGraph(2, half=[2])


class TestHomology:
    def test_running_example(self, example):
        assert homology_dims(example) == (0, 0, 11)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_half_edge_sphere(self, n):
        assert homology_dims(SignedGraph(n, half=[n])) == (0,) * (n - 1) + (1,)

    def test_half_edge_on_two(self):
        assert homology_dims(HALF2) == (0, 1)


class TestHodgeDims:
    def test_running_example(self, example):
        assert hodge_dims_euler(example) == (2, 5, 4)
        assert hodge_dims_kernel(example) == (2, 5, 4)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_half_edge(self, n):
        want = (0,) * (n - 1) + (1,)
        g = SignedGraph(n, half=[n])
        assert hodge_dims_euler(g) == want == hodge_dims_kernel(g)

    def test_complete_four(self):
        # every pair carries both signs and every vertex a half-edge
        pairs = [(a, b) for a in range(1, 5) for b in range(a + 1, 5)]
        g = SignedGraph(4, pairs, pairs, [1, 2, 3, 4])
        assert hodge_dims_kernel(g) == (105, 176, 86, 16)


class TestIntertwining:
    @pytest.mark.parametrize("g", [HALF2, SignedGraph(3, pos=[(1, 2)], neg=[(1, 2), (2, 3)], half=[1])], ids=str)
    def test_all_hold(self, g):
        checks = verify_intertwining(g)
        assert set(checks) == {"intertwining_l", "intertwining_lambda", "intertwining_rho"}
        for c in checks.values():
            assert c.passed and c.cases > 0, c.failures

    def test_vacuous_indices_reported(self, example):
        checks = verify_intertwining(example)
        assert any("r=0 j=2" in s and "vacuous" in s for s in checks["intertwining_rho"].skipped)
        assert any("j=0" in s for s in checks["intertwining_l"].skipped)

    def test_block_diagonal(self, example):
        assert verify_block_diagonal(example).passed


class TestBaseCycle:
    @pytest.mark.parametrize("kind", ["half-edge", "edge"])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_is_a_cycle(self, n, kind):
        cx = coloring_complex(base_cycle_graph(n, kind))
        gamma = build_base_cycle(n, kind)
        assert any(gamma)
        assert all(x == 0 for x in cx.boundary_matrix(n - 2).apply(gamma))

    @pytest.mark.parametrize("kind", ["half-edge", "edge"])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_equals_top_idempotent_image(self, n, kind):
        cx = coloring_complex(base_cycle_graph(n, kind))
        top = n - 2
        basis = [Fraction(0)] * cx.dim(top)
        basis[cx.index[top][base_cycle_face(n, kind)]] = Fraction(1)
        rho = cx.algebra_action_matrix(top, eulerian_idempotent(n - 1, n - 1))
        assert rho.apply(basis) == build_base_cycle(n, kind)

    def test_half_edge_on_two(self):
        cx = coloring_complex(HALF2)
        gamma = build_base_cycle(2, "half-edge")
        plus = cx.index[0][base_cycle_face(2, "half-edge")]
        assert gamma[plus] == Fraction(1, 2)
        assert gamma[1 - plus] == Fraction(-1, 2)

    def test_small_n(self):
        with pytest.raises(ValueError):
            build_base_cycle(1, "edge")


class TestProofIdentity:
    def test_running_example(self, example):
        check = verify_proof_identity(example)
        assert check.passed and check.cases > 0

    def test_no_positive_edges(self):
        check = verify_proof_identity(SignedGraph(2, neg=[(1, 2)]))
        assert check.passed and check.cases == 0 and check.skipped


class TestSwitching:
    def test_running_example(self, example):
        assert verify_switching_equivariance(example, 2).passed

    def test_negative_edge_becomes_positive(self):
        g = SignedGraph(2, neg=[(1, 2)])
        assert verify_switching_equivariance(g, 1).passed
        assert hodge_dims_euler(g) == hodge_dims_euler(SignedGraph(2, pos=[(1, 2)]))


class TestMainTheorem:
    def test_running_example(self, example):
        rep = verify_main_theorem(example, switching=True)
        assert rep.passed and rep.c == (2, 5, 4) and not rep.failed_checks()

    def test_half_edge_three(self):
        rep = verify_main_theorem(SignedGraph(3, half=[3]))
        assert rep.verdict and rep.c == (0, 0, 1)

    def test_single_edge(self):
        rep = verify_main_theorem(SignedGraph(2, pos=[(1, 2)]))
        assert rep.verdict and rep.c == (0, 1)

    def test_empty_graph(self):
        with pytest.raises(EmptyComplexError):
            verify_main_theorem(SignedGraph(3))

    def test_json_roundtrip(self, example):
        rep = verify_main_theorem(example)
        data = json.loads(json.dumps(rep.to_json()))
        back = HodgeReport.from_json(example, data)
        assert back == rep
        assert back.to_json() == rep.to_json()

    @pytest.mark.slow
    def test_five_vertex_spot_check(self):
        g = SignedGraph(5, pos=[(1, 2), (2, 3)], neg=[(3, 4), (4, 5)], half=[5])
        rep = verify_main_theorem(g, block_diagonal=False)
        assert rep.passed and rep.c == (1, 5, 10, 10, 5)


def test_group_algebra_checks():
    check = group_algebra_checks(3)
    assert check.passed and check.cases == (4 + 1) + (9 + 1) + (16 + 1)
