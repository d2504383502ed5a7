from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpqg.cartan import CartanDatum
from mpqg.coeff import FieldElem
from mpqg.errors import DomainError
from mpqg.repmod import (SYMBOLIC, NotIntegrable, backend_for, braiding, casimir,
                         casimir_commutation_check, check_relations,
                         commutator_powers_check, commutes_with_generators,
                         decompose, eye, flip, g_value, generator_actions,
                         highest_weight_module, intertwiner_check,
                         mat_equal, nilpotency_index, qybe_check,
                         rank1_simple, shapovalov_rank_check, tensor,
                         theta_blocks, theta_commutation_check,
                         trivial_module, verma_rank1, xi_operator, zeros)
from oracles import ROOTS, clebsch_gordan

A1 = CartanDatum.of_type("A1")
A2 = CartanDatum.of_type("A2")
B2 = CartanDatum.of_type("B2")
v = FieldElem.var("v")


def weyl_dim(datum, highest, roots):
    """Weyl dimension formula over a hand-written list of positive roots."""
    lam = datum.weight(highest)
    s = tuple(a + b for a, b in zip(lam, datum.rho))
    out = Fraction(1)
    for r in roots:
        out *= datum.form(s, r) / datum.form(datum.rho, r)
    return out


def test_dimensions_match_weyl_formula():
    cases = [(A2, (1, 0)), (A2, (0, 1)), (A2, (1, 1)), (A2, (2, 0)), (B2, (1, 0)), (B2, (0, 1))]
    for d, lam in cases:
        M = highest_weight_module(d, lam)
        assert M.dim == weyl_dim(d, lam, ROOTS[d.label])


def test_a1_dimensions():
    for m in range(5):
        assert highest_weight_module(A1, (m,)).dim == m + 1


def test_highest_weight_modules_satisfy_relations():
    for d, lam in [(A1, (3,)), (A2, (1, 0)), (A2, (1, 1)), (B2, (0, 1))]:
        M = highest_weight_module(d, lam)
        assert check_relations(M) == []
        assert commutator_powers_check(M)


def test_tensor_and_trivial_modules_satisfy_relations():
    L = highest_weight_module(A2, (1, 0))
    assert check_relations(tensor(L, L)) == []
    assert check_relations(trivial_module(A2)) == []


def test_broken_module_is_reported():
    M = highest_weight_module(A1, (1,))
    M.E[0] = M.E[0] * 2
    assert "ef commutator(1,1)" in check_relations(M)


def test_nilpotency_index_a1():
    for m in range(5):
        assert nilpotency_index(highest_weight_module(A1, (m,)), 0) == m + 1


def test_nilpotency_index_a2():
    for lam in [(1, 0), (0, 1), (1, 1)]:
        M = highest_weight_module(A2, lam)
        for i in range(2):
            assert nilpotency_index(M, i) == lam[i] + 1


def test_non_dominant_weight_is_not_integrable():
    with pytest.raises(NotIntegrable):
        highest_weight_module(A1, (-1,), max_depth=4)


def test_contravariant_form_rank_for_large_weight():
    assert shapovalov_rank_check(A2, (5, 5), 3)


def test_rank_one_simple_modules():
    P = A2.param_matrix()
    for m in range(5):
        r = rank1_simple(P, 0, v ** 3, m)
        assert r.consistent
        assert r.agrees_with_formula
        assert check_relations(r.module) == []


def test_rank_one_simple_needs_nonnegative_m():
    with pytest.raises(DomainError):
        rank1_simple(A2.param_matrix(), 0, v, -1)


def test_verma_submodule_boundary():
    P = A2.param_matrix()
    q = P.q(0, 0)
    for j in range(4):
        V = verma_rank1(P, 0, v ** 5, v ** 5 * q ** (-j))
        assert V.boundary(6) == j
        assert V.first_vanishing_e(6) == j + 1
    generic = verma_rank1(P, 0, v ** 5, FieldElem.var("x12"))
    assert generic.boundary(6) is None
    assert generic.first_vanishing_e(6) is None


def test_truncated_verma_relations_below_top():
    P = A2.param_matrix()
    V = verma_rank1(P, 0, v ** 3, FieldElem.var("x12")).truncated(4)
    E, F, W, Wp = V.E[0], V.F[0], V.W[0], V.Wp[0]
    q = P.q(0, 0)
    lhs = E @ F - F @ E
    rhs = (W - Wp) * (q / (q - 1))
    for k in range(4):
        assert all(lhs[r, k] == rhs[r, k] for r in range(5))


def test_casimir_scalar_on_a1():
    for m in range(1, 5):
        M = highest_weight_module(A1, (m,))
        om = casimir(M)
        # t^((lambda+rho, lambda+rho)/2) = v^((m+1)^2 / 2) for A1
        want = v ** Fraction((m + 1) ** 2, 2)
        assert g_value(A1, M.P, A1.weight((m,))) == want
        assert mat_equal(om @ xi_operator(M), eye(M.dim) * want)


def test_casimir_commutation_rules():
    for d, lam in [(A1, (2,)), (A2, (1, 0)), (A2, (0, 1))]:
        M = highest_weight_module(d, lam)
        assert casimir_commutation_check(M)
        assert commutes_with_generators(M, casimir(M) @ xi_operator(M))


def test_casimir_refuses_short_cutoff():
    M = highest_weight_module(A1, (3,))
    with pytest.raises(DomainError):
        casimir(M, cutoff=1)


def test_theta_commutation():
    L1, L2 = highest_weight_module(A1, (1,)), highest_weight_module(A1, (2,))
    assert theta_commutation_check(L1, L2)


def test_decompose_a1_tensor_product():
    M = tensor(highest_weight_module(A1, (2,)), highest_weight_module(A1, (3,)))
    parts = decompose(M)
    assert [c.highest[0] for c in parts] == clebsch_gordan(2, 3)
    assert [(c.multiplicity, c.dim) for c in parts] == [(1, 6), (1, 4), (1, 2)]


def test_decompose_a2_tensor_square():
    L = highest_weight_module(A2, (1, 0))
    parts = decompose(tensor(L, L))
    assert sorted((c.highest, c.dim) for c in parts) == [((0, 1), 3), ((2, 0), 6)]


def test_braiding_is_module_map_a1():
    L1, L2 = highest_weight_module(A1, (1,)), highest_weight_module(A1, (2,))
    assert intertwiner_check(L1, L2) == []
    assert intertwiner_check(L2, L1) == []


def test_braid_relation_a1_symbolic():
    L = highest_weight_module(A1, (1,))
    assert qybe_check(L, L, L, SYMBOLIC)


def test_braid_relation_a2_specialized():
    L = highest_weight_module(A2, (1, 0))
    b = backend_for([L], seed=0)
    assert b.assignment == {"v": Fraction(343, 64), "x12": Fraction(343, 64)}
    assert qybe_check(L, L, L, b)


def test_braiding_needs_grading_factor():
    L1, L2 = highest_weight_module(A1, (1,)), highest_weight_module(A1, (2,))
    th = theta_blocks(L2, L1, 1)
    theta = sum(th.values(), zeros(6, 6))
    bare = theta @ flip(L1.dim, L2.dim)
    X = dict(generator_actions(tensor(L1, L2)))
    Y = dict(generator_actions(tensor(L2, L1)))
    assert not mat_equal(Y["e1"] @ bare, bare @ X["e1"])
    R = braiding(L1, L2)
    assert mat_equal(Y["e1"] @ R, R @ X["e1"])


@settings(max_examples=5, deadline=None)
@given(st.integers(0, 1000))
def test_specialized_backend_is_seeded(seed):
    L = highest_weight_module(A1, (1,))
    a, b = backend_for([L], seed), backend_for([L], seed)
    assert a.assignment == b.assignment
    for k, x in a.assignment.items():
        assert x != 1
