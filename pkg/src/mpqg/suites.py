"""Named verification suites run by the command line driver.

Each suite yields (name, ok, witness) triples.  ``CHECKS`` maps every suite
name to a short anchor and the identity it tests (shown by ``explain``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .borel import Borel
from .cartan import CartanDatum, degrees_of_height, kostant_count
from .coeff import q_identity_suite
from .errors import DomainError
from .repmod import (SYMBOLIC, backend_for, casimir, check_relations, casimir_commutation_check, g_value,
                     highest_weight_module, intertwiner_check, commutator_powers_check, mat_equal,
                     nilpotency_index, qybe_check, xi_operator, eye)
from .shuffle import ShuffleAlgebra
from .twist import Twist


@dataclass(frozen=True)
class CheckInfo:
    anchor: str
    statement: str


CHECKS = {
    "qidentities": CheckInfo(
        "q-integer and q-binomial identities",
        "Pascal rules, symmetry and factorial form of q-binomials, and the q-binomial theorem "
        "sum_k (-1)^k binom(n,k)_v v^(k(k-1)/2) a^(n-k) z^k = prod_(k<n) (a - v^k z), exactly in v."),
    "shuffle-serre": CheckInfo(
        "Serre relations in the quantum shuffle algebra",
        "sum_k (-1)^k binom(1-a_ij, k)_(q_ii) q_ii^(k(k-1)/2) q_ij^k w_i^(*(1-a_ij-k)) * w_j * w_i^(*k) = 0, "
        "and the closed double-sum form of w_i^(*m) * w_j * w_i^(*l) equals the recursive product."),
    "skew-primitive": CheckInfo(
        "Serre elements are skew-primitive and lie in the pairing radical",
        "Delta(u_ij^+) = u_ij^+ (x) 1 + w_i^(1-a_ij) w_j (x) u_ij^+, "
        "Delta(u_ij^-) = u_ij^- (x) w'_i^(1-a_ij) w'_j + 1 (x) u_ij^-, and <u_ij^-, e_J> = 0 for every word J."),
    "gram": CheckInfo(
        "nondegeneracy of the skew Hopf pairing on U_q",
        "rank of the degree-beta pairing matrix equals the Kostant partition number of beta; dual-basis "
        "expansion reproduces every word modulo the radical; coproducts of words expand through dual bases."),
    "twist": CheckInfo(
        "U_q as a cocycle twist of the one-parameter quantum group",
        "sigma(K_mu, K_nu) = q_(mu nu)^(1/2) is a Hopf 2-cocycle, and under a * b = sum sigma(a1,b1) a2 b2 "
        "sigma^-1(a3,b3) the generators E_i, F_i, K_i, K'_i satisfy the multi-parameter relations."),
    "modules": CheckInfo(
        "finite-dimensional highest-weight modules and the Casimir",
        "L(Lambda_i) satisfies all defining relations; f_i^(lambda(h_i)+1) v = 0 exactly; Omega Xi acts by "
        "t^((lambda+rho, lambda+rho)/2) and Omega e_i v = q_ii^(-(mu+alpha_i)(h_i)) e_i Omega v on weight mu."),
    "rmatrix": CheckInfo(
        "the braiding is a module isomorphism",
        "R = Theta o p o P with p(m' (x) m) = q_(mu nu)^(-1) m' (x) m commutes with Delta(e_i), Delta(f_i), "
        "Delta(w_i), Delta(w'_i)."),
    "qybe": CheckInfo(
        "braid relation for the braiding",
        "R12 R23 R12 = R23 R12 R23 on M (x) M' (x) M'', each R the braiding of the factors it swaps."),
}

SUITES = list(CHECKS)
MAX_DEPTH = 6


def _pairs(n):
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def suite_qidentities(datum, depth, backend, seed):
    for name, ok, witness in q_identity_suite(min(6, max(depth, 1))):
        yield name, ok, witness


def suite_shuffle_serre(datum, depth, backend, seed):
    S = ShuffleAlgebra(datum.param_matrix())
    for i, j in _pairs(datum.n):
        r = S.serre_shuffle(i, j)
        yield f"serre({i + 1},{j + 1})", r.is_zero(), "" if r.is_zero() else str(r)
        for m in range(4):
            for l in range(4):
                rec = S.shuffle_many(S.shuffle_power(i, m), S.shuffle_power(j, 1), S.shuffle_power(i, l))
                ok = rec == S.mixed_power_closed_form(i, j, m, l)
                yield f"closed-form({i + 1},{j + 1},m={m},l={l})", ok, ""


def suite_skew_primitive(datum, depth, backend, seed):
    B = Borel(datum)
    for i, j in _pairs(datum.n):
        yield f"coproduct({i + 1},{j + 1})", B.check_serre_skew_primitive(i, j), ""
        yield f"radical({i + 1},{j + 1})", B.check_serre_in_radical(i, j), ""


def suite_gram(datum, depth, backend, seed):
    B = Borel(datum)
    height = min(depth, 4)
    for h in range(1, height + 1):
        for beta in degrees_of_height(h, datum.n):
            r, k = B.gram(beta).rank, kostant_count(beta, datum)
            yield f"rank{beta}", r == k, "" if r == k else f"rank {r} vs partitions {k}"
            if h <= 3:
                yield f"expansion{beta}", B.dual_expansion_check(beta), ""
                yield f"coproduct-expansion{beta}", B.coproduct_expansion_check(beta), ""


def suite_twist(datum, depth, backend, seed):
    tw = Twist(datum)
    for r in tw.relation_suite():
        yield r.name, r.ok, r.witness
    c = tw.cocycle_check(min(depth, 2))
    yield "cocycle", c.ok, c.witness
    yield "delta2", tw.delta2_formulas_check(), ""
    a = tw.antipode_check("doi")
    yield "antipode", a.ok, a.witness


def _fundamentals(datum):
    return [tuple(int(k == i) for k in range(datum.n)) for i in range(datum.n)]


def _need_small_finite(datum):
    if not datum.is_finite or datum.n > 2:
        raise DomainError("module suites need finite type of rank at most 2")


def suite_modules(datum, depth, backend, seed):
    _need_small_finite(datum)
    for lam in _fundamentals(datum):
        M = highest_weight_module(datum, lam)
        bad = check_relations(M)
        yield f"relations L{lam}", not bad, ", ".join(bad)
        yield f"commutators L{lam}", commutator_powers_check(M), ""
        for i in range(datum.n):
            want = int(datum.h(datum.weight(lam), i)) + 1
            got = nilpotency_index(M, i)
            yield f"nilpotency L{lam} f{i + 1}", got == want, f"index {got}, expected {want}"
        om = casimir(M)
        g = g_value(datum, M.P, datum.weight(lam))
        yield f"casimir-scalar L{lam}", mat_equal(om @ xi_operator(M), eye(M.dim) * g), ""
        yield f"casimir-commutation L{lam}", casimir_commutation_check(M, om), ""


def _backend(kind, modules, seed):
    if kind in ("symbolic", "exact"):
        return SYMBOLIC
    return backend_for(modules, seed)


def suite_rmatrix(datum, depth, backend, seed):
    _need_small_finite(datum)
    fund = [highest_weight_module(datum, lam) for lam in _fundamentals(datum)]
    for M in fund:
        for N in fund:
            b = _backend(backend, [M, N], seed)
            bad = intertwiner_check(M, N, b)
            yield f"intertwiner {M.label}(x){N.label}", not bad, ", ".join(bad)


def suite_qybe(datum, depth, backend, seed):
    _need_small_finite(datum)
    M = highest_weight_module(datum, _fundamentals(datum)[0])
    b = _backend(backend, [M], seed)
    yield f"braid {M.label}^3 [{b.name}]", qybe_check(M, M, M, b), ""


RUNNERS = {
    "qidentities": suite_qidentities,
    "shuffle-serre": suite_shuffle_serre,
    "skew-primitive": suite_skew_primitive,
    "gram": suite_gram,
    "twist": suite_twist,
    "modules": suite_modules,
    "rmatrix": suite_rmatrix,
    "qybe": suite_qybe,
}


def run(name: str, datum: CartanDatum, depth: int, backend: str = "symbolic", seed: int = 0):
    if name not in RUNNERS:
        raise DomainError(f"unknown suite {name!r}; valid: {', '.join(SUITES)}")
    yield from RUNNERS[name](datum, depth, backend, seed)


def explain(name: str) -> str:
    if name not in CHECKS:
        raise DomainError(f"unknown check {name!r}; valid: {', '.join(SUITES)}")
    info = CHECKS[name]
    return f"{name}: {info.anchor}\n  {info.statement}"

