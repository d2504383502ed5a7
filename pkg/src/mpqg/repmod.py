"""Finite-dimensional weight modules: rank-one modules, highest-weight modules,
the Casimir and Xi operators, the braiding and the braid relation.

Matrices are numpy object arrays holding exact entries (FieldElem on the
symbolic backend, Fraction on the specialized one).  Weights are root-basis
coordinate tuples of Fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from .borel import Borel, words_of_degree
from .cartan import CartanDatum, degrees_of_height
from .coeff import ONE, ZERO, FieldElem, ParamMatrix, as_field, exponent_denominators, qint, specialize
from .errors import DomainError, EvaluationError, InternalError
from .linalg import independent_rows, inverse, rank as mat_rank, transpose


class NotIntegrable(DomainError):
    """The highest-weight module does not terminate within the depth bound."""


# ------------------------------------------------------------------ matrices

def zeros(n: int, m: int, zero=ZERO) -> np.ndarray:
    a = np.empty((n, m), dtype=object)
    a.fill(zero)
    return a


def eye(n: int, zero=ZERO, one=ONE) -> np.ndarray:
    a = zeros(n, n, zero)
    for k in range(n):
        a[k, k] = one
    return a


def diag(entries, zero=ZERO) -> np.ndarray:
    a = zeros(len(entries), len(entries), zero)
    for k, x in enumerate(entries):
        a[k, k] = x
    return a


def kron(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.kron(A, B)


def mat_equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and bool((A == B).all())


def mat_power(A: np.ndarray, k: int, zero=ZERO, one=ONE) -> np.ndarray:
    out = eye(A.shape[0], zero, one)
    for _ in range(k):
        out = out @ A
    return out


def _as_rows(A: np.ndarray) -> list:
    return [list(r) for r in A]


# ------------------------------------------------------------------ backends

@dataclass
class Backend:
    """How scalars are represented: exactly symbolic, or specialized to rationals."""

    name: str = "symbolic"
    assignment: dict | None = None
    seed: int | None = None
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def zero(self):
        return ZERO if self.name == "symbolic" else Fraction(0)

    @property
    def one(self):
        return ONE if self.name == "symbolic" else Fraction(1)

    def ev(self, x):
        if self.name == "symbolic":
            return as_field(x)
        if not isinstance(x, FieldElem):
            return Fraction(x)
        hit = self._memo.get(x)
        if hit is None:
            hit = specialize(x, self.assignment)
            self._memo[x] = hit
        return hit

    def mat(self, A: np.ndarray) -> np.ndarray:
        if self.name == "symbolic":
            return A
        out = np.empty(A.shape, dtype=object)
        for idx, x in np.ndenumerate(A):
            out[idx] = self.ev(x)
        return out


SYMBOLIC = Backend()


def specialized_backend(elems, seed: int = 0, max_tries: int = 200) -> Backend:
    """Seeded rational assignment under which every given element is defined.

    Each variable is sent to a random rational raised to the lcm of its
    exponent denominators, so rational powers evaluate exactly.
    """
    elems = [as_field(x) for x in elems]
    dens = exponent_denominators(elems)
    names = sorted(set(dens) | {k for x in elems for k in x.variables()})
    rng = random.Random(seed)
    for _ in range(max_tries):
        assignment = {}
        for k in names:
            base = Fraction(1)
            while base == 1:
                base = Fraction(rng.randint(1, 7), rng.randint(1, 5))
            assignment[k] = base ** dens.get(k, 1)
        b = Backend("specialized", assignment, seed)
        try:
            for x in elems:
                b.ev(x)
        except EvaluationError:
            continue
        return b
    raise EvaluationError("no admissible assignment found")


# ------------------------------------------------------------------ modules

@dataclass
class WeightModule:
    """Generator matrices for e_i, f_i, omega_i, omega'_i on a finite basis.

    ``weights`` holds the root-coordinate weight of each basis vector, or None
    for modules of a rank-one subalgebra with symbolic characters.
    """

    P: ParamMatrix
    E: dict
    F: dict
    W: dict
    Wp: dict
    weights: list | None = None
    datum: CartanDatum | None = None
    label: str = ""

    @property
    def dim(self) -> int:
        return next(iter(self.E.values())).shape[0]

    @property
    def indices(self) -> list:
        return sorted(self.E)

    def identity(self) -> np.ndarray:
        return eye(self.dim)

    def depth(self) -> int:
        """Largest height of a difference of two weights lying in the positive root cone."""
        if self.weights is None:
            return self.dim - 1
        best = 0
        for a in self.weights:
            for b in self.weights:
                d = [x - y for x, y in zip(a, b)]
                if all(x >= 0 and Fraction(x).denominator == 1 for x in d):
                    best = max(best, int(sum(d)))
        return best

    def to_json(self) -> dict:
        def m2j(A):
            return [[str(x) for x in row] for row in A]
        return {
            "label": self.label,
            "dim": self.dim,
            "weights": None if self.weights is None else [[str(c) for c in w] for w in self.weights],
            "e": {str(i + 1): m2j(self.E[i]) for i in self.indices},
            "f": {str(i + 1): m2j(self.F[i]) for i in self.indices},
        }


def _omega_mats(P: ParamMatrix, weights: list, indices) -> tuple:
    W, Wp = {}, {}
    for i in indices:
        a = tuple(int(k == i) for k in range(P.n))
        W[i] = diag([P.pair(a, w) for w in weights])
        Wp[i] = diag([P.pair(w, a).inverse() for w in weights])
    return W, Wp


def trivial_module(datum: CartanDatum, P: ParamMatrix | None = None) -> WeightModule:
    P = P or datum.param_matrix()
    idx = range(datum.n)
    w = [tuple(Fraction(0) for _ in idx)]
    W, Wp = _omega_mats(P, w, idx)
    return WeightModule(P, {i: zeros(1, 1) for i in idx}, {i: zeros(1, 1) for i in idx},
                        W, Wp, w, datum, "trivial")


def tensor(M: WeightModule, N: WeightModule) -> WeightModule:
    """M (x) N with e -> e(x)1 + w(x)e, f -> 1(x)f + f(x)w', group-likes diagonal."""
    I_M, I_N = M.identity(), N.identity()
    E = {i: kron(M.E[i], I_N) + kron(M.W[i], N.E[i]) for i in M.indices}
    F = {i: kron(I_M, N.F[i]) + kron(M.F[i], N.Wp[i]) for i in M.indices}
    W = {i: kron(M.W[i], N.W[i]) for i in M.indices}
    Wp = {i: kron(M.Wp[i], N.Wp[i]) for i in M.indices}
    weights = None
    if M.weights is not None and N.weights is not None:
        weights = [tuple(x + y for x, y in zip(a, b)) for a in M.weights for b in N.weights]
    return WeightModule(M.P, E, F, W, Wp, weights, M.datum, f"{M.label}(x){N.label}")


# ---------------------------------------------------------------- relations

def _inv_diag(A: np.ndarray) -> np.ndarray:
    out = zeros(*A.shape)
    for k in range(A.shape[0]):
        if A[k, k] == 0:
            raise DomainError("group-like acts non-invertibly")
        out[k, k] = as_field(A[k, k]).inverse()
    return out


def _is_diag(A: np.ndarray) -> bool:
    n = A.shape[0]
    return all(A[r, c] == 0 for r in range(n) for c in range(n) if r != c)


def check_relations(M: WeightModule) -> list:
    """Names of the defining relations that fail as matrix identities (empty when all hold)."""
    P, idx = M.P, M.indices
    bad = []
    for i in idx:
        if not (_is_diag(M.W[i]) and _is_diag(M.Wp[i])):
            bad.append(f"toral diagonal {i + 1}")
            return bad
    Winv = {i: _inv_diag(M.W[i]) for i in idx}
    Wpinv = {i: _inv_diag(M.Wp[i]) for i in idx}
    for i in idx:
        for j in idx:
            t = f"({i + 1},{j + 1})"
            if not mat_equal(M.W[i] @ M.Wp[j], M.Wp[j] @ M.W[i]):
                bad.append("toral mixed commute" + t)
            if not (mat_equal(M.W[i] @ M.W[j], M.W[j] @ M.W[i])
                    and mat_equal(M.Wp[i] @ M.Wp[j], M.Wp[j] @ M.Wp[i])):
                bad.append("toral commute" + t)
            if not (mat_equal(M.W[i] @ M.E[j] @ Winv[i], M.E[j] * P.q(i, j))
                    and mat_equal(M.Wp[i] @ M.E[j] @ Wpinv[i], M.E[j] * P.q(j, i).inverse())):
                bad.append("toral on e" + t)
            if not (mat_equal(M.W[i] @ M.F[j] @ Winv[i], M.F[j] * P.q(i, j).inverse())
                    and mat_equal(M.Wp[i] @ M.F[j] @ Wpinv[i], M.F[j] * P.q(j, i))):
                bad.append("toral on f" + t)
            rhs = zeros(M.dim, M.dim)
            if i == j:
                q = P.q(i, i)
                rhs = (M.W[i] - M.Wp[i]) * (q / (q - 1))
            if not mat_equal(M.E[i] @ M.F[j] - M.F[j] @ M.E[i], rhs):
                bad.append("ef commutator" + t)
            if i != j:
                coeffs = Borel(P).serre_coefficients(i, j)
                N = len(coeffs) - 1
                s6, s7 = zeros(M.dim, M.dim), zeros(M.dim, M.dim)
                for k, c in enumerate(coeffs):
                    s6 = s6 + mat_power(M.E[i], N - k) @ M.E[j] @ mat_power(M.E[i], k) * c
                    s7 = s7 + mat_power(M.F[i], k) @ M.F[j] @ mat_power(M.F[i], N - k) * c
                if any(x != 0 for x in s6.flat):
                    bad.append("serre e" + t)
                if any(x != 0 for x in s7.flat):
                    bad.append("serre f" + t)
    return bad


def commutator_powers_check(M: WeightModule, mmax: int = 5) -> bool:
    """Both commutation formulas for e_i with powers of f_i (and f_i with powers of e_i) as operators."""
    P = M.P
    for i in M.indices:
        q = P.q(i, i)
        c = q / (q - 1)
        qi = q.inverse()
        E, F, W, Wp = M.E[i], M.F[i], M.W[i], M.Wp[i]
        for m in range(1, mmax + 1):
            Fm, Fm1 = mat_power(F, m), mat_power(F, m - 1)
            Em, Em1 = mat_power(E, m), mat_power(E, m - 1)
            lhs = E @ Fm
            rhs = Fm @ E + Fm1 @ (W * qint(m, qi) - Wp * qint(m, q)) * c
            if not mat_equal(lhs, rhs):
                return False
            lhs = Em @ F
            rhs = F @ Em + Em1 @ (W * qint(m, q) - Wp * qint(m, qi)) * c
            if not mat_equal(lhs, rhs):
                return False
    return True


def commutator_powers_double_check(P: ParamMatrix, i: int, mmax: int = 5) -> bool:
    """The same two formulas in the free double, via straightening E past F."""
    from .twist import Double

    D = Double(P)
    q = P.q(i, i)
    c, qi = q / (q - 1), q.inverse()
    for m in range(1, mmax + 1):
        lhs = D.mul(D.E(i), D.F(*[i] * m))
        rhs = D.mul(D.F(*[i] * m), D.E(i)) + D.mul(
            D.F(*[i] * (m - 1)), D.K(i).scale(qint(m, qi)) - D.Kp(i).scale(qint(m, q))).scale(c)
        if lhs != rhs:
            return False
        lhs = D.mul(D.E(*[i] * m), D.F(i))
        rhs = D.mul(D.F(i), D.E(*[i] * m)) + D.mul(
            D.E(*[i] * (m - 1)), D.K(i).scale(qint(m, q)) - D.Kp(i).scale(qint(m, qi))).scale(c)
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------- rank one

@dataclass
class Rank1Simple:
    module: WeightModule
    e_scalars: list          # e v_j = e_scalars[j] v_(j-1)
    formula_scalars: list    # phi q^(1-m) (m-j+1)_q (j)_q
    consistent: bool         # the top relation [e, f] v_m holds

    @property
    def agrees_with_formula(self) -> bool:
        return self.e_scalars == self.formula_scalars


def rank1_simple(P: ParamMatrix, i: int, phi, m: int) -> Rank1Simple:
    """The (m+1)-dimensional simple module of the rank-one subalgebra at index i.

    The e-scalars are solved from the commutator relation on v_0..v_m.
    """
    if m < 0:
        raise DomainError("m must be nonnegative")
    phi = as_field(phi)
    q = P.q(i, i)
    kappa = q / (q - 1)
    qi = q.inverse()
    w = [phi * qi ** j for j in range(m + 1)]
    wp = [phi * q ** (j - m) for j in range(m + 1)]
    c = [ZERO]
    for j in range(m):
        # e f v_j - f e v_j = c_(j+1) v_j - c_j v_j = kappa (w_j - wp_j) v_j
        c.append(c[j] + kappa * (w[j] - wp[j]))
    consistent = -c[m] == kappa * (w[m] - wp[m])
    E, F = zeros(m + 1, m + 1), zeros(m + 1, m + 1)
    for j in range(1, m + 1):
        E[j - 1, j] = c[j]
        F[j, j - 1] = ONE
    closed = [ZERO] + [phi * q ** (1 - m) * qint(m - j + 1, q) * qint(j, q) for j in range(1, m + 1)]
    mod = WeightModule(P, {i: E}, {i: F}, {i: diag(w)}, {i: diag(wp)}, None, None, f"L_{i + 1}(m={m})")
    return Rank1Simple(mod, c, closed, consistent)


@dataclass
class VermaRank1:
    P: ParamMatrix
    i: int
    phi: FieldElem
    phip: FieldElem

    def e_scalar(self, m: int) -> FieldElem:
        """e v_m = e_scalar(m) v_(m-1)."""
        q = self.P.q(self.i, self.i)
        return q / (q - 1) * (qint(m, q.inverse()) * self.phi - qint(m, q) * self.phip)

    def omega(self, m: int) -> FieldElem:
        return self.phi * self.P.q(self.i, self.i) ** (-m)

    def omega_p(self, m: int) -> FieldElem:
        return self.phip * self.P.q(self.i, self.i) ** m

    def boundary(self, depth: int) -> int | None:
        """First j >= 0 with phi q^(-j) = phi', i.e. the submodule spanned by v_k, k > j; None if simple to depth."""
        q = self.P.q(self.i, self.i)
        for j in range(depth + 1):
            if self.phi * q ** (-j) - self.phip == 0:
                return j
        return None

    def first_vanishing_e(self, depth: int) -> int | None:
        """First m >= 1 with e v_m = 0 (a singular vector v_m), by direct evaluation."""
        for m in range(1, depth + 2):
            if self.e_scalar(m) == 0:
                return m
        return None

    def truncated(self, depth: int) -> WeightModule:
        """Matrices on v_0..v_depth (f v_depth dropped); relations hold away from the top vector."""
        n = depth + 1
        E, F = zeros(n, n), zeros(n, n)
        for m in range(1, n):
            E[m - 1, m] = self.e_scalar(m)
            F[m, m - 1] = ONE
        W = diag([self.omega(m) for m in range(n)])
        Wp = diag([self.omega_p(m) for m in range(n)])
        return WeightModule(self.P, {self.i: E}, {self.i: F}, {self.i: W}, {self.i: Wp}, None, None, "verma")


def verma_rank1(P: ParamMatrix, i: int, phi, phip) -> VermaRank1:
    return VermaRank1(P, i, as_field(phi), as_field(phip))


# ------------------------------------------------------------ highest weight

class Shapovalov:
    """The contravariant form (f_w v, f_u v) = coefficient of v in e_(w_k)...e_(w_1) f_u v."""

    def __init__(self, datum: CartanDatum, lam, P: ParamMatrix | None = None):
        self.datum = datum
        self.P = P or datum.param_matrix()
        self.lam = tuple(Fraction(x) for x in lam)
        self.n = datum.n
        self._memo: dict = {}
        self._c = [self.P.q(i, i) / (self.P.q(i, i) - 1) for i in range(self.n)]

    def weight_after(self, word) -> tuple:
        out = list(self.lam)
        for i in word:
            out[i] -= 1
        return tuple(out)

    def e_action(self, i: int, u: tuple) -> dict:
        """e_i f_u v as {word: coefficient}."""
        out: dict = {}
        a = tuple(int(k == i) for k in range(self.n))
        for p, letter in enumerate(u):
            if letter != i:
                continue
            mu = self.weight_after(u[p + 1:])
            c = self._c[i] * (self.P.pair(a, mu) - self.P.pair(mu, a).inverse())
            if c:
                k = u[:p] + u[p + 1:]
                s = out.get(k, ZERO) + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def form(self, w: tuple, u: tuple) -> FieldElem:
        if len(w) != len(u):
            return ZERO
        if not w:
            return ONE
        key = (w, u)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        acc = ZERO
        for k, c in self.e_action(w[0], u).items():
            acc = acc + c * self.form(w[1:], k)
        self._memo[key] = acc
        return acc

    def block(self, beta) -> list:
        words = words_of_degree(beta)
        return [[self.form(w, u) for u in words] for w in words]


@dataclass
class _Level:
    beta: tuple
    words: list          # all f-words of degree beta
    basis: list          # chosen basis words (columns)
    rows: list           # independent row words
    minv: list           # inverse of the chosen minor
    offset: int


class HighestWeightModule(WeightModule):
    """The simple quotient of the Verma module, built from the contravariant form."""

    shap: Shapovalov = None
    levels: dict = None
    highest: tuple = ()

    def basis_words(self) -> list:
        out = []
        for lev in sorted(self.levels.values(), key=lambda L: L.offset):
            out.extend(lev.basis)
        return out


def highest_weight_module(datum: CartanDatum, highest, P: ParamMatrix | None = None,
                          max_depth: int = 12) -> HighestWeightModule:
    """L(lambda) for lambda given in fundamental-weight coordinates."""
    P = P or datum.param_matrix()
    lam = datum.weight(highest)
    S = Shapovalov(datum, lam, P)
    n = datum.n
    levels: dict = {}
    offset = 0
    h = 0
    while True:
        if h > max_depth:
            stuck = [i + 1 for i in range(n)
                     if all(mat_rank(S.block(tuple(k * int(j == i) for j in range(n)))) > 0
                            for k in range(1, max_depth + 1))]
            raise NotIntegrable(
                f"weight {tuple(highest)} gives nonzero vectors beyond height {max_depth}; "
                f"f_i not nilpotent on the highest vector for i in {stuck}")
        any_nonzero = False
        for beta in degrees_of_height(h, n):
            words = words_of_degree(beta)
            blk = [[S.form(w, u) for u in words] for w in words]
            rows = independent_rows(blk)
            if not rows:
                continue
            cols = independent_rows(transpose(blk))
            minor = [[blk[r][c] for c in cols] for r in rows]
            minv = inverse(minor, ZERO, ONE)
            levels[beta] = _Level(beta, words, [words[c] for c in cols], [words[r] for r in rows], minv, offset)
            offset += len(cols)
            any_nonzero = True
        if not any_nonzero:
            break
        h += 1
    dim = offset
    weights = [None] * dim
    for lev in levels.values():
        w = tuple(l - b for l, b in zip(lam, lev.beta))
        for k in range(len(lev.basis)):
            weights[lev.offset + k] = w

    def coords(vec: dict, beta) -> list:
        """Coordinates of sum c_x f_x v (all x of degree beta) in the level basis."""
        lev = levels.get(beta)
        if lev is None:
            return []
        rhs = [sum((c * S.form(r, x) for x, c in vec.items()), ZERO) for r in lev.rows]
        return [sum((lev.minv[k][t] * rhs[t] for t in range(len(rhs))), ZERO) for k in range(len(lev.basis))]

    E = {i: zeros(dim, dim) for i in range(n)}
    F = {i: zeros(dim, dim) for i in range(n)}
    for lev in levels.values():
        for k, u in enumerate(lev.basis):
            col = lev.offset + k
            for i in range(n):
                up = tuple(b - int(j == i) for j, b in enumerate(lev.beta))
                if up in levels:
                    for t, c in enumerate(coords(S.e_action(i, u), up)):
                        E[i][levels[up].offset + t, col] = c
                down = tuple(b + int(j == i) for j, b in enumerate(lev.beta))
                if down in levels:
                    for t, c in enumerate(coords({(i,) + u: ONE}, down)):
                        F[i][levels[down].offset + t, col] = c
    W, Wp = _omega_mats(P, weights, range(n))
    M = HighestWeightModule(P, E, F, W, Wp, weights, datum, f"L{tuple(int(x) for x in highest)}")
    M.shap, M.levels, M.highest = S, levels, tuple(highest)
    return M


def nilpotency_index(M: WeightModule, i: int, vec: int = 0, bound: int = 50) -> int:
    """Least k with f_i^k v = 0 for the basis vector ``vec``."""
    x = zeros(M.dim, 1)
    x[vec, 0] = ONE
    for k in range(bound + 1):
        if all(y == 0 for y in x.flat):
            return k
        x = M.F[i] @ x
    raise DomainError("f_i not nilpotent within bound")


def shapovalov_rank_check(datum: CartanDatum, highest, max_height: int, P: ParamMatrix | None = None) -> bool:
    """For a large highest weight, y -> y v is injective on each negative degree up to max_height.

    Checked as: rank of the contravariant-form block equals the pairing Gram rank.
    """
    P = P or datum.param_matrix()
    S = Shapovalov(datum, datum.weight(highest), P)
    B = Borel(P)
    for h in range(1, max_height + 1):
        for beta in degrees_of_height(h, datum.n):
            if mat_rank(S.block(beta)) != B.gram(beta).rank:
                return False
    return True


# -------------------------------------------------------- Theta and Casimir

def _word_matrix(mats: dict, word, dim: int, backend: Backend, memo: dict) -> np.ndarray:
    key = tuple(word)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not key:
        out = eye(dim, backend.zero, backend.one)
    else:
        out = backend.mat(mats[key[0]]) @ _word_matrix(mats, key[1:], dim, backend, memo)
    memo[key] = out
    return out


def theta_blocks(M: WeightModule, N: WeightModule, cutoff: int, backend: Backend = SYMBOLIC) -> dict:
    """beta -> matrix of Theta_beta = sum_k v_k (x) u_k acting on M (x) N (v on M, u on N)."""
    B = Borel(M.P)
    memo_f, memo_e = {}, {}
    out = {}
    n = M.P.n
    for h in range(cutoff + 1):
        for beta in degrees_of_height(h, n):
            if h == 0:
                out[beta] = eye(M.dim * N.dim, backend.zero, backend.one)
                continue
            db = B.dual_bases(beta)
            acc = zeros(M.dim * N.dim, M.dim * N.dim, backend.zero)
            for k, uw in enumerate(db.u_words):
                U = _word_matrix(N.E, uw, N.dim, backend, memo_e)
                if not any(x != 0 for x in U.flat):
                    continue
                V = zeros(M.dim, M.dim, backend.zero)
                for r, vw in enumerate(db.v_words):
                    c = db.coeffs[k][r]
                    if c:
                        V = V + _word_matrix(M.F, vw, M.dim, backend, memo_f) * backend.ev(c)
                acc = acc + kron(V, U)
            out[beta] = acc
    return out


def casimir(M: WeightModule, cutoff: int | None = None, backend: Backend = SYMBOLIC) -> np.ndarray:
    """sum_beta sum_k S(v_k) u_k acting on M, with S(f_i) = -f_i omega_i'^(-1)."""
    depth = M.depth()
    if cutoff is None:
        cutoff = depth
    if cutoff < depth:
        raise DomainError(f"cutoff {cutoff} below module depth {depth}; truncation would be inexact")
    B = Borel(M.P)
    Sf = {i: -(backend.mat(M.F[i]) @ backend.mat(_inv_diag(M.Wp[i]))) for i in M.indices}
    memo_s, memo_e = {}, {}
    total = eye(M.dim, backend.zero, backend.one)
    for h in range(1, cutoff + 1):
        for beta in degrees_of_height(h, M.P.n):
            db = B.dual_bases(beta)
            for k, uw in enumerate(db.u_words):
                U = _word_matrix(M.E, uw, M.dim, backend, memo_e)
                if not any(x != 0 for x in U.flat):
                    continue
                V = zeros(M.dim, M.dim, backend.zero)
                for r, vw in enumerate(db.v_words):
                    c = db.coeffs[k][r]
                    if c:
                        # S(f_w1 ... f_wk) = S(f_wk) ... S(f_w1)
                        V = V + _word_matrix(Sf, tuple(reversed(vw)), M.dim, backend, memo_s) * backend.ev(c)
                total = total + V @ U
    return total


def t_param(P: ParamMatrix) -> FieldElem:
    return P.q(0, 0) ** Fraction(1, P.d[0])


def g_value(datum: CartanDatum, P: ParamMatrix, mu) -> FieldElem:
    """t^((mu + rho, mu + rho) / 2)."""
    rho = datum.rho
    s = tuple(Fraction(a) + b for a, b in zip(mu, rho))
    return t_param(P) ** (datum.form(s, s) / 2)


def xi_operator(M: WeightModule) -> np.ndarray:
    if M.weights is None or M.datum is None:
        raise DomainError("Xi needs weights and a finite-type datum")
    return diag([g_value(M.datum, M.P, w) for w in M.weights])


def casimir_commutation_check(M: WeightModule, omega: np.ndarray | None = None) -> bool:
    """Omega e_i v = q_ii^(-(l + a_i)(h_i)) e_i Omega v and Omega f_i v = q_ii^(l(h_i)) f_i Omega v on V_l."""
    omega = casimir(M) if omega is None else omega
    D, P = M.datum, M.P
    for i in M.indices:
        q = P.q(i, i)
        a = tuple(int(k == i) for k in range(P.n))
        se = diag([q ** (-D.h(tuple(x + y for x, y in zip(w, a)), i)) for w in M.weights])
        sf = diag([q ** D.h(w, i) for w in M.weights])
        if not mat_equal(omega @ M.E[i], M.E[i] @ omega @ se):
            return False
        if not mat_equal(omega @ M.F[i], M.F[i] @ omega @ sf):
            return False
    return True


def commutes_with_generators(M: WeightModule, X: np.ndarray) -> bool:
    return all(mat_equal(X @ G[i], G[i] @ X) for G in (M.E, M.F, M.W, M.Wp) for i in M.indices)


def theta_commutation_check(M: WeightModule, N: WeightModule) -> bool:
    """The two Theta commutation identities with e_i and f_i on M (x) N, degree by degree."""
    cutoff = min(M.depth(), N.depth())
    th = theta_blocks(M, N, cutoff + 1)
    IM, IN = M.identity(), N.identity()
    zero = zeros(M.dim * N.dim, M.dim * N.dim)
    for beta, T in th.items():
        for i in M.indices:
            prev = tuple(b - int(k == i) for k, b in enumerate(beta))
            Tp = th.get(prev, zero) if min(prev) >= 0 else zero
            lhs = kron(M.E[i], IN) @ T + kron(M.W[i], N.E[i]) @ Tp
            rhs = T @ kron(M.E[i], IN) + Tp @ kron(M.Wp[i], N.E[i])
            if not mat_equal(lhs, rhs):
                return False
            lhs = kron(IM, N.F[i]) @ T + kron(M.F[i], N.Wp[i]) @ Tp
            rhs = T @ kron(IM, N.F[i]) + Tp @ kron(M.F[i], N.W[i])
            if not mat_equal(lhs, rhs):
                return False
    return True


# ------------------------------------------------------------------ braiding

def flip(dm: int, dn: int, backend: Backend = SYMBOLIC) -> np.ndarray:
    """P: M (x) N -> N (x) M."""
    out = zeros(dm * dn, dm * dn, backend.zero)
    for a in range(dm):
        for b in range(dn):
            out[b * dm + a, a * dn + b] = backend.one
    return out


def braiding(M: WeightModule, N: WeightModule, backend: Backend = SYMBOLIC) -> np.ndarray:
    """R_(M,N) = Theta_(N,M) p_(N,M) P : M (x) N -> N (x) M."""
    if M.weights is None or N.weights is None:
        raise DomainError("braiding needs weight modules")
    cutoff = min(M.depth(), N.depth())
    th = theta_blocks(N, M, cutoff, backend)
    theta = sum(th.values(), zeros(M.dim * N.dim, M.dim * N.dim, backend.zero))
    p = diag([backend.ev(M.P.pair(b, a).inverse()) for b in N.weights for a in M.weights], backend.zero)
    return theta @ p @ flip(M.dim, N.dim, backend)


def generator_actions(M: WeightModule, backend: Backend = SYMBOLIC) -> list:
    out = []
    for i in M.indices:
        for name, G in (("e", M.E), ("f", M.F), ("w", M.W), ("w'", M.Wp)):
            out.append((f"{name}{i + 1}", backend.mat(G[i])))
    return out


def intertwiner_check(M: WeightModule, N: WeightModule, backend: Backend = SYMBOLIC) -> list:
    """Generators x for which Delta(x) R != R Delta(x); empty when R is a module map."""
    R = braiding(M, N, backend)
    MN, NM = tensor(M, N), tensor(N, M)
    bad = []
    for (name, X), (_, Y) in zip(generator_actions(MN, backend), generator_actions(NM, backend)):
        if not mat_equal(Y @ R, R @ X):
            bad.append(name)
    return bad


def qybe_sides(M1: WeightModule, M2: WeightModule, M3: WeightModule, backend: Backend = SYMBOLIC):
    """R12 R23 R12 and R23 R12 R23, both mapping M1 (x) M2 (x) M3 to M3 (x) M2 (x) M1."""
    d1, d2, d3 = M1.dim, M2.dim, M3.dim

    def I(d):
        return eye(d, backend.zero, backend.one)

    lhs = (kron(braiding(M2, M3, backend), I(d1))
           @ kron(I(d2), braiding(M1, M3, backend))
           @ kron(braiding(M1, M2, backend), I(d3)))
    rhs = (kron(I(d3), braiding(M1, M2, backend))
           @ kron(braiding(M1, M3, backend), I(d2))
           @ kron(I(d1), braiding(M2, M3, backend)))
    return lhs, rhs


def qybe_check(M1: WeightModule, M2: WeightModule, M3: WeightModule, backend: Backend = SYMBOLIC) -> bool:
    lhs, rhs = qybe_sides(M1, M2, M3, backend)
    return mat_equal(lhs, rhs)


def backend_for(modules, seed: int = 0) -> Backend:
    """A specialized backend admissible for the braidings among the given modules."""
    elems = []
    P = modules[0].P
    for M in modules:
        for G in (M.E, M.F, M.W, M.Wp):
            for A in G.values():
                elems.extend(x for x in A.flat if x != 0)
        for N in modules:
            elems.extend(P.pair(b, a).inverse() for b in N.weights for a in M.weights)
    cutoff = max(M.depth() for M in modules)
    B = Borel(P)
    for h in range(1, cutoff + 1):
        for beta in degrees_of_height(h, P.n):
            db = B.dual_bases(beta)
            elems.extend(c for row in db.coeffs for c in row if c)
    return specialized_backend(elems, seed)


# --------------------------------------------------------------- decompose

@dataclass
class Constituent:
    highest: tuple      # fundamental-weight coordinates
    multiplicity: int
    dim: int


def decompose(M: WeightModule) -> list:
    """Highest weights of the simple summands, from the eigenspaces of Omega Xi."""
    D = M.datum
    C = casimir(M) @ xi_operator(M)
    seen = {}
    out = []
    for w in sorted(set(M.weights), key=lambda x: tuple(-c for c in x)):
        if not D.is_dominant(w):
            continue
        idx = [k for k, x in enumerate(M.weights) if x == w]
        stacked = [[M.E[i][r, c] for c in idx] for i in M.indices for r in range(M.dim)]
        mult = len(idx) - mat_rank(stacked)
        if mult == 0:
            continue
        g = g_value(D, M.P, w)
        if g in seen:
            raise InternalError(f"Omega Xi eigenvalue collision between {seen[g]} and {w}")
        seen[g] = w
        shifted = C - eye(M.dim) * g
        eig = M.dim - mat_rank(_as_rows(shifted))
        if eig % mult:
            raise InternalError("eigenspace dimension not a multiple of the multiplicity")
        out.append(Constituent(tuple(int(x) for x in D.to_weight_basis(w)), mult, eig // mult))
    if sum(c.multiplicity * c.dim for c in out) != M.dim:
        raise InternalError("constituent dimensions do not add up")
    return out
