"""Free Borel halves with coproduct, Serre elements, skew derivations and the pairing.

Positive half: monomials e_w omega_mu.  Negative half: monomials f_w omega'_mu.
In both cases the toral part sits to the right of the word.  Words are tuples
of 0-based letters, toral parts are integer tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .cartan import CartanDatum, degrees_of_height
from .coeff import ONE, ZERO, FieldElem, ParamMatrix, as_field, qbinom
from .errors import DomainError, InternalError
from .linalg import independent_rows, inverse, left_kernel, rank as mat_rank, transpose
from .shuffle import ShuffleAlgebra, ShuffleElem, word_degree

PLUS, MINUS = "+", "-"


def _add_into(d: dict, key, c):
    s = d.get(key, ZERO) + c
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def words_of_degree(beta) -> list:
    """All words with letter counts beta, in lexicographic order."""
    letters = [i for i, b in enumerate(beta) for _ in range(int(b))]
    return sorted(set(permutations(letters)))


class BorelElem:
    """Linear combination of (word, toral vector) monomials in one Borel half."""

    __slots__ = ("alg", "sign", "terms")

    def __init__(self, alg: "Borel", sign: str, terms: dict):
        self.alg, self.sign, self.terms = alg, sign, terms

    def _check(self, other):
        if not isinstance(other, BorelElem) or other.sign != self.sign:
            raise DomainError("Borel elements of different halves")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return BorelElem(self.alg, self.sign, out)

    def __neg__(self):
        return BorelElem(self.alg, self.sign, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a) -> "BorelElem":
        a = as_field(a)
        if not a:
            return BorelElem(self.alg, self.sign, {})
        return BorelElem(self.alg, self.sign, {k: a * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BorelElem):
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, BorelElem):
            return NotImplemented
        return self.sign == other.sign and self.terms == other.terms

    def __hash__(self):
        return hash((self.sign, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def word_part(self) -> dict:
        """Coefficients by word; requires every toral part to vanish."""
        out = {}
        for (w, mu), c in self.terms.items():
            if any(mu):
                raise DomainError("element has a nonzero toral part")
            out[w] = c
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        gen, tor = ("e", "w") if self.sign == PLUS else ("f", "w'")
        parts = []
        for (w, mu), c in sorted(self.terms.items()):
            s = "".join(f"{gen}{i + 1}" for i in w)
            if any(mu):
                s += f"{tor}{list(mu)}"
            parts.append(f"({c})*{s or '1'}")
        return " + ".join(parts)

    __repr__ = __str__


class TensorSquareElem:
    """Element of B (x) B for a Borel half B, stored as monomial pairs."""

    __slots__ = ("alg", "sign", "terms")

    def __init__(self, alg: "Borel", sign: str, terms: dict):
        self.alg, self.sign, self.terms = alg, sign, terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return TensorSquareElem(self.alg, self.sign, out)

    def __sub__(self, other):
        return self + TensorSquareElem(self.alg, self.sign, {k: -c for k, c in other.terms.items()})

    def __mul__(self, other):
        out: dict = {}
        mono = self.alg._mono_mul
        for (a1, a2), c in self.terms.items():
            for (b1, b2), d in other.terms.items():
                k1, s1 = mono(self.sign, a1, b1)
                k2, s2 = mono(self.sign, a2, b2)
                _add_into(out, (k1, k2), c * d * s1 * s2)
        return TensorSquareElem(self.alg, self.sign, out)

    def __eq__(self, other):
        return isinstance(other, TensorSquareElem) and self.sign == other.sign and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    @staticmethod
    def tensor(x: BorelElem, y: BorelElem) -> "TensorSquareElem":
        out: dict = {}
        for a, c in x.terms.items():
            for b, d in y.terms.items():
                _add_into(out, (a, b), c * d)
        return TensorSquareElem(x.alg, x.sign, out)


@dataclass
class GramBlock:
    """Pairing matrix between f-words (rows) and e-words (columns) of one degree.

    ``matrix = scale * reduced`` where ``reduced`` has polynomial entries.
    """

    beta: tuple
    rows: list
    cols: list
    scale: FieldElem
    reduced: list
    _rank: int | None = field(default=None, repr=False)

    @property
    def matrix(self) -> list:
        return [[self.scale * x for x in row] for row in self.reduced]

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = mat_rank(self.reduced)
        return self._rank


@dataclass
class DualBases:
    """Basis u_k of the positive part, dual basis v_k of the negative part, degree beta."""

    beta: tuple
    u_words: list
    v_words: list
    coeffs: list  # coeffs[k][r]: coefficient of f-word v_words[r] in v_k
    u: list
    v: list

    @property
    def theta(self) -> list:
        return list(zip(self.v, self.u))


class Borel:
    """The free Borel halves for a parameter matrix, with the pairing between them."""

    def __init__(self, P: ParamMatrix | CartanDatum):
        if isinstance(P, CartanDatum):
            P = P.param_matrix()
        self.P = P
        self.n = P.n
        self._pair_memo: dict = {}
        self._gram: dict = {}
        self._dual: dict = {}
        self._norm: dict = {}
        self._scale: dict = {}
        self._shuffle = ShuffleAlgebra(P)

    # ------------------------------------------------------------ elements
    def zero_vec(self) -> tuple:
        return (0,) * self.n

    def alpha(self, i: int) -> tuple:
        return tuple(int(k == i) for k in range(self.n))

    def deg(self, w) -> tuple:
        return word_degree(w, self.n)

    def elem(self, sign: str, word=(), mu=None, coeff=ONE) -> BorelElem:
        mu = self.zero_vec() if mu is None else tuple(mu)
        coeff = as_field(coeff)
        return BorelElem(self, sign, {(tuple(word), mu): coeff} if coeff else {})

    def e(self, *word) -> BorelElem:
        return self.elem(PLUS, word)

    def f(self, *word) -> BorelElem:
        return self.elem(MINUS, word)

    def omega(self, mu, sign: str = PLUS) -> BorelElem:
        return self.elem(sign, (), mu)

    def one(self, sign: str = PLUS) -> BorelElem:
        return self.elem(sign)

    # ------------------------------------------------------- multiplication
    def _mono_mul(self, sign, a, b):
        (w1, m1), (w2, m2) = a, b
        mu = tuple(x + y for x, y in zip(m1, m2))
        if not any(m1) or not w2:
            return (w1 + w2, mu), ONE
        d2 = self.deg(w2)
        s = self.P.pair(m1, d2) if sign == PLUS else self.P.pair(d2, m1)
        return (w1 + w2, mu), s

    def mul(self, x: BorelElem, y: BorelElem) -> BorelElem:
        if x.sign != y.sign:
            raise DomainError("borel_mul needs elements of the same half")
        out: dict = {}
        for a, c in x.terms.items():
            for b, d in y.terms.items():
                k, s = self._mono_mul(x.sign, a, b)
                _add_into(out, k, c * d * s)
        return BorelElem(self, x.sign, out)

    # ------------------------------------------------------------ coproduct
    def _coproduct_mono(self, sign, w, mu) -> dict:
        out: dict = {}
        k = len(w)
        P = self.P
        for r in range(k + 1):
            for S in combinations(range(k), r):
                Sset = set(S)
                rest = tuple(w[p] for p in range(k) if p not in Sset)
                chosen = tuple(w[p] for p in S)
                moved = list(mu)
                for p in S:
                    moved[w[p]] += 1
                coef = ONE
                for p in S:
                    later = [w[q] for q in range(p + 1, k) if q not in Sset]
                    if later:
                        a = self.alpha(w[p])
                        coef = coef * (P.pair(a, self.deg(later)) if sign == PLUS
                                       else P.pair(self.deg(later), a))
                if sign == PLUS:
                    key = ((rest, tuple(moved)), (chosen, tuple(mu)))
                else:
                    key = ((chosen, tuple(mu)), (rest, tuple(moved)))
                _add_into(out, key, coef)
        return out

    def coproduct(self, x: BorelElem) -> TensorSquareElem:
        out: dict = {}
        for (w, mu), c in x.terms.items():
            for key, s in self._coproduct_mono(x.sign, w, mu).items():
                _add_into(out, key, c * s)
        return TensorSquareElem(self, x.sign, out)

    def counit(self, x: BorelElem) -> FieldElem:
        return sum((c for (w, _), c in x.terms.items() if not w), ZERO)

    def counit_left(self, t: TensorSquareElem) -> BorelElem:
        out: dict = {}
        for ((w1, _), b), c in t.terms.items():
            if not w1:
                _add_into(out, b, c)
        return BorelElem(self, t.sign, out)

    def counit_right(self, t: TensorSquareElem) -> BorelElem:
        out: dict = {}
        for (a, (w2, _)), c in t.terms.items():
            if not w2:
                _add_into(out, a, c)
        return BorelElem(self, t.sign, out)

    # -------------------------------------------------------- Serre elements
    def serre_coefficients(self, i: int, j: int) -> list:
        if i == j:
            raise DomainError("Serre element needs i != j")
        P, a = self.P, self.P.A[i][j]
        qii, qij, N = P.q(i, i), P.q(i, j), 1 - a
        out = []
        for k in range(N + 1):
            c = qbinom(N, k, qii) * qii ** (k * (k - 1) // 2) * qij ** k
            out.append(-c if k % 2 else c)
        return out

    def serre_element(self, i: int, j: int, sign: str = PLUS) -> BorelElem:
        N = 1 - self.P.A[i][j]
        acc = BorelElem(self, sign, {})
        for k, c in enumerate(self.serre_coefficients(i, j)):
            w = (i,) * (N - k) + (j,) + (i,) * k
            if sign == MINUS:
                w = w[::-1]
            acc = acc + self.elem(sign, w, coeff=c)
        return acc

    def serre_coproduct_sides(self, i: int, j: int, sign: str):
        """Both sides of the skew-primitivity identity for u_ij^(sign)."""
        u = self.serre_element(i, j, sign)
        N = 1 - self.P.A[i][j]
        g = tuple(N * (k == i) + (k == j) for k in range(self.n))
        one = self.one(sign)
        if sign == PLUS:
            rhs = TensorSquareElem.tensor(u, one) + TensorSquareElem.tensor(self.omega(g, PLUS), u)
        else:
            rhs = TensorSquareElem.tensor(u, self.omega(g, MINUS)) + TensorSquareElem.tensor(one, u)
        return self.coproduct(u), rhs

    def check_serre_skew_primitive(self, i: int, j: int) -> bool:
        return all(l == r for l, r in (self.serre_coproduct_sides(i, j, s) for s in (PLUS, MINUS)))

    def check_serre_in_radical(self, i: int, j: int) -> bool:
        """The negative Serre element pairs to zero with every e-word of its degree."""
        u = self.serre_element(i, j, MINUS)
        beta = self.deg(next(iter(u.terms))[0])
        return all(not self.pair(u, self.e(*x)) for x in words_of_degree(beta))

    # ------------------------------------------------------ skew derivations
    def _derive(self, x: BorelElem, i: int, right: bool) -> BorelElem:
        if x.sign != PLUS:
            raise DomainError("skew derivations act on the positive half")
        out: dict = {}
        a = self.alpha(i)
        for w, c in x.word_part().items():
            for p, letter in enumerate(w):
                if letter != i:
                    continue
                if right:
                    s = self.P.pair(a, self.deg(w[p + 1:]))
                else:
                    s = self.P.pair(self.deg(w[:p]), a)
                _add_into(out, (w[:p] + w[p + 1:], self.zero_vec()), c * s)
        return BorelElem(self, PLUS, out)

    def partial_right(self, i: int, x: BorelElem) -> BorelElem:
        """Unnormalized right skew derivation (coefficient of (.) omega_i (x) e_i in the coproduct)."""
        return self._derive(x, i, True)

    def partial_left(self, i: int, x: BorelElem) -> BorelElem:
        """Unnormalized left skew derivation (coefficient of e_i omega (x) (.) in the coproduct)."""
        return self._derive(x, i, False)

    def norm(self, i: int) -> FieldElem:
        hit = self._norm.get(i)
        if hit is None:
            q = self.P.q(i, i)
            hit = self._norm[i] = q / (1 - q)
        return hit

    def partial_right_norm(self, i: int, x: BorelElem) -> BorelElem:
        return self.partial_right(i, x).scale(self.norm(i))

    def partial_left_norm(self, i: int, x: BorelElem) -> BorelElem:
        return self.partial_left(i, x).scale(self.norm(i))

    # --------------------------------------------------------------- pairing
    def _reduced_pairing(self, y: tuple, x: tuple, from_right: bool = False) -> FieldElem:
        """Pairing of f_y with e_x divided by prod_i norm(i)^(deg_i); a polynomial."""
        if len(y) != len(x):
            return ZERO
        if not y:
            return ONE
        key = (y, x, from_right)
        hit = self._pair_memo.get(key)
        if hit is not None:
            return hit
        if self.deg(y) != self.deg(x):
            self._pair_memo[key] = ZERO
            return ZERO
        i = y[-1] if from_right else y[0]
        rest = y[:-1] if from_right else y[1:]
        a = self.alpha(i)
        acc = ZERO
        for p, letter in enumerate(x):
            if letter != i:
                continue
            s = self.P.pair(a, self.deg(x[p + 1:])) if from_right else self.P.pair(self.deg(x[:p]), a)
            acc = acc + s * self._reduced_pairing(rest, x[:p] + x[p + 1:], from_right)
        self._pair_memo[key] = acc
        return acc

    def degree_scale(self, beta) -> FieldElem:
        beta = tuple(int(b) for b in beta)
        hit = self._scale.get(beta)
        if hit is None:
            hit = ONE
            for i, b in enumerate(beta):
                hit = hit * self.norm(i) ** b
            self._scale[beta] = hit
        return hit

    def pairing(self, y, x, from_right: bool = False) -> FieldElem:
        """Pairing of the f-word y with the e-word x (peeling y from the left by default)."""
        y, x = tuple(y), tuple(x)
        if self.deg(y) != self.deg(x):
            return ZERO
        return self.degree_scale(self.deg(y)) * self._reduced_pairing(y, x, from_right)

    def pair(self, y: BorelElem, x: BorelElem) -> FieldElem:
        """Bilinear pairing of elements, using <y w'_mu, x w_nu> = q_(nu mu) <y, x>."""
        if y.sign != MINUS or x.sign != PLUS:
            raise DomainError("pair takes (negative, positive) elements")
        acc = ZERO
        for (yw, mu), c in y.terms.items():
            for (xw, nu), d in x.terms.items():
                p = self.pairing(yw, xw)
                if p:
                    acc = acc + c * d * p * self.P.pair(nu, mu)
        return acc

    # ------------------------------------------------------ Gram and duals
    def gram(self, beta) -> GramBlock:
        beta = tuple(int(b) for b in beta)
        hit = self._gram.get(beta)
        if hit is not None:
            return hit
        words = words_of_degree(beta)
        red = [[self._reduced_pairing(y, x) for x in words] for y in words]
        block = GramBlock(beta, words, words, self.degree_scale(beta), red)
        self._gram.setdefault(beta, block)
        return self._gram[beta]

    def dual_bases(self, beta) -> DualBases:
        beta = tuple(int(b) for b in beta)
        hit = self._dual.get(beta)
        if hit is not None:
            return hit
        g = self.gram(beta)
        R = independent_rows(g.reduced)
        C = independent_rows(transpose(g.reduced))
        if len(R) != len(C):
            raise InternalError("row and column ranks differ")
        minor = [[g.reduced[r][c] * g.scale for c in C] for r in R]
        try:
            inv = inverse(minor, ZERO, ONE)
        except ZeroDivisionError as exc:
            raise InternalError("selected Gram minor is singular") from exc
        u_words = [g.cols[c] for c in C]
        v_words = [g.rows[r] for r in R]
        u = [self.e(*w) for w in u_words]
        v = []
        for k in range(len(C)):
            acc = BorelElem(self, MINUS, {})
            for r, w in enumerate(v_words):
                acc = acc + self.elem(MINUS, w, coeff=inv[k][r])
            v.append(acc)
        db = DualBases(beta, u_words, v_words, inv, u, v)
        self._dual.setdefault(beta, db)
        return self._dual[beta]

    def dual_expansion_check(self, beta) -> bool:
        """Expansion in the dual bases reproduces every word modulo the pairing radical."""
        db = self.dual_bases(beta)
        words = words_of_degree(beta)
        for x in words:
            ex = self.e(*x)
            approx = BorelElem(self, PLUS, {})
            for vk, uk in db.theta:
                approx = approx + uk.scale(self.pair(vk, ex))
            diff = ex - approx
            if any(self.pair(self.f(*y), diff) for y in words):
                return False
        for y in words:
            fy = self.f(*y)
            approx = BorelElem(self, MINUS, {})
            for vk, uk in db.theta:
                approx = approx + vk.scale(self.pair(fy, uk))
            diff = fy - approx
            if any(self.pair(diff, self.e(*x)) for x in words):
                return False
        return True

    def _sub_degrees(self, beta) -> list:
        out = [()]
        for b in beta:
            out = [g + (k,) for g in out for k in range(int(b) + 1)]
        return out

    def coproduct_expansion_check(self, beta) -> bool:
        """Coproducts of degree-beta words agree with the dual-basis expansions (both halves)."""
        beta = tuple(int(b) for b in beta)
        words = words_of_degree(beta)
        for x in words:
            lhs: dict = {}
            for ((w1, m1), (w2, m2)), c in self.coproduct(self.e(*x)).terms.items():
                gamma = self.deg(w2)
                if tuple(m1) != gamma or any(m2):
                    return False
                for y1 in words_of_degree(self.deg(w1)):
                    p1 = self.pairing(y1, w1)
                    if not p1:
                        continue
                    for y2 in words_of_degree(gamma):
                        _add_into(lhs, (y1, y2), c * p1 * self.pairing(y2, w2))
            rhs: dict = {}
            for gamma in self._sub_degrees(beta):
                rest = tuple(b - g for b, g in zip(beta, gamma))
                d1, d2 = self.dual_bases(rest), self.dual_bases(gamma)
                for vi, ui in d1.theta:
                    for vj, uj in d2.theta:
                        c = self.pair(self.mul(vi, vj), self.e(*x))
                        if not c:
                            continue
                        for y1 in words_of_degree(rest):
                            p1 = self.pair(self.f(*y1), ui)
                            if not p1:
                                continue
                            for y2 in words_of_degree(gamma):
                                _add_into(rhs, (y1, y2), c * p1 * self.pair(self.f(*y2), uj))
            if lhs != rhs:
                return False
        for y in words:
            lhs = {}
            for ((w1, m1), (w2, m2)), c in self.coproduct(self.f(*y)).terms.items():
                gamma = self.deg(w1)
                if any(m1) or tuple(m2) != gamma:
                    return False
                for x1 in words_of_degree(gamma):
                    p1 = self.pairing(w1, x1)
                    if not p1:
                        continue
                    for x2 in words_of_degree(self.deg(w2)):
                        _add_into(lhs, (x1, x2), c * p1 * self.pairing(w2, x2))
            rhs = {}
            for gamma in self._sub_degrees(beta):
                rest = tuple(b - g for b, g in zip(beta, gamma))
                d1, d2 = self.dual_bases(rest), self.dual_bases(gamma)
                for vi, ui in d1.theta:
                    for vj, uj in d2.theta:
                        c = self.pair(self.f(*y), self.mul(ui, uj))
                        if not c:
                            continue
                        for x1 in words_of_degree(gamma):
                            p1 = self.pair(vj, self.e(*x1))
                            if not p1:
                                continue
                            for x2 in words_of_degree(rest):
                                _add_into(rhs, (x1, x2), c * p1 * self.pair(vi, self.e(*x2)))
            if lhs != rhs:
                return False
        return True

    def radical(self, beta) -> list:
        """Negative-half elements of degree beta pairing to zero with every e-word."""
        g = self.gram(beta)
        out = []
        for row in left_kernel(g.reduced):
            acc = BorelElem(self, MINUS, {})
            for w, c in zip(g.rows, row):
                acc = acc + self.elem(MINUS, w, coeff=c)
            out.append(acc)
        return out

    # --------------------------------------------------------- shuffle map
    def _as_positive(self, x) -> BorelElem:
        if isinstance(x, BorelElem):
            if x.sign != PLUS:
                raise DomainError("expected a positive-half element")
            return x
        return self.e(*x)

    def gamma_embed(self, x) -> ShuffleElem:
        """Image in the shuffle algebra, computed multiplicatively from the letters."""
        x = self._as_positive(x)
        acc = ShuffleElem()
        for w, c in x.word_part().items():
            img = self._shuffle.shuffle_many(*[ShuffleElem.word(i) for i in w])
            acc = acc + img.scale(c)
        return acc

    def gamma_by_derivatives(self, x) -> ShuffleElem:
        """Image in the shuffle algebra with coefficients from iterated right derivations."""
        x = self._as_positive(x)
        degs = {self.deg(w) for w in x.word_part()}
        terms: dict = {}
        for beta in degs:
            part = BorelElem(self, PLUS, {k: c for k, c in x.terms.items() if self.deg(k[0]) == beta})
            for w in words_of_degree(beta):
                y = part
                for i in reversed(w):
                    y = self.partial_right(i, y)
                    if y.is_zero():
                        break
                c = self.counit(y)
                if c:
                    terms[w] = c
        return ShuffleElem(terms)

    def gamma_rank(self, beta) -> int:
        """Rank of the matrix sending each e-word of degree beta to its shuffle coefficients."""
        words = words_of_degree(beta)
        rows = []
        for x in words:
            img = self.gamma_embed(x)
            rows.append([img.terms.get(w, ZERO) for w in words])
        return mat_rank(rows)

    @property
    def shuffle_algebra(self) -> ShuffleAlgebra:
        return self._shuffle

    # ------------------------------------------------------ sesquilinear
    def sesq_form(self, x, y) -> FieldElem:
        """(x, y) = <Phi(x), y> with Phi: e_J -> f_J, coefficients sent through tau."""
        x, y = self._as_positive(x), self._as_positive(y)
        acc = ZERO
        for xw, a in x.word_part().items():
            ta = self.P.tau(a)
            for yw, b in y.word_part().items():
                p = self.pairing(xw, yw)
                if p:
                    acc = acc + ta * b * p
        return acc

    def degrees_up_to(self, height: int) -> list:
        return [d for h in range(1, height + 1) for d in degrees_of_height(h, self.n)]
