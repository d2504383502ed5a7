"""The free algebra on letters w_i with concatenation and the quantum shuffle product.

Words are tuples of 0-based letters.  ``ShuffleElem`` is a finitely supported
linear combination of words; the shuffle product needs the parameter matrix
and lives on ``ShuffleAlgebra``.
"""

from __future__ import annotations

from collections import Counter

from .coeff import ONE, ZERO, FieldElem, ParamMatrix, as_field, qbinom, qfactorial
from .errors import DomainError


def word_degree(w, n: int) -> tuple:
    c = Counter(w)
    return tuple(c.get(i, 0) for i in range(n))


class ShuffleElem:
    """A linear combination of words with field coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for w, c in (terms or {}).items():
            c = as_field(c)
            if c:
                self.terms[tuple(w)] = c

    @staticmethod
    def word(*letters) -> "ShuffleElem":
        return ShuffleElem({tuple(letters): ONE})

    @staticmethod
    def one() -> "ShuffleElem":
        return ShuffleElem({(): ONE})

    @staticmethod
    def zero() -> "ShuffleElem":
        return ShuffleElem()

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return ShuffleElem._raw(out)

    def __neg__(self):
        return ShuffleElem._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a) -> "ShuffleElem":
        a = as_field(a)
        if not a:
            return ShuffleElem()
        return ShuffleElem._raw({w: a * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ShuffleElem):
            return concat(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, ShuffleElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def homogeneous_components(self, n: int) -> dict:
        out: dict = {}
        for w, c in self.terms.items():
            out.setdefault(word_degree(w, n), {})[w] = c
        return {deg: ShuffleElem._raw(t) for deg, t in out.items()}

    def to_json(self) -> list:
        return [{"word": [i + 1 for i in w], "coeff": str(c)} for w, c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            name = "w[" + ",".join(str(i + 1) for i in w) + "]" if w else "1"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)

    __repr__ = __str__

    @staticmethod
    def _raw(terms) -> "ShuffleElem":
        x = ShuffleElem.__new__(ShuffleElem)
        x.terms = terms
        return x


def concat(x: ShuffleElem, y: ShuffleElem) -> ShuffleElem:
    out: dict = {}
    for a, c in x.terms.items():
        for b, d in y.terms.items():
            w = a + b
            s = out.get(w, ZERO) + c * d
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return ShuffleElem._raw(out)


def delete_last(i: int, x: ShuffleElem) -> ShuffleElem:
    """D_i: strip a trailing letter i, kill words ending otherwise."""
    return ShuffleElem._raw({w[:-1]: c for w, c in x.terms.items() if w and w[-1] == i})


def delete_first(i: int, x: ShuffleElem) -> ShuffleElem:
    """Left mirror of D_i: strip a leading letter i."""
    return ShuffleElem._raw({w[1:]: c for w, c in x.terms.items() if w and w[0] == i})


class ShuffleAlgebra:
    """Quantum shuffle product for a fixed parameter matrix (memoized per instance)."""

    def __init__(self, P: ParamMatrix):
        self.P = P
        self.n = P.n
        self._memo: dict = {}

    def _coef(self, i: int, w) -> FieldElem:
        return self.P.pair(tuple(int(k == i) for k in range(self.n)), word_degree(w, self.n))

    def shuffle_words(self, a: tuple, b: tuple) -> dict:
        if not a:
            return {b: ONE}
        if not b:
            return {a: ONE}
        key = (a, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        # xw_i * yw_j = (xw_i * y) w_j + q(alpha_i, |y w_j|) (x * y w_j) w_i
        for w, c in self.shuffle_words(a, b[:-1]).items():
            out[w + b[-1:]] = c
        q = self._coef(a[-1], b)
        for w, c in self.shuffle_words(a[:-1], b).items():
            k = w + a[-1:]
            s = out.get(k, ZERO) + q * c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        self._memo[key] = out
        return out

    def shuffle(self, x: ShuffleElem, y: ShuffleElem) -> ShuffleElem:
        out: dict = {}
        for a, c in x.terms.items():
            for b, d in y.terms.items():
                cd = c * d
                for w, e in self.shuffle_words(a, b).items():
                    s = out.get(w, ZERO) + cd * e
                    if s:
                        out[w] = s
                    else:
                        out.pop(w, None)
        return ShuffleElem._raw(out)

    def shuffle_many(self, *xs: ShuffleElem) -> ShuffleElem:
        acc = ShuffleElem.one()
        for x in xs:
            acc = self.shuffle(acc, x)
        return acc

    def shuffle_power(self, i: int, m: int) -> ShuffleElem:
        return self.shuffle_many(*[ShuffleElem.word(i)] * m)

    def serre_shuffle(self, i: int, j: int) -> ShuffleElem:
        """Alternating q-binomial sum of w_i^(1-a-k) * w_j * w_i^k; vanishes identically."""
        if i == j:
            raise DomainError("serre_shuffle needs i != j")
        P, a = self.P, self.P.A[i][j]
        qii, qij = P.q(i, i), P.q(i, j)
        N = 1 - a
        acc = ShuffleElem()
        wj = ShuffleElem.word(j)
        for k in range(N + 1):
            c = qbinom(N, k, qii) * qii ** (k * (k - 1) // 2) * qij ** k
            if k % 2:
                c = -c
            term = self.shuffle_many(self.shuffle_power(i, N - k), wj, self.shuffle_power(i, k))
            acc = acc + term.scale(c)
        return acc

    def mixed_power_closed_form(self, i: int, j: int, m: int, l: int) -> ShuffleElem:
        """Double-sum closed form of w_i^(*m) * w_j * w_i^(*l) (no shuffle recursion)."""
        if i == j:
            raise DomainError("mixed_power_closed_form needs i != j")
        P = self.P
        qii, qij, qji = P.q(i, i), P.q(i, j), P.q(j, i)
        acc = ShuffleElem()
        for k in range(m + 1):
            for t in range(l + 1):
                c = (qij ** k * qji ** (l - t) * qii ** (k * (l - t))
                     * qbinom(m, k, qii) * qbinom(l, t, qii)
                     * qfactorial(m - k + l - t, qii) * qfactorial(k + t, qii))
                w = (i,) * (m - k + l - t) + (j,) + (i,) * (k + t)
                acc = acc + ShuffleElem({w: c})
        return acc

    def leibniz_defect(self, i: int, x: ShuffleElem, y: ShuffleElem, use_first: bool = False) -> ShuffleElem:
        """D_i(x*y) - (q(alpha_i, deg) D_i(x)*y + x*D_i(y)) for homogeneous y (or x).

        The coefficient uses the degree of the second factor y; with
        ``use_first`` it uses the first factor x instead (kept for comparison).
        """
        src = x if use_first else y
        degs = {word_degree(w, self.n) for w in src.terms}
        if len(degs) > 1:
            raise DomainError("leibniz_defect needs a homogeneous factor")
        deg = degs.pop() if degs else (0,) * self.n
        q = self.P.pair(tuple(int(k == i) for k in range(self.n)), deg)
        lhs = delete_last(i, self.shuffle(x, y))
        rhs = self.shuffle(delete_last(i, x), y).scale(q) + self.shuffle(x, delete_last(i, y))
        return lhs - rhs


def shuffle(x: ShuffleElem, y: ShuffleElem, P: ParamMatrix) -> ShuffleElem:
    return ShuffleAlgebra(P).shuffle(x, y)
