"""Exact ground arithmetic.

Elements of the ground field are fractions of sparse Laurent polynomials
whose monomials carry exact rational exponents.  A monomial is stored as a
sorted tuple of ``(variable, exponent)`` pairs, a polynomial as a dict from
monomials to rational coefficients.  ``FieldElem`` keeps numerator and
denominator in a canonical reduced form, so equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

from sympy import integer_nthroot
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from .errors import DomainError, EvaluationError

Mono = tuple  # tuple[tuple[str, int | Fraction], ...]
ONE_MONO: Mono = ()


# ---------------------------------------------------------------- monomials

def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, e in b:
        s = d.get(k, 0) + e
        if s:
            d[k] = s
        else:
            del d[k]
    return tuple(sorted(d.items()))


def mono_pow(a: Mono, e) -> Mono:
    if e == 0:
        return ONE_MONO
    return tuple((k, x * e) for k, x in a)


def mono_degree(m: Mono):
    return sum((e for _, e in m), 0)


def _fmt_exp(e) -> str:
    e = Fraction(e)
    if e.denominator == 1 and e >= 0:
        return str(e.numerator)
    return f"({e})"


def mono_str(m: Mono) -> str:
    return "*".join(k if e == 1 else f"{k}^{_fmt_exp(e)}" for k, e in m)


# -------------------------------------------------------------- polynomials

def _coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def poly_add(p: dict, q: dict, sign: int = 1) -> dict:
    r = dict(p)
    for m, c in q.items():
        s = r.get(m, 0) + sign * c
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


def poly_mul(p: dict, q: dict) -> dict:
    if len(p) == 1 and ONE_MONO in p:
        c = p[ONE_MONO]
        return {m: c * x for m, x in q.items()} if c != 1 else dict(q)
    r: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            s = r.get(m, 0) + c1 * c2
            if s:
                r[m] = s
            else:
                del r[m]
    return r


def poly_variables(p: dict) -> set:
    return {k for m in p for k, _ in m}


def _var_order(names: Iterable[str]) -> list:
    return sorted(set(names))


def _dense_key(m: Mono, order: list):
    d = dict(m)
    return (mono_degree(m), tuple(d.get(k, 0) for k in order))


def poly_sorted(p: dict, order: list | None = None) -> list:
    """Terms sorted by descending graded-lex order on the fixed variable order."""
    if order is None:
        order = _var_order(poly_variables(p))
    return sorted(p.items(), key=lambda t: _dense_key(t[0], order), reverse=True)


def poly_str(p: dict) -> str:
    if not p:
        return "0"
    out = []
    for m, c in poly_sorted(p):
        c = Fraction(c)
        if not m:
            s = str(c)
        elif c == 1:
            s = mono_str(m)
        elif c == -1:
            s = "-" + mono_str(m)
        else:
            s = f"{c}*{mono_str(m)}"
        if out:
            out.append(" - " + s[1:] if s.startswith("-") else " + " + s)
        else:
            out.append(s)
    return "".join(out)


ONE_POLY = {ONE_MONO: 1}


def _is_one_poly(p: dict) -> bool:
    return len(p) == 1 and p.get(ONE_MONO) == 1


def _cancel(num: dict, den: dict):
    """Divide numerator and denominator by their gcd (exact, via sympy)."""
    names = _var_order(poly_variables(num) | poly_variables(den))
    scale = {}
    for k in names:
        s = 1
        for p in (num, den):
            for m in p:
                for var, e in m:
                    if var == k:
                        s = lcm(s, Fraction(e).denominator)
        scale[k] = s
    shift = {k: 0 for k in names}
    for p in (num, den):
        for m in p:
            d = dict(m)
            for k in names:
                shift[k] = min(shift[k], d.get(k, 0))
    R, *_ = ring(",".join(names), QQ)

    def to_ring(p):
        out = {}
        for m, c in p.items():
            d = dict(m)
            key = tuple(int((d.get(k, 0) - shift[k]) * scale[k]) for k in names)
            c = Fraction(c)
            out[key] = QQ(c.numerator, c.denominator)
        return R.from_dict(out)

    def from_ring(f):
        out = {}
        for key, c in f.terms():
            m = tuple((k, Fraction(e, scale[k])) for k, e in zip(names, key) if e)
            out[m] = _coeff(Fraction(int(c.numerator), int(c.denominator)))
        return out

    _, a, b = to_ring(num).cofactors(to_ring(den))
    return from_ring(a), from_ring(b)


# ------------------------------------------------------------- field elems

class FieldElem:
    """Element of the fraction field of rational-exponent Laurent polynomials.

    Canonical form: if the denominator is a single term it is absorbed into
    the numerator (denominator 1); otherwise numerator and denominator are
    coprime, every variable has minimal exponent 0 in the denominator and the
    leading denominator coefficient (graded-lex) is 1.
    """

    __slots__ = ("num", "den", "_h")

    def __init__(self, num: dict, den: dict | None = None):
        # trusted constructor: arguments must already be canonical
        self.num = num
        self.den = ONE_POLY if den is None else den
        self._h = None

    # constructors
    @staticmethod
    def make(num: dict, den: dict | None = None) -> "FieldElem":
        if den is None or _is_one_poly(den):
            return FieldElem(num)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return FieldElem({})
        if len(den) == 1:
            (m, c), = den.items()
            inv = mono_pow(m, -1)
            return FieldElem({mono_mul(k, inv): _coeff(Fraction(x) / c) for k, x in num.items()})
        num, den = _cancel(num, den)
        names = _var_order(poly_variables(den))
        low = {k: min(dict(m).get(k, 0) for m in den) for k in names}
        shift = tuple((k, -e) for k, e in sorted(low.items()) if e)
        if shift:
            num = {mono_mul(m, shift): c for m, c in num.items()}
            den = {mono_mul(m, shift): c for m, c in den.items()}
        if len(den) == 1:
            return FieldElem.make(num, den)
        lead = Fraction(poly_sorted(den)[0][1])
        if lead != 1:
            num = {m: _coeff(Fraction(c) / lead) for m, c in num.items()}
            den = {m: _coeff(Fraction(c) / lead) for m, c in den.items()}
        return FieldElem(num, den)

    @staticmethod
    def const(c) -> "FieldElem":
        c = _coeff(Fraction(c))
        return FieldElem({ONE_MONO: c} if c else {})

    @staticmethod
    def var(name: str) -> "FieldElem":
        return FieldElem({((name, 1),): 1})

    @staticmethod
    def monomial(exps: Mapping[str, object], coeff=1) -> "FieldElem":
        m = tuple(sorted((k, Fraction(e)) for k, e in exps.items() if e))
        return FieldElem({m: _coeff(Fraction(coeff))} if coeff else {})

    @staticmethod
    def parse(text: str) -> "FieldElem":
        return _Parser(text).parse()

    # predicates and accessors
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return _is_one_poly(self.num) and _is_one_poly(self.den)

    def is_polynomial(self) -> bool:
        return _is_one_poly(self.den)

    def is_monomial(self) -> bool:
        return self.is_polynomial() and len(self.num) == 1

    def monomial_data(self):
        """Return ``(coefficient, monomial)`` of a single-term element."""
        if not self.is_monomial():
            raise DomainError("not a monomial")
        (m, c), = self.num.items()
        return c, m

    def variables(self) -> set:
        return poly_variables(self.num) | poly_variables(self.den)

    # arithmetic
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if _is_one_poly(self.den) and _is_one_poly(o.den):
            return FieldElem(poly_add(self.num, o.num))
        if self.den == o.den:
            return FieldElem.make(poly_add(self.num, o.num), self.den)
        n = poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den))
        return FieldElem.make(n, poly_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem({m: -c for m, c in self.num.items()}, self.den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        if _is_one_poly(self.den) and _is_one_poly(o.den):
            return FieldElem(poly_mul(self.num, o.num))
        return FieldElem.make(poly_mul(self.num, o.num), poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return FieldElem.make(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        e = Fraction(e)
        if e.denominator == 1:
            n = e.numerator
            base = self if n >= 0 else self.inverse()
            n = abs(n)
            result, sq = ONE, base
            while n:
                if n & 1:
                    result = result * sq
                n >>= 1
                if n:
                    sq = sq * sq
            return result
        if not self.is_monomial():
            raise DomainError("fractional power of a non-monomial element")
        c, m = self.monomial_data()
        return FieldElem({mono_pow(m, e): _coeff(_rational_power(Fraction(c), e))})

    # comparison
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and (self.den == o.den or (
            _is_one_poly(self.den) and _is_one_poly(o.den)))

    def __hash__(self):
        if self._h is None:
            self._h = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._h

    def __bool__(self):
        return bool(self.num)

    def __str__(self):
        if _is_one_poly(self.den):
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def __repr__(self):
        return f"FieldElem({str(self)!r})"

    def size(self) -> int:
        return len(self.num) + len(self.den)

    # substitution
    def substitute(self, images: Mapping[str, "FieldElem"]) -> "FieldElem":
        """Ring map sending each listed variable to the given element."""
        def sub_poly(p):
            acc = ZERO
            for m, c in p.items():
                term = FieldElem.const(c)
                keep = []
                for k, e in m:
                    if k in images:
                        term = term * (images[k] ** e)
                    else:
                        keep.append((k, e))
                if keep:
                    term = term * FieldElem({tuple(keep): 1})
                acc = acc + term
            return acc
        return sub_poly(self.num) / sub_poly(self.den)

    def map_monomials(self, f) -> "FieldElem":
        """Apply a monomial-to-monomial map termwise (e.g. an involution)."""
        num = {}
        for m, c in self.num.items():
            num[f(m)] = c
        den = {f(m): c for m, c in self.den.items()}
        return FieldElem.make(num, den)


def _coerce(x):
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElem.const(x)
    return None


def as_field(x) -> FieldElem:
    o = _coerce(x)
    if o is None:
        raise TypeError(f"cannot interpret {x!r} as a field element")
    return o


ZERO = FieldElem({})
ONE = FieldElem({ONE_MONO: 1})


def _rational_power(c: Fraction, e: Fraction) -> Fraction:
    """Exact c**e, requiring numerator and denominator to be perfect powers."""
    if c == 0:
        if e <= 0:
            raise EvaluationError("zero to a non-positive power")
        return Fraction(0)
    if e < 0:
        c, e = 1 / c, -e
    root = e.denominator
    sign = 1
    if c < 0:
        if root % 2 == 0:
            raise DomainError(f"even root of negative rational {c}")
        sign, c = -1, -c
    a, exact_a = integer_nthroot(c.numerator, root)
    b, exact_b = integer_nthroot(c.denominator, root)
    if not (exact_a and exact_b):
        raise DomainError(f"{c} is not a perfect {root}-th power")
    return (sign * Fraction(int(a), int(b))) ** e.numerator


# ------------------------------------------------------------ specialize

def specialize(x: FieldElem, assignment: Mapping[str, object]) -> Fraction:
    """Evaluate at rational values; fractional exponents need perfect powers."""
    def ev(p):
        total = Fraction(0)
        for m, c in p.items():
            t = Fraction(c)
            for k, e in m:
                if k not in assignment:
                    raise DomainError(f"no value assigned to {k}")
                t *= _rational_power(Fraction(assignment[k]), Fraction(e))
            total += t
        return total

    den = ev(x.den)
    if den == 0:
        raise EvaluationError("denominator vanishes at the assignment")
    return ev(x.num) / den


def exponent_denominators(elems: Iterable[FieldElem]) -> dict:
    """Per variable, the lcm of exponent denominators over the given elements."""
    out: dict = {}
    for x in elems:
        for p in (x.num, x.den):
            for m in p:
                for k, e in m:
                    out[k] = lcm(out.get(k, 1), Fraction(e).denominator)
    return out


# ---------------------------------------------------------- q-combinatorics

def qint(n: int, a) -> FieldElem:
    """The q-integer (n)_a = 1 + a + ... + a^(n-1)."""
    if n < 0:
        raise DomainError("qint needs n >= 0")
    a = as_field(a)
    acc, p = ZERO, ONE
    for _ in range(n):
        acc = acc + p
        p = p * a
    return acc


def qfactorial(n: int, a) -> FieldElem:
    acc = ONE
    for k in range(1, n + 1):
        acc = acc * qint(k, a)
    return acc


def qbinom(n: int, k: int, a) -> FieldElem:
    """Gaussian binomial via the Pascal rule binom(n,k) = a^k binom(n-1,k) + binom(n-1,k-1)."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"qbinom needs 0 <= k <= n, got n={n}, k={k}")
    a = as_field(a)
    row = [ONE]
    for m in range(1, n + 1):
        new = [ONE]
        for j in range(1, m):
            new.append(a ** j * row[j] + row[j - 1])
        new.append(ONE)
        row = new
    return row[k]


def gauss_sum(n: int, a, z, v) -> FieldElem:
    """Alternating side: sum_k (-1)^k binom(n,k)_v v^(k(k-1)/2) a^(n-k) z^k."""
    a, z, v = as_field(a), as_field(z), as_field(v)
    acc = ZERO
    for k in range(n + 1):
        term = qbinom(n, k, v) * v ** (k * (k - 1) // 2) * a ** (n - k) * z ** k
        acc = acc + (term if k % 2 == 0 else -term)
    return acc


def gauss_product(n: int, a, z, v) -> FieldElem:
    """Product side prod_{k<n} (a - v^k z) of the q-binomial theorem."""
    a, z, v = as_field(a), as_field(z), as_field(v)
    acc = ONE
    for k in range(n):
        acc = acc * (a - v ** k * z)
    return acc


def gauss_product_check(n: int, a, z, v=None) -> bool:
    v = FieldElem.var("v") if v is None else v
    return gauss_sum(n, a, z, v) == gauss_product(n, a, z, v)


def q_identity_suite(nmax: int = 6, v=None) -> list:
    """Check the five q-identities for all indices up to ``nmax``.

    Returns a list of ``(name, ok, witness)`` triples, one per identity.
    """
    v = FieldElem.var("v") if v is None else as_field(v)
    qi = {n: qint(n, v) for n in range(2 * nmax + 1)}
    qb = {(n, k): qbinom(n, k, v) for n in range(nmax + 1) for k in range(n + 1)}

    def b(n, k):
        return qb[(n, k)] if 0 <= k <= n else ZERO

    results = []
    bad = [(m, n) for m in range(nmax + 1) for n in range(nmax + 1)
           if qi[m + n] != qi[m] + v ** m * qi[n]]
    results.append(("q-integer addition", not bad, bad[:1]))
    bad = [(m, k) for m in range(nmax + 1) for k in range(m)
           if b(m, k) * qi[m - k] != b(m, k + 1) * qi[k + 1]]
    results.append(("binomial shift", not bad, bad[:1]))
    bad = []
    for r in range(nmax + 1):
        for k in range(r + 1):
            for m in range(k + 1):
                for n in range(r - k + 1):
                    if b(r, k) * b(k, m) * b(r - k, n) != b(r - m - n, k - m) * b(m + n, m) * b(r, m + n):
                        bad.append((r, k, m, n))
    results.append(("binomial product", not bad, bad[:1]))
    bad = []
    for n in range(1, nmax + 1):
        for k in range(n + 1):
            lhs = b(n, k)
            if lhs != v ** k * b(n - 1, k) + b(n - 1, k - 1):
                bad.append((n, k, "left"))
            if lhs != b(n - 1, k) + v ** (n - k) * b(n - 1, k - 1):
                bad.append((n, k, "right"))
    results.append(("pascal rules", not bad, bad[:1]))
    a, z = FieldElem.var("a"), FieldElem.var("z")
    bad = [n for n in range(nmax + 1) if not gauss_product_check(n, a, z, v)]
    results.append(("q-binomial theorem", not bad, bad[:1]))
    return results


# ------------------------------------------------------------ parameters

def x_name(i: int, j: int, n: int) -> str:
    """Variable name of the free parameter attached to the pair i < j (0-based)."""
    return f"x{i + 1}{j + 1}" if n < 10 else f"x{i + 1}_{j + 1}"


class ParamMatrix:
    """The matrix (q_ij) over the ground field.

    ``kind`` is ``"generic"`` (variables v and x_ij), ``"one"`` (single
    symbol, q by default, with q_ij = q^(d_i a_ij)) or ``"two"`` (symbols r, s).
    """

    def __init__(self, datum, kind: str = "generic", symbol: str = "q"):
        self.A = tuple(tuple(int(x) for x in row) for row in datum.A)
        self.d = tuple(int(x) for x in datum.d)
        self.n = len(self.A)
        self.kind = kind
        self.symbol = symbol
        n, A, d = self.n, self.A, self.d
        if kind == "generic":
            v = FieldElem.var("v")
            Q = [[None] * n for _ in range(n)]
            for i in range(n):
                Q[i][i] = v ** (2 * d[i])
                for j in range(i + 1, n):
                    x = FieldElem.var(x_name(i, j, n))
                    Q[i][j] = x
                    Q[j][i] = v ** (2 * d[i] * A[i][j]) * x.inverse()
        elif kind == "one":
            q = FieldElem.var(symbol)
            Q = [[q ** (d[i] * A[i][j]) for j in range(n)] for i in range(n)]
        elif kind == "two":
            r, s = FieldElem.var("r"), FieldElem.var("s")

            def br(i, j):
                return d[i] * A[i][j] if i < j else (d[i] if i == j else 0)

            Q = [[r ** br(j, i) * s ** (-br(i, j)) for j in range(n)] for i in range(n)]
        else:
            raise DomainError(f"unknown parameter kind {kind!r}")
        self.Q = tuple(tuple(row) for row in Q)
        self._cache: dict = {}

    def q(self, i: int, j: int) -> FieldElem:
        return self.Q[i][j]

    def __eq__(self, other):
        return isinstance(other, ParamMatrix) and (self.A, self.d, self.kind, self.symbol) == (
            other.A, other.d, other.kind, other.symbol)

    def __hash__(self):
        return hash((self.A, self.d, self.kind, self.symbol))

    def check_product_rule(self) -> bool:
        """q_ij q_ji = q_ii^(a_ij) for all i, j."""
        return all(self.Q[i][j] * self.Q[j][i] == self.Q[i][i] ** self.A[i][j]
                   for i in range(self.n) for j in range(self.n))

    def variables(self) -> set:
        out = set()
        for row in self.Q:
            for x in row:
                out |= x.variables()
        return out

    def tau(self, x: FieldElem) -> FieldElem:
        """The involution of the ground field swapping q_ij and q_ji."""
        n, A, d = self.n, self.A, self.d
        if self.kind == "one":
            return x
        if self.kind == "two":
            images = {"r": FieldElem.var("s") ** -1, "s": FieldElem.var("r") ** -1}
            return x.substitute(images)
        table = {x_name(i, j, n): (2 * d[i] * A[i][j]) for i in range(n) for j in range(i + 1, n)}

        def f(m):
            out = {}
            for k, e in m:
                if k in table:
                    out[k] = out.get(k, 0) - e
                    out["v"] = out.get("v", 0) + table[k] * e
                else:
                    out[k] = out.get(k, 0) + e
            return tuple(sorted((k, e) for k, e in out.items() if e))

        return x.map_monomials(f)

    def pair(self, mu, nu) -> FieldElem:
        """prod q_ij^(mu_i nu_j) for root-basis coordinate vectors."""
        key = (tuple(mu), tuple(nu))
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        acc: dict = {}
        coeff = ONE
        for i, a in enumerate(mu):
            if not a:
                continue
            for j, b in enumerate(nu):
                e = Fraction(a) * Fraction(b)
                if not e:
                    continue
                x = self.Q[i][j]
                if x.is_monomial():
                    c, m = x.monomial_data()
                    if c != 1:
                        coeff = coeff * FieldElem.const(c) ** e
                    for k, y in m:
                        acc[k] = acc.get(k, 0) + y * e
                else:
                    coeff = coeff * x ** e
        mono = tuple(sorted((k, e) for k, e in acc.items() if e))
        out = coeff * FieldElem({mono: 1})
        self._cache[key] = out
        return out


def preset(kind: str, datum) -> dict:
    """Substitution sending the generic variables v, x_ij to a named specialization.

    ``kind`` is ``"one-parameter"`` or ``"two-parameter"``.
    """
    n, A, d = len(datum.A), datum.A, datum.d
    if kind in ("one", "one-parameter"):
        q = FieldElem.var("q")
        images = {"v": q}
        for i in range(n):
            for j in range(i + 1, n):
                images[x_name(i, j, n)] = q ** (d[i] * A[i][j])
        return images
    if kind in ("two", "two-parameter"):
        r, s = FieldElem.var("r"), FieldElem.var("s")
        images = {"v": r ** Fraction(1, 2) * s ** Fraction(-1, 2)}
        for i in range(n):
            for j in range(i + 1, n):
                images[x_name(i, j, n)] = s ** (-d[i] * A[i][j])
        return images
    raise DomainError(f"unknown preset {kind!r}")


# ---------------------------------------------------------------- parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        for num, name, op in _TOKEN.findall(text):
            if num:
                self.toks.append(("num", int(num)))
            elif name:
                self.toks.append(("var", name))
            elif op.strip():
                self.toks.append(("op", op))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        t = self.peek()
        if op is not None and t != ("op", op):
            raise DomainError(f"expected {op!r} at token {self.i}")
        self.i += 1
        return t

    def parse(self) -> FieldElem:
        x = self.expr()
        if self.i != len(self.toks):
            raise DomainError("trailing input")
        return x

    def expr(self):
        x = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def term(self):
        x = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            y = self.unary()
            x = x * y if op == "*" else x / y
        return x

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        x = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            x = x ** self.exponent()
        return x

    def exponent(self) -> Fraction:
        if self.peek() == ("op", "("):
            self.take()
            sign = -1 if self.peek() == ("op", "-") else 1
            if sign < 0:
                self.take()
            p = self.take()[1]
            q = 1
            if self.peek() == ("op", "/"):
                self.take()
                q = self.take()[1]
            self.take(")")
            return sign * Fraction(p, q)
        sign = -1 if self.peek() == ("op", "-") else 1
        if sign < 0:
            self.take()
        return Fraction(sign * self.take()[1])

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return FieldElem.const(val)
        if kind == "var":
            return FieldElem.var(val)
        if val == "(":
            x = self.expr()
            self.take(")")
            return x
        raise DomainError(f"unexpected token {val!r}")
