"""Cartan data, root and weight lattices, the invariant form and q_pair."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .coeff import FieldElem, ParamMatrix, preset  # noqa: F401  (re-exported)
from .errors import DomainError, UnsupportedError

PRESET_TYPES = {
    "A1": ([[2]], [1]),
    "A2": ([[2, -1], [-1, 2]], [1, 1]),
    "B2": ([[2, -1], [-2, 2]], [2, 1]),
    "C2": ([[2, -2], [-1, 2]], [1, 2]),
    "G2": ([[2, -1], [-3, 2]], [3, 1]),
    "A1xA1": ([[2, 0], [0, 2]], [1, 1]),
}


def _inverse(M):
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise DomainError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def _det(M) -> Fraction:
    n = len(M)
    a = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


@dataclass(frozen=True)
class CartanDatum:
    """A symmetrizable generalized Cartan matrix with its symmetrizers."""

    A: tuple
    d: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(tuple(int(x) for x in row) for row in self.A))
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))

    @staticmethod
    def of_type(name: str) -> "CartanDatum":
        if name not in PRESET_TYPES:
            raise DomainError(f"unknown Cartan type {name!r}; known: {sorted(PRESET_TYPES)}")
        A, d = PRESET_TYPES[name]
        return CartanDatum(A, d, name)

    @staticmethod
    def from_json(text: str) -> "CartanDatum":
        data = json.loads(text)
        return CartanDatum(data["A"], data["d"], data.get("label", ""))

    def to_json(self) -> str:
        return json.dumps({"A": [list(r) for r in self.A], "d": list(self.d), "label": self.label})

    @property
    def n(self) -> int:
        return len(self.A)

    def sym(self, i: int, j: int) -> int:
        """The invariant form on simple roots, (alpha_i, alpha_j) = d_i a_ij."""
        return self.d[i] * self.A[i][j]

    @cached_property
    def is_finite(self) -> bool:
        B = [[self.sym(i, j) for j in range(self.n)] for i in range(self.n)]
        return all(_det([row[:k] for row in B[:k]]) > 0 for k in range(1, self.n + 1))

    @cached_property
    def inverse(self):
        return _inverse(self.A)

    def simple(self, i: int) -> tuple:
        return tuple(int(k == i) for k in range(self.n))

    def h(self, mu, i: int) -> Fraction:
        """mu(h_i) for mu given in root coordinates: sum_k a_ik mu_k."""
        return sum((self.A[i][k] * Fraction(mu[k]) for k in range(self.n)), Fraction(0))

    def fundamental(self, i: int) -> tuple:
        """Root coordinates of the fundamental weight Lambda_i (finite type)."""
        self._need_finite()
        return tuple(self.inverse[k][i] for k in range(self.n))

    def weight(self, coeffs) -> tuple:
        """Root coordinates of sum_i c_i Lambda_i."""
        self._need_finite()
        return tuple(sum((self.inverse[k][i] * Fraction(c) for i, c in enumerate(coeffs)), Fraction(0))
                     for k in range(self.n))

    def to_weight_basis(self, mu) -> tuple:
        return tuple(self.h(mu, i) for i in range(self.n))

    @property
    def rho(self) -> tuple:
        return self.weight([1] * self.n)

    def form(self, mu, nu) -> Fraction:
        return sum((Fraction(mu[i]) * self.sym(i, j) * Fraction(nu[j])
                    for i in range(self.n) for j in range(self.n)), Fraction(0))

    def is_dominant(self, lam) -> bool:
        return all(self.h(lam, i) >= 0 and self.h(lam, i).denominator == 1 for i in range(self.n))

    def _need_finite(self):
        if not self.is_finite:
            raise UnsupportedError("weight lattice requires finite type")

    def param_matrix(self, kind: str = "generic") -> ParamMatrix:
        return ParamMatrix(self, kind)


@dataclass(frozen=True)
class LatticeVec:
    """Coordinates in the root basis ("root") or fundamental-weight basis ("weight")."""

    coords: tuple
    basis: str = "root"

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        if self.basis not in ("root", "weight"):
            raise DomainError(f"unknown basis tag {self.basis!r}")

    def root_coords(self, datum: CartanDatum) -> tuple:
        if self.basis == "root":
            return self.coords
        return datum.weight(self.coords)

    def to_json(self) -> dict:
        return {"basis": self.basis, "coords": [str(c) for c in self.coords]}


def root_coords(x, datum: CartanDatum) -> tuple:
    if isinstance(x, LatticeVec):
        return x.root_coords(datum)
    return tuple(Fraction(c) for c in x)


def validate(datum: CartanDatum) -> list:
    """Return a list of violations (empty when the datum is valid)."""
    A, d, n = datum.A, datum.d, len(datum.A)
    out = []
    if any(len(row) != n for row in A):
        return ["matrix is not square"]
    if len(d) != n:
        out.append("symmetrizer length differs from rank")
        return out
    for i in range(n):
        if d[i] <= 0:
            out.append(f"d_{i + 1} = {d[i]} is not positive")
        if A[i][i] != 2:
            out.append(f"a_{i + 1}{i + 1} = {A[i][i]} != 2")
        for j in range(n):
            if i == j:
                continue
            if A[i][j] > 0:
                out.append(f"a_{i + 1}{j + 1} = {A[i][j]} > 0")
            if (A[i][j] == 0) != (A[j][i] == 0):
                out.append(f"a_{i + 1}{j + 1} = 0 iff a_{j + 1}{i + 1} = 0 fails at ({i + 1},{j + 1})")
            if d[i] * A[i][j] != d[j] * A[j][i]:
                out.append(f"d_i a_ij != d_j a_ji at ({i + 1},{j + 1})")
    return out


def q_pair(mu, nu, P: ParamMatrix, datum: CartanDatum | None = None) -> FieldElem:
    """The bicharacter q_{mu nu} = prod q_ij^(mu_i nu_j)."""
    if datum is not None:
        mu, nu = root_coords(mu, datum), root_coords(nu, datum)
        integral = all(Fraction(c).denominator == 1 for c in (*mu, *nu))
        if not integral and not datum.is_finite:
            raise UnsupportedError("weight-lattice q_pair requires finite type")
    return P.pair(tuple(mu), tuple(nu))


def positive_roots(datum: CartanDatum) -> list:
    """Positive roots of a finite-type datum, by closing simple roots under reflections."""
    if not datum.is_finite:
        raise UnsupportedError("root enumeration requires finite type")
    n = datum.n
    roots = {datum.simple(i) for i in range(n)}
    frontier = list(roots)
    while frontier:
        new = []
        for b in frontier:
            for i in range(n):
                c = datum.h(b, i)
                r = tuple(int(b[k] - (c if k == i else 0)) for k in range(n))
                if all(x >= 0 for x in r) and any(r) and r not in roots:
                    roots.add(r)
                    new.append(r)
        frontier = new
    return sorted(roots, key=lambda r: (sum(r), r))


def kostant_count(beta, datum: CartanDatum) -> int:
    """Number of multisets of positive roots summing to beta."""
    roots = positive_roots(datum)
    beta = tuple(int(b) for b in beta)
    memo: dict = {}

    def count(rest, k):
        if not any(rest):
            return 1
        if k == len(roots):
            return 0
        key = (rest, k)
        if key in memo:
            return memo[key]
        total, cur, r = 0, rest, roots[k]
        while all(c >= 0 for c in cur):
            total += count(cur, k + 1)
            cur = tuple(c - x for c, x in zip(cur, r))
        memo[key] = total
        return total

    return count(beta, 0)


def degrees_of_height(h: int, n: int) -> list:
    """All nonnegative integer vectors of length n with coordinate sum h."""
    if n == 1:
        return [(h,)]
    return [(a,) + rest for a in range(h, -1, -1) for rest in degrees_of_height(h - a, n - 1)]
