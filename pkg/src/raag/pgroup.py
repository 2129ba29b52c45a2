"""An explicit finite p-group separating two non-conjugate group elements.

For parameters (p, n, r, s) the abelian group

    A = C_{p^n} x C_{p^s} x ... x C_{p^s} x C_{p^r},   m = p^r + 1 factors,

carries an automorphism alpha of order p^r, and B = A : <alpha> is a finite
p-group in which the images of two specific elements g and h land in distinct
conjugacy classes even though they satisfy the same power and twisted-power
relations. Everything here is verified by exact enumeration: the relations by
direct computation, the conjugacy classes by running over all of B.

A is written additively as vectors of residues; B multiplies by
(a, i)(b, j) = (a + alpha^i(b), i + j). The automorphism is stored as a
mutable integer matrix so tests can corrupt an entry and watch the relation
checker catch it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

__all__ = [
    "WitnessParams",
    "PGroupElement",
    "WitnessGroup",
    "build_witness_group",
    "phi",
    "conjugacy_class",
    "verify_relations",
]

ENUMERATION_GUARD = 1 << 20


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class WitnessParams:
    """Parameters (p, n, r, s) with p prime and r, s in 1..n-1."""

    p: int
    n: int
    r: int
    s: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 2:
            raise ValueError("need n >= 2")
        if not 1 <= self.r <= self.n - 1:
            raise ValueError("need r in 1..n-1")
        if not 1 <= self.s <= self.n - 1:
            raise ValueError("need s in 1..n-1")

    @property
    def m(self):
        return self.p**self.r + 1

    @property
    def moduli(self):
        p = self.p
        return (p**self.n,) + (p**self.s,) * (self.m - 2) + (p**self.r,)

    @property
    def order_a(self):
        out = 1
        for q in self.moduli:
            out *= q
        return out

    @property
    def order_b(self):
        return self.order_a * self.p**self.r


@dataclass(frozen=True)
class PGroupElement:
    """(vector, alpha_exp): a point of A and a power of the twisting map."""

    vector: tuple
    alpha_exp: int


class WitnessGroup:
    """Handle for B = A : <alpha> with exact arithmetic on residue vectors.

    alpha_matrix[i] is the image vector of the i-th basis generator; the
    matrix is mutable on purpose (corrupting it must flip verify_relations).
    """

    def __init__(self, params):
        self.params = params
        self.moduli = params.moduli
        m = params.m
        mat = [[0] * m for _ in range(m)]
        # x1 -> x1 x2 xm; x_i -> x_{i+1} on the middle block; the last middle
        # generator goes to the inverse of the whole middle product; xm fixed
        mat[0][0] = 1
        mat[0][1] = 1
        mat[0][m - 1] = 1
        for i in range(1, m - 2):
            mat[i][i + 1] = 1
        for j in range(1, m - 1):
            mat[m - 2][j] = -1
        mat[m - 1][m - 1] = 1
        self.alpha_matrix = mat

    # -- elements ----------------------------------------------------------

    def element(self, vector, alpha_exp=0):
        if len(vector) != self.params.m:
            raise ValueError("vector has the wrong length")
        vec = tuple(v % q for v, q in zip(vector, self.moduli))
        return PGroupElement(vec, alpha_exp % self.params.p**self.params.r)

    def identity(self):
        return self.element((0,) * self.params.m)

    def generator(self, i):
        """The basis generator x_{i+1} of A as a group element."""
        vec = [0] * self.params.m
        vec[i] = 1
        return self.element(vec)

    # -- the twisting map --------------------------------------------------

    def alpha_apply(self, vector, times=1):
        vec = list(vector)
        for _ in range(times % self.params.p**self.params.r):
            out = [0] * len(vec)
            for i, coeff in enumerate(vec):
                if coeff:
                    row = self.alpha_matrix[i]
                    for j, rj in enumerate(row):
                        if rj:
                            out[j] += coeff * rj
            vec = [v % q for v, q in zip(out, self.moduli)]
        return tuple(vec)

    def alpha_order(self):
        """Least k >= 1 with alpha^k the identity on A."""
        basis = [tuple(row_unit) for row_unit in self._basis_vectors()]
        current = list(basis)
        for k in range(1, self.params.order_b + 1):
            current = [self.alpha_apply(v, 1) for v in current]
            if current == basis:
                return k
        raise RuntimeError("twisting map order exceeds the group order")

    def _basis_vectors(self):
        m = self.params.m
        for i in range(m):
            vec = [0] * m
            vec[i] = 1
            yield tuple(vec)

    # -- group law ---------------------------------------------------------

    def multiply(self, x, y):
        twisted = self.alpha_apply(y.vector, x.alpha_exp)
        vec = tuple(
            (a + b) % q for a, b, q in zip(x.vector, twisted, self.moduli)
        )
        return self.element(vec, x.alpha_exp + y.alpha_exp)

    def inverse(self, x):
        back = self.alpha_apply(
            tuple(-v for v in x.vector),
            -x.alpha_exp % self.params.p**self.params.r,
        )
        return self.element(back, -x.alpha_exp)

    def power(self, x, k):
        if k < 0:
            return self.power(self.inverse(x), -k)
        out = self.identity()
        for _ in range(k):
            out = self.multiply(out, x)
        return out

    def conjugate(self, x, by):
        return self.multiply(self.multiply(by, x), self.inverse(by))

    # -- the homomorphism and its classes ----------------------------------

    def phi(self, name):
        """Images of the three abstract generators g, h, t."""
        m = self.params.m
        if name == "g":
            return self.generator(0)
        if name == "h":
            vec = [0] * m
            vec[0] = 1
            vec[m - 1] = 1
            return self.element(vec)
        if name == "t":
            return self.element((0,) * m, 1)
        raise ValueError(f"unknown generator {name!r}")

    def elements(self):
        if self.params.order_b > ENUMERATION_GUARD:
            raise ValueError("group too large to enumerate")
        ranges = [range(q) for q in self.moduli]
        ranges.append(range(self.params.p**self.params.r))
        for tup in product(*ranges):
            yield PGroupElement(tup[:-1], tup[-1])

    def conjugacy_class(self, x):
        return {self.conjugate(x, b) for b in self.elements()}

    def verify_relations(self):
        """The four defining relations, checked through the homomorphism."""
        p = self.params
        g = self.phi("g")
        h = self.phi("h")
        t = self.phi("t")
        one = self.identity()
        if self.power(g, p.p**p.n) != one:
            return False
        if self.power(h, p.p**p.n) != one:
            return False
        if self.power(g, p.p**p.r) != self.power(h, p.p**p.r):
            return False
        lhs = self.conjugate(self.power(g, p.p**p.s), t)
        return lhs == self.power(h, p.p**p.s)


def build_witness_group(params):
    return WitnessGroup(params)


def phi(name, params):
    return WitnessGroup(params).phi(name)


def conjugacy_class(x, params):
    return WitnessGroup(params).conjugacy_class(x)


def verify_relations(params):
    return WitnessGroup(params).verify_relations()
