"""Sparse integer polynomials built from linear factors.

Used to certify the non-vanishing monomials behind the degree-bounded
constructions, and to pick concrete weights from allowed sets: ``cn_search``
evaluates the factor product directly instead of expanding it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import SearchExhausted

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LinearFactor:
    """``sum(coefficients[i] * x_i) + constant``."""

    coefficients: tuple[int, ...]
    constant: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if not any(self.coefficients):
            raise ValueError("a linear factor needs a non-zero coefficient")

    @classmethod
    def build(cls, nvars: int, coefs: Mapping[int, int], constant: int = 0) -> "LinearFactor":
        """Factor from a sparse ``{variable index: coefficient}`` map."""
        c = [0] * nvars
        for i, a in coefs.items():
            c[i] += a
        return cls(tuple(c), constant)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def __call__(self, point: Sequence[int]) -> int:
        return sum(a * x for a, x in zip(self.coefficients, point)) + self.constant


class SparsePolynomial:
    """Mapping exponent vector -> non-zero integer coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has arity {len(exp)}, expected {nvars}")
            if c:
                self.terms[tuple(exp)] = c

    @classmethod
    def constant(cls, nvars: int, c: int) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def from_factor(cls, f: LinearFactor) -> "SparsePolynomial":
        n = f.nvars
        terms = {}
        for i, a in enumerate(f.coefficients):
            if a:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = a
        terms[(0,) * n] = f.constant
        return cls(n, terms)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch")
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial(self.nvars, out)

    def __eq__(self, other):
        return isinstance(other, SparsePolynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {self.terms})"

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficient(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.nvars:
            raise ValueError("arity mismatch")
        return self.terms.get(tuple(exponents), 0)

    def __call__(self, point: Sequence[int]) -> int:
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x ** k
            total += term
        return total


def expand(factors: Sequence[LinearFactor]) -> SparsePolynomial:
    """Fully expanded product of the factors."""
    if not factors:
        raise ValueError("need at least one factor")
    n = factors[0].nvars
    if any(f.nvars != n for f in factors):
        raise ValueError("factors have inconsistent arity")
    p = SparsePolynomial.constant(n, 1)
    for f in factors:
        p = p * SparsePolynomial.from_factor(f)
    return p


def coefficient(p: SparsePolynomial, exponents: Sequence[int]) -> int:
    return p.coefficient(exponents)


def evaluate_product(factors: Iterable[LinearFactor], point: Sequence[int]) -> int:
    out = 1
    for f in factors:
        v = f(point)
        if v == 0:
            return 0
        out *= v
    return out


def cn_search(factors: Sequence[LinearFactor], sets: Sequence[Iterable[int]]) -> tuple[int, ...]:
    """Lexicographically first point of ``S_1 x ... x S_n`` where no factor vanishes.

    Raises ``SearchExhausted`` when every point is a root of the product.
    """
    choices = [sorted(set(s)) for s in sets]
    if factors and any(f.nvars != len(choices) for f in factors):
        raise ValueError("number of value sets does not match factor arity")
    for point in product(*choices):
        if all(f(point) != 0 for f in factors):
            return point
    raise SearchExhausted(f"no non-vanishing point among {[len(c) for c in choices]} candidate values")
