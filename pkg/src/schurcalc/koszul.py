"""Graded dimension vectors and symmetric group actions with Koszul signs.

A graded object is a finite nonnegative dimension vector over integer
degrees. Permutations act on tensor powers with the sign rule: transposing
two factors of odd degree costs a minus sign, so a permutation acts with
(-1) raised to the number of inversions between odd-degree slots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from typing import Mapping

from .errors import InvariantError
from .symgroup import GroupAlgebraElement, alt_projector, sym_projector

KIND_WEDGE_FINITE = "wedge-finite"
KIND_EVENLY_FINITE = "evenly-finite"
KIND_ODDLY_FINITE = "oddly-finite"
KIND_NOT_FINITE = "not-finite-up-to"


class GradedObject:
    """Finite dimension vector over integer degrees; all entries positive."""

    __slots__ = ("dims",)

    def __init__(self, dims: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for deg, dim in (dims or {}).items():
            deg, dim = int(deg), int(dim)
            if dim < 0:
                raise ValueError(f"negative dimension {dim} in degree {deg}")
            if dim:
                clean[deg] = dim
        self.dims = clean

    @classmethod
    def point(cls, dim: int = 1, degree: int = 0) -> "GradedObject":
        return cls({degree: dim})

    @classmethod
    def zero(cls) -> "GradedObject":
        return cls({})

    def is_zero(self) -> bool:
        return not self.dims

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def euler(self) -> int:
        return sum(dim if deg % 2 == 0 else -dim for deg, dim in self.dims.items())

    def shift(self, r: int) -> "GradedObject":
        return GradedObject({deg + r: dim for deg, dim in self.dims.items()})

    def __add__(self, other: "GradedObject") -> "GradedObject":
        acc = dict(self.dims)
        for deg, dim in other.dims.items():
            acc[deg] = acc.get(deg, 0) + dim
        return GradedObject(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedObject):
            return NotImplemented
        return self.dims == other.dims

    def __repr__(self) -> str:
        body = ", ".join(f"{deg}: {self.dims[deg]}" for deg in sorted(self.dims))
        return f"<GradedObject {{{body}}}>"

    def to_json(self) -> dict:
        return {"dims": {str(deg): self.dims[deg] for deg in sorted(self.dims)}}

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedObject":
        return cls({int(k): int(v) for k, v in data.get("dims", {}).items()})


def shift(c: GradedObject, r: int) -> GradedObject:
    return c.shift(r)


def euler(c: GradedObject) -> int:
    return c.euler()


def _power_image(c: GradedObject, projector: GroupAlgebraElement) -> GradedObject:
    """Graded dimension of the projector's image inside the tensor power.

    The trace of an exact idempotent is its rank, so per total degree the
    image dimension is the signed count of basis tuples fixed by each
    permutation, weighted by the projector coefficients. Only tuples constant
    on every cycle survive, which keeps the enumeration small.
    """
    n = projector.n
    basis_degrees: list[int] = []
    for deg in sorted(c.dims):
        basis_degrees.extend([deg] * c.dims[deg])
    count = len(basis_degrees)
    acc: dict[int, Fraction | int] = {}
    for perm, coeff in projector.terms.items():
        cycles = perm.cycles()
        images = perm.images
        inversions = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if images[i] > images[j]
        ]
        for choice in _cartesian(range(count), repeat=len(cycles)):
            degs = [0] * n
            for cyc, pick in zip(cycles, choice):
                value = basis_degrees[pick]
                for pos in cyc:
                    degs[pos - 1] = value
            total = sum(degs)
            parity = 0
            for i, j in inversions:
                parity ^= degs[i] & degs[j] & 1
            acc[total] = acc.get(total, 0) + (-coeff if parity else coeff)
    dims: dict[int, int] = {}
    for deg, value in acc.items():
        v = Fraction(value)
        if v.denominator != 1 or v < 0:
            raise InvariantError(
                f"image dimension {value} in degree {deg} is not a nonnegative integer"
            )
        if v:
            dims[deg] = int(v)
    return GradedObject(dims)


def graded_power_image(
    c: GradedObject, projector: GroupAlgebraElement
) -> GradedObject:
    """Image dimensions of an idempotent acting on the n-th signed tensor power."""
    if projector * projector != projector:
        raise ValueError("projector is not idempotent")
    return _power_image(c, projector)


@lru_cache(maxsize=None)
def _alt(n: int) -> GroupAlgebraElement:
    return alt_projector(n)


@lru_cache(maxsize=None)
def _sym(n: int) -> GroupAlgebraElement:
    return sym_projector(n)


def wedge(c: GradedObject, n: int) -> GradedObject:
    """n-th exterior power in the signed graded sense."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _power_image(c, _alt(n))


def sym(c: GradedObject, n: int) -> GradedObject:
    """n-th symmetric power in the signed graded sense."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _power_image(c, _sym(n))


def euler_falling_factorial(chi: int, n: int) -> Fraction:
    """chi (chi-1) ... (chi-n+1) / n!, the Euler characteristic a wedge power must have."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = 1
    for k in range(n):
        num *= chi - k
    return Fraction(num, math.factorial(n))


@dataclass
class FinitenessCertificate:
    """Outcome of a finiteness search, with the full power tables as witness."""

    kind: str
    n: int
    bound: int
    wedge_powers: dict[int, GradedObject] = field(repr=False)
    sym_powers: dict[int, GradedObject] = field(repr=False)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "bound": self.bound,
            "wedge_powers": {
                str(m): self.wedge_powers[m].to_json()["dims"]
                for m in sorted(self.wedge_powers)
            },
            "sym_powers": {
                str(m): self.sym_powers[m].to_json()["dims"]
                for m in sorted(self.sym_powers)
            },
        }


def certify_finiteness(
    c: GradedObject, bound: int | None = None
) -> FinitenessCertificate:
    """Search the wedge and symmetric power tables for a vanishing pattern.

    Powers are computed exactly for all orders up to bound+1 (bound defaults
    to total dimension plus two). Wedge-finite means the wedge powers vanish
    from some order n+1 on with the n-th power one dimensional in a single
    degree; that top power is then invertible, and the Euler characteristics
    chi(c) = n and chi(top) = 1 are asserted. Oddly finite means a symmetric
    power vanishes. The weaker evenly-finite kind (wedge power vanishes but
    the top power is not invertible) cannot arise for a plain dimension
    vector and is kept as a defensive branch.
    """
    if bound is None:
        bound = c.total_dim() + 2
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    wedge_powers = {m: wedge(c, m) for m in range(bound + 2)}
    sym_powers = {m: sym(c, m) for m in range(bound + 2)}

    wedge_zero = [m for m in range(1, bound + 2) if wedge_powers[m].is_zero()]
    if wedge_zero:
        first = wedge_zero[0]
        if any(not wedge_powers[m].is_zero() for m in range(first, bound + 2)):
            raise InvariantError("wedge powers vanish and then return")
        n = first - 1
        top = wedge_powers[n]
        invertible = top.total_dim() == 1 and len(top.dims) == 1
        if invertible:
            if c.euler() != n:
                raise InvariantError(
                    f"wedge-finite object has euler {c.euler()}, expected {n}"
                )
            if top.euler() != 1:
                raise InvariantError("top wedge power has euler != 1")
            return FinitenessCertificate(
                KIND_WEDGE_FINITE, n, bound, wedge_powers, sym_powers
            )
        return FinitenessCertificate(
            KIND_EVENLY_FINITE, first, bound, wedge_powers, sym_powers
        )

    sym_zero = [m for m in range(1, bound + 2) if sym_powers[m].is_zero()]
    if sym_zero:
        first = sym_zero[0]
        if any(not sym_powers[m].is_zero() for m in range(first, bound + 2)):
            raise InvariantError("symmetric powers vanish and then return")
        return FinitenessCertificate(
            KIND_ODDLY_FINITE, first, bound, wedge_powers, sym_powers
        )

    return FinitenessCertificate(KIND_NOT_FINITE, bound, bound, wedge_powers, sym_powers)


def kimura_split(c: GradedObject) -> tuple[GradedObject, GradedObject]:
    """Split into even-degree and odd-degree parts and certify both.

    The even part must come out evenly finite (here, wedge-finite) and the
    odd part oddly finite; anything else is an internal error since the
    grading makes the split visible.
    """
    plus = GradedObject({deg: dim for deg, dim in c.dims.items() if deg % 2 == 0})
    minus = GradedObject({deg: dim for deg, dim in c.dims.items() if deg % 2 != 0})
    if plus + minus != c:
        raise InvariantError("parity split does not recombine")
    cert_plus = certify_finiteness(plus, bound=plus.total_dim())
    if cert_plus.kind not in (KIND_WEDGE_FINITE, KIND_EVENLY_FINITE):
        raise InvariantError("even part failed its finiteness certificate")
    cert_minus = certify_finiteness(minus, bound=minus.total_dim())
    if not minus.is_zero() and cert_minus.kind != KIND_ODDLY_FINITE:
        raise InvariantError("odd part failed its finiteness certificate")
    return plus, minus
