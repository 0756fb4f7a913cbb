"""Exact computation in the rational group algebras of the symmetric groups.

Everything is done with Fraction or int coefficients; no floating point
enters at any stage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _tuple_permutations
from typing import Callable, Mapping

from .errors import BoundExceededError, InvariantError
from .partitions import (
    Partition,
    StandardTableau,
    all_partitions,
    canonical_tableau,
    dim_sym_irrep,
)

SYMMETRIZER_BOUND = 8
CHARACTER_BOUND = 8


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} in one line notation: images[i-1] = sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_one_line(cls, text: str) -> "Permutation":
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1]
        if not text:
            return cls(())
        return cls(tuple(int(x) for x in text.split(",")))

    def one_line(self) -> str:
        return "[" + ",".join(str(x) for x in self.images) + "]"

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition, other applied first: (s*t)(i) = s(t(i))."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        s = self.images
        return Permutation(tuple(s[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition including fixed points, each cycle from its minimum."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        return Partition(tuple(lengths))

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles())) % 2 else 1


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """All of Sigma_n in lexicographic one line order."""
    return tuple(Permutation(t) for t in _tuple_permutations(range(1, n + 1)))


class GroupAlgebraElement:
    """Sparse element of Q[Sigma_n]: a map from permutations to exact rationals.

    Coefficients are int or Fraction. Zero coefficients are pruned on
    construction, so equality is plain dict equality.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Fraction | int] | None = None):
        self.n = n
        clean: dict[Permutation, Fraction | int] = {}
        for perm, coeff in (terms or {}).items():
            if perm.n != n:
                raise ValueError("term degree mismatch")
            if coeff != 0:
                clean[perm] = coeff
        self.terms = clean

    @classmethod
    def unit(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {Permutation.identity(n): 1})

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        acc = dict(self.terms)
        for perm, coeff in other.terms.items():
            acc[perm] = acc.get(perm, 0) + coeff
        return GroupAlgebraElement(self.n, acc)

    def __neg__(self) -> "GroupAlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def scale(self, scalar: Fraction | int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            self.n, {perm: scalar * coeff for perm, coeff in self.terms.items()}
        )

    def __rmul__(self, scalar) -> "GroupAlgebraElement":
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    def __mul__(self, other) -> "GroupAlgebraElement":
        """Convolution product; scalars multiply coefficientwise."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("degree mismatch")
        # work on raw image tuples, rebuilding Permutations once at the end
        right = [(q.images, cq) for q, cq in other.terms.items()]
        acc: dict[tuple[int, ...], Fraction | int] = {}
        for p, cp in self.terms.items():
            pim = p.images
            for qim, cq in right:
                rim = tuple(pim[j - 1] for j in qim)
                c = cp * cq
                prev = acc.get(rim)
                acc[rim] = c if prev is None else prev + c
        return GroupAlgebraElement(
            self.n, {Permutation(im): c for im, c in acc.items() if c != 0}
        )

    def support(self) -> list[Permutation]:
        return sorted(self.terms, key=lambda p: p.images)

    def coefficient(self, perm: Permutation) -> Fraction | int:
        return self.terms.get(perm, 0)

    def __repr__(self) -> str:
        body = " + ".join(
            f"{self.terms[p]}*{p.one_line()}" for p in self.support()
        )
        return f"<Q[S_{self.n}] {body or '0'}>"

    def to_json(self) -> list[dict]:
        out = []
        for perm in self.support():
            c = Fraction(self.terms[perm])
            out.append(
                {"perm": list(perm.images), "num": c.numerator, "den": c.denominator}
            )
        return out

    @classmethod
    def from_json(cls, data: list[dict], n: int | None = None) -> "GroupAlgebraElement":
        terms: dict[Permutation, Fraction | int] = {}
        for item in data:
            perm = Permutation(tuple(item["perm"]))
            coeff = Fraction(item["num"], item.get("den", 1))
            terms[perm] = terms.get(perm, 0) + coeff
        if n is None:
            if not terms:
                raise ValueError("cannot infer degree of an empty element")
            n = next(iter(terms)).n
        return cls(n, terms)


def sym_projector(n: int) -> GroupAlgebraElement:
    """(1/n!) sum of all permutations, the total symmetrizer."""
    coeff = Fraction(1, math.factorial(n))
    return GroupAlgebraElement(n, {p: coeff for p in all_permutations(n)})


def alt_projector(n: int) -> GroupAlgebraElement:
    """(1/n!) signed sum of all permutations, the total antisymmetrizer."""
    coeff = Fraction(1, math.factorial(n))
    return GroupAlgebraElement(
        n, {p: p.sign() * coeff for p in all_permutations(n)}
    )


def _subgroup_perms(blocks: list[tuple[int, ...]], n: int) -> list[Permutation]:
    """All permutations fixing each block setwise (the Young subgroup of the blocks)."""
    perms = [Permutation.identity(n)]
    for block in blocks:
        extended = []
        for rearranged in _tuple_permutations(block):
            images = list(range(1, n + 1))
            for src, dst in zip(block, rearranged):
                images[src - 1] = dst
            g = Permutation(tuple(images))
            extended.extend(base * g for base in perms)
        perms = extended
    return perms


def row_symmetrizer(tableau: StandardTableau) -> GroupAlgebraElement:
    """Unsigned sum over permutations preserving each row of the tableau."""
    n = tableau.size
    return GroupAlgebraElement(
        n, {p: 1 for p in _subgroup_perms(tableau.row_sets(), n)}
    )


def column_antisymmetrizer(tableau: StandardTableau) -> GroupAlgebraElement:
    """Signed sum over permutations preserving each column of the tableau."""
    n = tableau.size
    return GroupAlgebraElement(
        n, {p: p.sign() for p in _subgroup_perms(tableau.column_sets(), n)}
    )


@lru_cache(maxsize=None)
def _young_symmetrizer_cached(tableau: StandardTableau):
    n = tableau.size
    c = column_antisymmetrizer(tableau) * row_symmetrizer(tableau)
    f = dim_sym_irrep(tableau.shape)
    a = math.factorial(n) // f
    # the scalar is verified by exact multiplication, not trusted
    if c * c != c.scale(a):
        raise InvariantError(
            f"symmetrizer square is not {a} times the symmetrizer for shape {tableau.shape}"
        )
    return c, Fraction(a)


def young_symmetrizer(
    tableau: StandardTableau | Partition, bound: int = SYMMETRIZER_BOUND
) -> tuple[GroupAlgebraElement, Fraction]:
    """Unnormalized Young symmetrizer c and the exact scalar a with c*c = a*c.

    c is the column antisymmetrizer times the row symmetrizer of the tableau
    (for a bare shape, of its row reading filling), with integer coefficients.
    a always equals n! divided by the number of standard tableaux; the identity
    c*c = a*c is checked by exact convolution, which costs O(|support(c)|^2).
    c/a is the idempotent cutting one copy of the irreducible of the shape.
    """
    if isinstance(tableau, Partition):
        tableau = canonical_tableau(tableau)
    if tableau.size > bound:
        raise BoundExceededError(
            f"symmetrizer limited to size {bound}, got {tableau.size}"
        )
    return _young_symmetrizer_cached(tableau)


# ---------------------------------------------------------------------------
# characters


def _strip_removals(lam: tuple[int, ...], size: int):
    """Yield (smaller shape, height) for each removable border strip of the size.

    A strip with top row t takes lam[r] - lam[r+1] + 1 cells from every row it
    passes through and the remainder in its last row; validity is checked on
    the leftover shape.
    """
    k = len(lam)
    for top in range(k):
        strip = [0] * k
        remaining = size
        for row in range(top, k):
            take = remaining
            if row + 1 < k:
                take = min(take, lam[row] - lam[row + 1] + 1)
            strip[row] = take
            remaining -= take
            if remaining == 0:
                break
        if remaining != 0:
            continue
        new = [lam[i] - strip[i] for i in range(k)]
        if any(x < 0 for x in new):
            continue
        if any(new[i] < new[i + 1] for i in range(k - 1)):
            continue
        height = sum(1 for s in strip if s) - 1
        yield tuple(x for x in new if x), height


@lru_cache(maxsize=None)
def _mn_value(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not lam:
        return 1 if not mu else 0
    if not mu:
        return 0
    total = 0
    for smaller, height in _strip_removals(lam, mu[0]):
        total += (-1) ** height * _mn_value(smaller, mu[1:])
    return total


def char_irrep(
    shape: Partition, bound: int = CHARACTER_BOUND
) -> dict[Partition, int]:
    """Character of the irreducible of the shape, as cycle type -> integer."""
    n = shape.size
    if n > bound:
        raise BoundExceededError(f"character table limited to n <= {bound}")
    return {mu: _mn_value(shape.parts, mu.parts) for mu in all_partitions(n)}


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Full character table of Sigma_n: (shape, cycle type) -> value."""
    table = {}
    for lam in all_partitions(n):
        for mu in all_partitions(n):
            table[(lam, mu)] = _mn_value(lam.parts, mu.parts)
    return table


def centralizer_order(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    mult: dict[int, int] = {}
    for part in mu.parts:
        mult[part] = mult.get(part, 0) + 1
    return math.prod(
        (length ** count) * math.factorial(count) for length, count in mult.items()
    )


def conjugacy_class_size(mu: Partition) -> int:
    return math.factorial(mu.size) // centralizer_order(mu)


def class_representative(mu: Partition) -> Permutation:
    """Permutation with consecutive cycles of the given lengths."""
    images = list(range(1, mu.size + 1))
    start = 1
    for length in mu.parts:
        for offset in range(length):
            images[start - 1 + offset] = start + (offset + 1) % length
        start += length
    return Permutation(tuple(images))


def char_inner_product(
    f: Mapping[Partition, int], g: Mapping[Partition, int], n: int
) -> Fraction:
    """Standard inner product of class functions on Sigma_n."""
    total = 0
    for mu in all_partitions(n):
        total += conjugacy_class_size(mu) * f.get(mu, 0) * g.get(mu, 0)
    return Fraction(total, math.factorial(n))


def _merge_cycle_types(alpha: Partition, beta: Partition) -> Partition:
    return Partition(tuple(sorted(alpha.parts + beta.parts, reverse=True)))


def induction_multiplicity(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of the nu irreducible in the induced product of lam and mu.

    Computed purely through characters: Frobenius reciprocity turns the
    question into an inner product over the Young subgroup, so this shares no
    code with the tableau counting route.
    """
    l, m = lam.size, mu.size
    if l + m != nu.size:
        return 0
    table_l = character_table(l)
    table_m = character_table(m)
    table_n = character_table(nu.size)
    total = 0
    for alpha in all_partitions(l):
        chi_l = table_l[(lam, alpha)]
        if chi_l == 0:
            continue
        size_a = conjugacy_class_size(alpha)
        for beta in all_partitions(m):
            chi_m = table_m[(mu, beta)]
            if chi_m == 0:
                continue
            merged = _merge_cycle_types(alpha, beta)
            total += (
                size_a
                * conjugacy_class_size(beta)
                * chi_l
                * chi_m
                * table_n[(nu, merged)]
            )
    denom = math.factorial(l) * math.factorial(m)
    if total % denom:
        raise InvariantError("induction pairing is not an integer")
    return total // denom


# ---------------------------------------------------------------------------
# virtual characters and module decomposition


class SymChar:
    """Virtual character of Sigma_n: integer combination of irreducible shapes."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Partition, int] | None = None):
        self.n = n
        clean: dict[Partition, int] = {}
        for shape, mult in (coeffs or {}).items():
            if shape.size != n:
                raise ValueError(f"shape {shape} is not a partition of {n}")
            if mult != 0:
                clean[shape] = int(mult)
        self.coeffs = clean

    @classmethod
    def irreducible(cls, shape: Partition) -> "SymChar":
        return cls(shape.size, {shape: 1})

    @classmethod
    def regular(cls, n: int) -> "SymChar":
        return cls(n, {p: dim_sym_irrep(p) for p in all_partitions(n)})

    @classmethod
    def zero(cls, n: int) -> "SymChar":
        return cls(n, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_actual(self) -> bool:
        return all(m >= 0 for m in self.coeffs.values())

    def dim(self) -> int:
        return sum(m * dim_sym_irrep(p) for p, m in self.coeffs.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymChar):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other: "SymChar") -> "SymChar":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        acc = dict(self.coeffs)
        for shape, mult in other.coeffs.items():
            acc[shape] = acc.get(shape, 0) + mult
        return SymChar(self.n, acc)

    def scale(self, scalar: int) -> "SymChar":
        return SymChar(self.n, {p: scalar * m for p, m in self.coeffs.items()})

    def restrict_rows(self, d: int) -> "SymChar":
        """Drop constituents whose shape has more than d rows."""
        return SymChar(
            self.n, {p: m for p, m in self.coeffs.items() if p.rows <= d}
        )

    def class_function(self) -> dict[Partition, int]:
        table = character_table(self.n)
        return {
            mu: sum(m * table[(p, mu)] for p, m in self.coeffs.items())
            for mu in all_partitions(self.n)
        }

    def __repr__(self) -> str:
        body = " + ".join(
            f"{m}*[{p}]" for p, m in sorted(self.coeffs.items(), reverse=True)
        )
        return f"<SymChar n={self.n} {body or '0'}>"

    def to_json(self) -> dict[str, int]:
        return {str(p): m for p, m in sorted(self.coeffs.items(), reverse=True)}

    @classmethod
    def from_json(cls, n: int, data: Mapping[str, int]) -> "SymChar":
        return cls(
            n, {Partition.from_string(key): int(m) for key, m in data.items()}
        )


def _class_function_from_traces(
    n: int, trace_of: Callable[[Partition], Fraction | int]
) -> dict[Partition, Fraction | int]:
    return {mu: trace_of(mu) for mu in all_partitions(n)}


def _decompose_class_function(
    n: int, chi: Mapping[Partition, Fraction | int]
) -> SymChar:
    table = character_table(n)
    coeffs: dict[Partition, int] = {}
    for lam in all_partitions(n):
        total = 0
        for mu in all_partitions(n):
            total += conjugacy_class_size(mu) * chi[mu] * table[(lam, mu)]
        mult = Fraction(total, math.factorial(n))
        if mult.denominator != 1:
            raise ValueError(
                f"trace data is not the character of a module (multiplicity {mult} at {lam})"
            )
        if mult < 0:
            raise ValueError(
                f"negative multiplicity {mult} at {lam}: input is virtual, not a module"
            )
        if mult:
            coeffs[lam] = int(mult)
    return SymChar(n, coeffs)


def decompose_module(
    module: GroupAlgebraElement | Mapping[Permutation, list],
    bound: int = CHARACTER_BOUND,
) -> SymChar:
    """Decompose a Sigma_n module into irreducible multiplicities.

    Accepts either an idempotent e of the group algebra, read as the left
    ideal it cuts out, or a mapping from permutations to matrices over exact
    rationals covering at least one representative of every conjugacy class.
    """
    if isinstance(module, GroupAlgebraElement):
        e = module
        n = e.n
        if n > bound:
            raise BoundExceededError(f"decomposition limited to n <= {bound}")
        if e * e != e:
            raise ValueError("element is not idempotent, so it cuts out no module")

        # trace of g |-> sigma*g on the ideal: conjugacy sum of coefficients
        by_type: dict[Partition, Fraction | int] = {}
        for perm, coeff in e.terms.items():
            t = perm.cycle_type()
            by_type[t] = by_type.get(t, 0) + coeff

        def trace_of(mu: Partition) -> Fraction | int:
            # each h conjugate to the representative is hit |centralizer| times
            return centralizer_order(mu) * by_type.get(mu, 0)

        return _decompose_class_function(n, _class_function_from_traces(n, trace_of))

    if isinstance(module, Mapping):
        if not module:
            raise ValueError("empty matrix family")
        n = next(iter(module)).n
        if n > bound:
            raise BoundExceededError(f"decomposition limited to n <= {bound}")
        traces: dict[Partition, Fraction | int] = {}
        for perm, matrix in module.items():
            if perm.n != n:
                raise ValueError("matrix family mixes degrees")
            t = perm.cycle_type()
            tr = sum(matrix[i][i] for i in range(len(matrix)))
            if t in traces and traces[t] != tr:
                raise ValueError(f"inconsistent traces within class {t}")
            traces[t] = tr
        missing = [mu for mu in all_partitions(n) if mu not in traces]
        if missing:
            raise ValueError(f"no representative for classes {missing}")
        return _decompose_class_function(n, traces)

    raise TypeError("expected a GroupAlgebraElement or a permutation->matrix mapping")
