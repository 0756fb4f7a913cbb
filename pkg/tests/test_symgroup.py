"""Group algebra, symmetrizers and characters.

The character recursion is checked against a fully independent oracle: the
trace of each permutation acting by left multiplication on an explicit
rational basis of the left ideal cut out by the normalized symmetrizer.
"""

import math
from fractions import Fraction

import pytest

from schurcalc.errors import BoundExceededError
from schurcalc.partitions import Partition, all_partitions, canonical_tableau, dim_sym_irrep
from schurcalc.symgroup import (
    GroupAlgebraElement,
    Permutation,
    SymChar,
    all_permutations,
    alt_projector,
    centralizer_order,
    char_inner_product,
    char_irrep,
    character_table,
    class_representative,
    conjugacy_class_size,
    decompose_module,
    induction_multiplicity,
    sym_projector,
    young_symmetrizer,
)


# ---------------------------------------------------------------------------
# permutations


def test_composition_applies_right_factor_first():
    s = Permutation((2, 1, 3))
    t = Permutation((1, 3, 2))
    # (s*t)(2) = s(t(2)) = s(3) = 3
    assert (s * t).images == (2, 3, 1)
    assert (t * s).images == (3, 1, 2)


def test_inverse_and_identity():
    for perm in all_permutations(4):
        assert perm * perm.inverse() == Permutation.identity(4)
        assert perm.inverse() * perm == Permutation.identity(4)


def test_sign_is_multiplicative():
    for s in all_permutations(3):
        for t in all_permutations(3):
            assert (s * t).sign() == s.sign() * t.sign()


def test_cycle_type_examples():
    assert Permutation((2, 3, 1, 4)).cycle_type() == Partition((3, 1))
    assert Permutation((2, 1, 4, 3)).cycle_type() == Partition((2, 2))
    assert Permutation.identity(5).cycle_type() == Partition((1,) * 5)


def test_one_line_roundtrip():
    for perm in all_permutations(4):
        assert Permutation.from_one_line(perm.one_line()) == perm
    with pytest.raises(ValueError):
        Permutation.from_one_line("[1,1,2]")


def test_class_representative_has_right_type():
    for n in range(7):
        for mu in all_partitions(n):
            assert class_representative(mu).cycle_type() == mu


def test_class_sizes_partition_the_group():
    for n in range(7):
        assert sum(conjugacy_class_size(mu) for mu in all_partitions(n)) == math.factorial(n)
        for mu in all_partitions(n):
            assert centralizer_order(mu) * conjugacy_class_size(mu) == math.factorial(n)


# ---------------------------------------------------------------------------
# group algebra


def test_convolution_unit_and_associativity():
    unit = GroupAlgebraElement.unit(3)
    samples = [
        GroupAlgebraElement(3, {Permutation((2, 1, 3)): Fraction(1, 2)}),
        alt_projector(3),
        sym_projector(3),
        GroupAlgebraElement(3, {Permutation((2, 3, 1)): 2, Permutation((1, 3, 2)): -1}),
    ]
    for x in samples:
        assert unit * x == x
        assert x * unit == x
    for x in samples:
        for y in samples:
            for z in samples:
                assert (x * y) * z == x * (y * z)


def test_scalar_and_additive_structure():
    x = alt_projector(3)
    assert x + (-x) == GroupAlgebraElement.zero(3)
    assert x.scale(2) == x + x
    assert (x - x).is_zero()


def test_projector_identities():
    # direct expansion targets: n = 2 and n = 3
    swap = Permutation((2, 1))
    alt2 = GroupAlgebraElement(2, {Permutation.identity(2): Fraction(1, 2), swap: Fraction(-1, 2)})
    assert alt_projector(2) == alt2
    assert alt2 * alt2 == alt2
    for n in range(5):
        assert alt_projector(n) * alt_projector(n) == alt_projector(n)
        assert sym_projector(n) * sym_projector(n) == sym_projector(n)
    for n in (2, 3, 4):
        zero = GroupAlgebraElement.zero(n)
        assert sym_projector(n) * alt_projector(n) == zero
        assert alt_projector(n) * sym_projector(n) == zero


def test_group_algebra_json_roundtrip():
    x = alt_projector(3)
    assert GroupAlgebraElement.from_json(x.to_json()) == x
    y = GroupAlgebraElement(2, {Permutation((2, 1)): Fraction(-3, 7)})
    assert GroupAlgebraElement.from_json(y.to_json()) == y


# ---------------------------------------------------------------------------
# Young symmetrizers


def test_hook_symmetrizer_exact_terms():
    c, a = young_symmetrizer(Partition((2, 1)))
    assert a == 3
    expected = {
        Permutation((1, 2, 3)): 1,
        Permutation((2, 1, 3)): 1,
        Permutation((3, 2, 1)): -1,
        Permutation((2, 3, 1)): -1,
    }
    assert dict(c.terms) == expected


def test_symmetrizer_contract_small():
    for n in range(1, 6):
        for shape in all_partitions(n):
            c, a = young_symmetrizer(shape)
            assert a == Fraction(math.factorial(n), dim_sym_irrep(shape))
            assert c * c == c.scale(a)


def test_symmetrizer_row_shape_is_total_symmetrizer():
    c, a = young_symmetrizer(Partition((3,)))
    assert c.scale(Fraction(1) / a) == sym_projector(3)
    c, a = young_symmetrizer(Partition((1, 1, 1)))
    assert c.scale(Fraction(1) / a) == alt_projector(3)


def test_symmetrizer_bound():
    with pytest.raises(BoundExceededError):
        young_symmetrizer(Partition((5, 4)))


# ---------------------------------------------------------------------------
# characters: independent matrix oracle


def _left_ideal_basis(e: GroupAlgebraElement):
    """Row-reduced rational basis of span{g*e} inside the group algebra."""
    perms = all_permutations(e.n)
    index = {p: i for i, p in enumerate(perms)}
    rows = []
    for g in perms:
        x = GroupAlgebraElement(e.n, {g: 1}) * e
        vec = [Fraction(0)] * len(perms)
        for p, coeff in x.terms.items():
            vec[index[p]] = Fraction(coeff)
        rows.append(vec)
    basis = []
    pivots = []
    for vec in rows:
        vec = vec[:]
        for piv, bvec in zip(pivots, basis):
            if vec[piv]:
                factor = vec[piv]
                vec = [u - factor * v for u, v in zip(vec, bvec)]
        for col, value in enumerate(vec):
            if value:
                basis.append([u / value for u in vec])
                pivots.append(col)
                break
    return perms, index, basis, pivots


def _trace_on_ideal(sigma: Permutation, e: GroupAlgebraElement) -> Fraction:
    perms, index, basis, pivots = _left_ideal_basis(e)
    trace = Fraction(0)
    for bvec in basis:
        # image of the basis vector under left multiplication by sigma
        image = [Fraction(0)] * len(perms)
        for i, coeff in enumerate(bvec):
            if coeff:
                image[index[sigma * perms[i]]] += coeff
        # express in the echelon basis; the diagonal entry is the pivot coord
        coords = []
        residual = image
        for piv, other in zip(pivots, basis):
            factor = residual[piv]
            coords.append(factor)
            if factor:
                residual = [u - factor * v for u, v in zip(residual, other)]
        assert all(u == 0 for u in residual), "image left the ideal"
        trace += coords[[id(b) for b in basis].index(id(bvec))]
    return trace


def test_character_recursion_matches_matrix_traces():
    for n in range(1, 5):
        for shape in all_partitions(n):
            c, a = young_symmetrizer(shape)
            e = c.scale(Fraction(1) / a)
            char = char_irrep(shape)
            for mu in all_partitions(n):
                got = _trace_on_ideal(class_representative(mu), e)
                assert got == char[mu], f"character wrong at {shape}, class {mu}"


def test_character_anchor_values():
    char = char_irrep(Partition((2, 1)))
    assert char[Partition((1, 1, 1))] == 2
    assert char[Partition((2, 1))] == 0
    assert char[Partition((3,))] == -1


def test_character_table_orthogonality():
    for n in range(1, 7):
        shapes = all_partitions(n)
        table = character_table(n)
        for lam in shapes:
            for mu in shapes:
                inner = sum(
                    conjugacy_class_size(cls) * table[(lam, cls)] * table[(mu, cls)]
                    for cls in shapes
                )
                assert inner == (math.factorial(n) if lam == mu else 0)


def test_character_column_orthogonality():
    n = 5
    shapes = all_partitions(n)
    table = character_table(n)
    for alpha in shapes:
        for beta in shapes:
            total = sum(table[(lam, alpha)] * table[(lam, beta)] for lam in shapes)
            assert total == (centralizer_order(alpha) if alpha == beta else 0)


def test_inner_product_is_kronecker_on_irreducibles():
    for n in range(1, 6):
        shapes = all_partitions(n)
        for lam in shapes:
            for mu in shapes:
                got = char_inner_product(char_irrep(lam), char_irrep(mu), n)
                assert got == (1 if lam == mu else 0)


def test_induction_anchor_values():
    assert induction_multiplicity(
        Partition((1, 1)), Partition((1,)), Partition((1, 1, 1))
    ) == 1
    assert induction_multiplicity(
        Partition((2, 1)), Partition((2, 1)), Partition((3, 2, 1))
    ) == 2


# ---------------------------------------------------------------------------
# module decomposition


def test_regular_module_decomposition():
    got = decompose_module(GroupAlgebraElement.unit(3))
    assert got.coeffs == {
        Partition((3,)): 1,
        Partition((2, 1)): 2,
        Partition((1, 1, 1)): 1,
    }
    for n in range(6):
        assert decompose_module(GroupAlgebraElement.unit(n)) == SymChar.regular(n)


def test_projector_modules():
    assert decompose_module(sym_projector(4)).coeffs == {Partition((4,)): 1}
    assert decompose_module(alt_projector(4)).coeffs == {Partition((1, 1, 1, 1)): 1}


def test_symmetrizer_module_is_single_irreducible():
    for n in range(1, 6):
        for shape in all_partitions(n):
            c, a = young_symmetrizer(shape)
            e = c.scale(Fraction(1) / a)
            assert decompose_module(e).coeffs == {shape: 1}


def test_decompose_rejects_non_idempotent():
    x = GroupAlgebraElement(3, {Permutation((2, 1, 3)): 1})
    with pytest.raises(ValueError):
        decompose_module(x)


def _left_regular_matrix(sigma: Permutation):
    perms = all_permutations(sigma.n)
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    mat = [[0] * size for _ in range(size)]
    for j, g in enumerate(perms):
        mat[index[sigma * g]][j] = 1
    return mat


def test_decompose_from_matrix_family():
    family = {
        class_representative(mu): _left_regular_matrix(class_representative(mu))
        for mu in all_partitions(3)
    }
    assert decompose_module(family) == SymChar.regular(3)


def test_decompose_matrix_family_needs_all_classes():
    family = {Permutation.identity(3): _left_regular_matrix(Permutation.identity(3))}
    with pytest.raises(ValueError):
        decompose_module(family)


def test_decompose_rejects_non_integral_multiplicities():
    # traces 1, 0, 0 average to 1/6 on the trivial shape
    family = {
        Permutation.identity(3): [[1]],
        Permutation((2, 1, 3)): [[0]],
        Permutation((2, 3, 1)): [[0]],
    }
    with pytest.raises(ValueError):
        decompose_module(family)


def test_symchar_json_roundtrip():
    char = SymChar.regular(4)
    assert SymChar.from_json(4, char.to_json()) == char
    assert char.dim() == 24
    assert SymChar.irreducible(Partition((2, 2))).dim() == 2
