"""Shape arithmetic against brute-force enumeration oracles."""

import math
from itertools import permutations

import pytest

from schurcalc.errors import BoundExceededError
from schurcalc.partitions import (
    Partition,
    StandardTableau,
    all_partitions,
    canonical_tableau,
    dim_gl_irrep,
    dim_sym_irrep,
    standard_tableaux,
)


def brute_standard_count(shape: Partition) -> int:
    """Count standard fillings by filtering all n! arrangements."""
    cells = [(i, j) for i, row in enumerate(shape.parts) for j in range(row)]
    n = shape.size
    count = 0
    for fill in permutations(range(1, n + 1)):
        grid = {cell: value for cell, value in zip(cells, fill)}
        ok = True
        for (i, j), value in grid.items():
            if j + 1 < shape.row(i) and grid[(i, j + 1)] < value:
                ok = False
                break
            if (i + 1, j) in grid and grid[(i + 1, j)] < value:
                ok = False
                break
        if ok:
            count += 1
    return count


def brute_ssyt_count(shape: Partition, d: int) -> int:
    """Count semistandard fillings with entries at most d."""
    cells = [(i, j) for i, row in enumerate(shape.parts) for j in range(row)]
    grid = {}

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[(i, j - 1)])
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        total = 0
        for value in range(lo, d + 1):
            grid[(i, j)] = value
            total += place(idx + 1)
        grid.pop((i, j), None)
        return total

    return place(0)


def test_parse_and_str_roundtrip():
    for text in ("", "1", "3,1,1", "5,5,2"):
        assert str(Partition.from_string(text)) == text


def test_parse_rejects_bad_rows():
    with pytest.raises(ValueError):
        Partition.from_string("1,2")
    with pytest.raises(ValueError):
        Partition((0, 1))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_counts_match_known_sequence():
    # number of partitions of n for n = 0..10
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, count in enumerate(expected):
        assert len(all_partitions(n)) == count


def test_enumeration_is_decreasing_lex():
    for n in range(9):
        shapes = all_partitions(n)
        assert all(p.size == n for p in shapes)
        assert list(shapes) == sorted(shapes, key=lambda p: p.parts, reverse=True)
        assert len(set(shapes)) == len(shapes)


def test_conjugate_involution():
    for n in range(10):
        for p in all_partitions(n):
            assert p.conjugate().conjugate() == p


def test_conjugate_example():
    assert Partition((4, 2, 1)).conjugate() == Partition((3, 2, 1, 1))


def test_hook_lengths_example():
    assert sorted(Partition((2, 1)).hook_lengths()) == [1, 1, 3]
    assert sorted(Partition((3, 2)).hook_lengths()) == [1, 1, 2, 3, 4]


def test_contents_example():
    assert Partition((2, 1)).contents() == [0, 1, -1]


def test_two_tableaux_for_hook_of_three():
    shape = Partition((2, 1))
    found = standard_tableaux(shape)
    assert len(found) == 2
    assert dim_sym_irrep(shape) == 2


def test_hook_formula_matches_brute_force():
    for n in range(6):
        for p in all_partitions(n):
            assert dim_sym_irrep(p) == brute_standard_count(p)


def test_dimension_squares_sum_to_group_order():
    assert sum(dim_sym_irrep(p) ** 2 for p in all_partitions(5)) == 120
    for n in range(9):
        assert sum(dim_sym_irrep(p) ** 2 for p in all_partitions(n)) == math.factorial(n)


def test_standard_tableaux_are_valid_and_deterministic():
    for n in range(7):
        for p in all_partitions(n):
            found = standard_tableaux(p)
            assert len(found) == dim_sym_irrep(p)
            assert len(set(found)) == len(found)
            assert found == sorted(found, key=lambda t: t.rows)
            assert canonical_tableau(p) in found


def test_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau(((1, 3), (2, 2)))
    with pytest.raises(ValueError):
        StandardTableau(((2, 1),))
    with pytest.raises(ValueError):
        StandardTableau(((1, 2), (4,)))


def test_enumeration_bound():
    with pytest.raises(BoundExceededError):
        standard_tableaux(Partition((6, 5)))


def test_gl_dimension_hook_content_vs_tableaux():
    assert dim_gl_irrep(Partition((2, 1)), 2) == 2
    for n in range(6):
        for p in all_partitions(n):
            for d in range(1, 4):
                assert dim_gl_irrep(p, d) == brute_ssyt_count(p, d)


def test_gl_dimension_vanishes_past_rank():
    for n in range(8):
        for p in all_partitions(n):
            for d in range(5):
                assert (dim_gl_irrep(p, d) == 0) == (p.rows > d)
