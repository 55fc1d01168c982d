import pytest

from prodsets.arith import DeskScaleError
from prodsets.extremal import lucas_count_check, max_fib_count, sharp_example
from prodsets.productset import BaseSet, build_product_set, sequence_members
from prodsets.sequences import (
    FIBONACCI,
    FIBONACCI_SPEC,
    LUCAS_V,
    lucas_u,
    lucas_v,
    membership,
)


def test_max_fib_count_trivial():
    assert max_fib_count(2, 1) == (1, BaseSet([1]))


def test_max_fib_count_small():
    count, witness = max_fib_count(10, 2)
    assert count == 2
    assert witness == BaseSet([1, 2])     # first maximiser in subset order


def test_max_fib_count_universe_20():
    count, witness = max_fib_count(20, 3)
    assert count == 3
    ps = build_product_set(witness)
    assert len(sequence_members(ps, membership(FIBONACCI))) == 3


def test_max_fib_count_matches_set_size_at_desk_scale():
    count, witness = max_fib_count(30, 5)
    assert count == 5
    assert len(witness) == 5


def test_max_fib_count_guards():
    with pytest.raises(DeskScaleError):
        max_fib_count(41, 3)
    with pytest.raises(DeskScaleError):
        max_fib_count(30, 7)
    with pytest.raises(ValueError):
        max_fib_count(2, 3)
    with pytest.raises(ValueError):
        max_fib_count(0, 1)


def test_max_fib_count_monotone():
    grid = {(n, k): max_fib_count(n, k)[0]
            for n in range(4, 9) for k in range(1, 4)}
    for (n, k), value in grid.items():
        if (n + 1, k) in grid:
            assert grid[(n + 1, k)] >= value
        if (n, k + 1) in grid:
            assert grid[(n, k + 1)] >= value


def test_sharp_example_values():
    assert sharp_example(1) == BaseSet([1])
    assert sharp_example(3) == BaseSet([1, 2, 3])
    assert sharp_example(5) == BaseSet([1, 2, 3, 5, 8])
    with pytest.raises(ValueError):
        sharp_example(0)


@pytest.mark.parametrize("k", range(1, 9))
def test_sharp_example_achieves_k(k):
    base = sharp_example(k)
    assert len(base) == k
    found = sequence_members(build_product_set(base), membership(FIBONACCI))
    assert len(found) == k


def test_lucas_count_check_examples():
    report = lucas_count_check(BaseSet([1, 3, 4, 7]), LUCAS_V)
    assert (report.count, report.bound, report.ok) == (4, 38, True)
    assert [v for v, _ in report.members] == [1, 3, 4, 7]

    report = lucas_count_check(BaseSet([1]), LUCAS_V)
    assert (report.count, report.bound, report.ok) == (1, 32, True)


def test_lucas_count_check_high_index_witness():
    u31 = lucas_u(FIBONACCI_SPEC, 31)
    u32 = lucas_u(FIBONACCI_SPEC, 32)
    report = lucas_count_check(BaseSet([1, u31, u32]), FIBONACCI_SPEC)
    assert report.high_index_count == 2
    assert report.high_index_bound == 5
    assert report.high_index_ok


def test_lucas_count_check_high_index_witness_lucas_numbers():
    elems = [1] + [lucas_v(FIBONACCI_SPEC, n) for n in range(31, 34)]
    report = lucas_count_check(BaseSet(elems), LUCAS_V)
    assert report.high_index_count == 3
    assert report.high_index_ok
