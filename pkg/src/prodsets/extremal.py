"""Extremal checks on product sets: the sharp Fibonacci count bound and the
Lucas-term count bound."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arith import DeskScaleError
from .productset import BaseSet, build_product_set, sequence_members
from .sequences import SequenceKind, fib, fib_values_upto, membership

MAX_UNIVERSE = 40
MAX_SET_SIZE = 6


def max_fib_count(universe_max: int, set_size: int) -> tuple[int, BaseSet]:
    """Maximum number of Fibonacci values in B.B over all B of the given size
    inside {1..universe_max}, with the lexicographically first maximiser.
    """
    if universe_max < 1 or set_size < 1:
        raise ValueError("universe_max and set_size must be >= 1")
    if universe_max > MAX_UNIVERSE or set_size > MAX_SET_SIZE:
        raise DeskScaleError(
            f"subset search capped at universe {MAX_UNIVERSE}, size {MAX_SET_SIZE}")
    if set_size > universe_max:
        raise ValueError("set size exceeds universe size")
    fib_set = frozenset(fib_values_upto(universe_max * universe_max))
    best_count, best_combo = -1, None
    for combo in combinations(range(1, universe_max + 1), set_size):
        products = set()
        for i, a in enumerate(combo):
            for b in combo[i:]:
                products.add(a * b)
        count = len(products & fib_set)
        if count > best_count:
            best_count, best_combo = count, combo
    return best_count, BaseSet(best_combo)


def sharp_example(k: int) -> BaseSet:
    """A k-element set with exactly k Fibonacci values in its product set:
    {1, F_3, F_4, ..., F_{k+1}} (1*1 = 1 and 1*F_i = F_i supply the k values).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return BaseSet([1] + [fib(i) for i in range(3, k + 2)])


@dataclass(frozen=True)
class LucasBoundReport:
    """Distinct sequence terms in B.B against 2|B| + 30, with the count of
    index >= 31 terms against 2|B| - 1."""

    set_size: int
    count: int
    bound: int
    ok: bool
    high_index_count: int
    high_index_bound: int
    high_index_ok: bool
    members: tuple[tuple[int, int], ...]  # (value, index), ascending by value


def lucas_count_check(base: BaseSet, kind: SequenceKind) -> LucasBoundReport:
    ps = build_product_set(base)
    found = sequence_members(ps, membership(kind))
    size = len(base)
    count = len(found)
    high = sum(1 for m in found if m.index >= 31)
    return LucasBoundReport(
        set_size=size,
        count=count,
        bound=2 * size + 30,
        ok=count < 2 * size + 30,
        high_index_count=high,
        high_index_bound=2 * size - 1,
        high_index_ok=high <= 2 * size - 1,
        members=tuple((int(m.value), m.index) for m in found),
    )
