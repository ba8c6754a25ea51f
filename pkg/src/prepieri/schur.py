"""Schur polynomials in the commutative h-generators.

Works with the determinant definition: for any integer tuple lam of
length n, ``jacobi_trudi(lam)`` expands det((h_{lam_i - i + j})) exactly,
under the conventions h_0 = 1 and h_k = 0 for k < 0.  Arbitrary tuples
straighten to 0 or to a signed honest partition; the strip enumerators
and the alternative Pieri comparisons live on top of that.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Kind, Polynomial, gen_lam
from .combinatorics import (
    IntTuple,
    Permutation,
    binary_compositions,
    tuple_add,
    weak_compositions,
)
from .rowdet import SquareMatrix, rowdet

Partition = tuple[int, ...]

_ZERO = Polynomial.zero(Kind.EXPONENT)
_ONE = Polynomial.one(Kind.EXPONENT)


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing nonnegative tuple; trim trailing zeros."""
    tup = tuple(parts)
    if any(a < b for a, b in zip(tup, tup[1:])):
        raise ValueError(f"not weakly decreasing: {tup!r}")
    if tup and tup[-1] < 0:
        raise ValueError(f"negative part in {tup!r}")
    while tup and tup[-1] == 0:
        tup = tup[:-1]
    return tup


def h_poly(k: int) -> Polynomial:
    """The complete generator h_k: zero for k < 0, the unit for k = 0."""
    if k < 0:
        return _ZERO
    if k == 0:
        return _ONE
    return Polynomial.from_generator(gen_lam(k), Kind.EXPONENT)


def jacobi_trudi(lam: Sequence[int]) -> Polynomial:
    """det((h_{lam_i - i + j})) over i, j in [len(lam)], expanded exactly."""
    lam = tuple(lam)
    n = len(lam)
    matrix = SquareMatrix.from_function(
        n, lambda i, j: h_poly(lam[i - 1] - i + j), Kind.EXPONENT
    )
    return rowdet(matrix)


def e_poly(p: int) -> Polynomial:
    """The elementary generator e_p as the column determinant of h's."""
    if p < 0:
        return _ZERO
    return jacobi_trudi((1,) * p)


@dataclass(frozen=True)
class StraightenResult:
    """Either zero (sign 0) or a sign with an honest partition."""

    sign: int
    partition: Partition | None

    def is_zero(self) -> bool:
        return self.sign == 0


_STRAIGHTEN_ZERO = StraightenResult(0, None)


def straighten(lam: Sequence[int]) -> StraightenResult:
    """Rewrite the Schur determinant of an arbitrary integer tuple.

    Sort the shifted entries lam_i - i strictly; a collision or a
    negative resulting part forces the zero result, otherwise the sort
    permutation's sign travels along.
    """
    lam = tuple(lam)
    n = len(lam)
    shifted = [lam[i] - (i + 1) for i in range(n)]
    if len(set(shifted)) < n:
        return _STRAIGHTEN_ZERO
    order = sorted(range(n), key=lambda i: -shifted[i])
    sign = Permutation(i + 1 for i in order).sign
    mu = tuple(shifted[order[i]] + (i + 1) for i in range(n))
    if mu and mu[-1] < 0:
        return _STRAIGHTEN_ZERO
    return StraightenResult(sign, as_partition(mu))


def _pad(lam: Partition, n: int) -> IntTuple:
    if len(lam) > n:
        raise ValueError(f"cannot pad {lam!r} to length {n}")
    return lam + (0,) * (n - len(lam))


def horizontal_strips(lam: Sequence[int], p: int) -> list[Partition]:
    """All partitions mu with mu/lam a horizontal p-strip.

    Interlacing form: mu_1 >= lam_1 >= mu_2 >= lam_2 >= ... with total
    growth p.  Output sorted in descending lexicographic order.
    """
    lam = as_partition(lam)
    if p < 0:
        return []
    rows = len(lam) + 1
    padded = _pad(lam, rows)
    results: list[Partition] = []

    def extend(i: int, prefix: tuple[int, ...], budget: int) -> None:
        if i == rows:
            if budget == 0:
                results.append(as_partition(prefix))
            return
        low = padded[i]
        high = padded[i - 1] if i > 0 else padded[0] + budget
        high = min(high, low + budget)
        for value in range(low, high + 1):
            extend(i + 1, prefix + (value,), budget - (value - low))

    extend(0, (), p)
    results.sort(reverse=True)
    return results


def vertical_strips(lam: Sequence[int], p: int) -> list[Partition]:
    """All partitions mu with mu/lam a vertical p-strip (entrywise growth
    in {0,1}).  Output sorted in descending lexicographic order."""
    lam = as_partition(lam)
    if p < 0:
        return []
    rows = len(lam) + p
    padded = _pad(lam, rows)
    results = []
    for bits in binary_compositions(rows, p):
        mu = tuple_add(padded, bits)
        if all(a >= b for a, b in zip(mu, mu[1:])):
            results.append(as_partition(mu))
    results.sort(reverse=True)
    return results


def alt_pieri_addends(
    lam: Sequence[int], p: int, kind: str
) -> list[tuple[IntTuple, StraightenResult]]:
    """The raw addend tuples lam + beta of the alternative Pieri sums,
    each with its straightening.

    ``kind="H"`` pads one zero row (so the last entry is 0) and sums over
    weak compositions; ``kind="E"`` pads p zero rows and sums over 0/1
    compositions.
    """
    lam = as_partition(lam)
    if p < 0:
        raise ValueError("p must be nonnegative")
    if kind == "H":
        n = len(lam) + 1
        betas = weak_compositions(n, p)
    elif kind == "E":
        n = len(lam) + p
        betas = binary_compositions(n, p)
    else:
        raise ValueError(f"kind must be 'H' or 'E', got {kind!r}")
    padded = _pad(lam, n)
    return [(tuple_add(padded, beta), straighten(tuple_add(padded, beta))) for beta in betas]


def alt_pieri_equiv(lam: Sequence[int], p: int, kind: str) -> bool:
    """Check the alternative Pieri sum against the strip-sum rule.

    True iff (a) the sign-collected straightened addends match the strip
    list exactly (coefficient 1 on every strip partition, 0 elsewhere)
    and (b) the expanded polynomial sum equals jacobi_trudi(lam) times
    h_p or e_p.
    """
    lam = as_partition(lam)
    addends = alt_pieri_addends(lam, p, kind)
    strips = horizontal_strips(lam, p) if kind == "H" else vertical_strips(lam, p)

    net: Counter[Partition] = Counter()
    for _, result in addends:
        if not result.is_zero():
            net[result.partition] += result.sign
    collected = {mu: c for mu, c in net.items() if c}
    if collected != {mu: 1 for mu in strips}:
        return False

    n = len(lam) + 1 if kind == "H" else len(lam) + p
    total = _ZERO
    for tup, _ in addends:
        total = total + jacobi_trudi(tup)
    factor = h_poly(p) if kind == "H" else e_poly(p)
    product = jacobi_trudi(_pad(lam, n)) * factor
    strip_sum = _ZERO
    for mu in strips:
        strip_sum = strip_sum + jacobi_trudi(_pad(mu, max(n, len(mu))))
    return total == product == strip_sum
