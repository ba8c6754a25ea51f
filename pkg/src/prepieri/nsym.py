"""Noncommutative symmetric functions and the immaculate basis.

Elements are word polynomials in the generators H_1, H_2, ...; the
reductions H_0 -> 1 and H_k -> 0 for k < 0 are applied eagerly when a
word is built, so canonical forms only ever contain positive indices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import Generator, Kind, Polynomial, gen_H
from .combinatorics import IntTuple, signed_permutations, weak_compositions
from .rowdet import SquareMatrix, rowdet

_ZERO = Polynomial.zero(Kind.WORD)
_ONE = Polynomial.one(Kind.WORD)


def h_word(ks: Iterable[int]) -> Polynomial:
    """The product H_{k_1} H_{k_2} ... with the index reductions applied."""
    word = []
    for k in ks:
        if k < 0:
            return _ZERO
        if k == 0:
            continue
        word.append(gen_H(k))
    return Polynomial._raw(Kind.WORD, {tuple(word): 1})


def immaculate(alpha: Sequence[int]) -> Polynomial:
    """The determinant-shaped element: sum over sigma in S_m of
    sign(sigma) * H_{(alpha_i + sigma(i) - i)_i}, reduced."""
    alpha = tuple(alpha)
    m = len(alpha)
    total = _ZERO
    for sign, imgs in signed_permutations(m):
        word = h_word(alpha[i] + imgs[i] - i for i in range(m))
        total = total + word * sign
    return total


def _reduce_H(g: Generator) -> Polynomial | None:
    if g.family != "H":
        return None
    k = g.indices[0]
    if k < 0:
        return _ZERO
    if k == 0:
        return _ONE
    return None


def immaculate_via_rowdet(alpha: Sequence[int]) -> Polynomial:
    """Same element computed as rowdet((H_{alpha_i + j - i})) in the raw
    free ring, then reduced by substitution.  Cross-checks ``immaculate``."""
    alpha = tuple(alpha)
    m = len(alpha)
    matrix = SquareMatrix.from_function(
        m,
        lambda i, j: Polynomial.from_generator(gen_H(alpha[i - 1] + j - i)),
        Kind.WORD,
    )
    return rowdet(matrix).substitute(_reduce_H)


def right_pieri_compositions(alpha: Sequence[int], s: int) -> list[IntTuple]:
    """The (n+1)-tuples beta with |beta| = |alpha| + s, beta_i >= alpha_i
    on the first n entries and beta_{n+1} >= 0.  Empty when s < 0."""
    alpha = tuple(alpha)
    n = len(alpha)
    out = []
    for delta in weak_compositions(n + 1, s):
        beta = tuple(alpha[i] + delta[i] for i in range(n)) + (delta[n],)
        out.append(beta)
    return out


def verify_right_pieri(alpha: Sequence[int], s: int) -> bool:
    """Exact check of the right multiplication rule by H_s."""
    alpha = tuple(alpha)
    lhs = immaculate(alpha) * h_word((s,))
    rhs = _ZERO
    for beta in right_pieri_compositions(alpha, s):
        rhs = rhs + immaculate(beta)
    return lhs == rhs
