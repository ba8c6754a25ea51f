"""The two pre-Pieri identities and their specialization corollaries.

Everything lives in the free noncommutative ring on the grid generators
h[k,i].  ``t_alpha`` is the row-determinant of the matrix with (i,j)
entry h[alpha_i + j, i]; the first rule sums shifted t's over weak
compositions and the second over 0/1 compositions, each matching a single
row-determinant with modified column offsets.

Specializations that force h[k,i] = 0 for k < 0 on selected columns are
applied as a substitution pass after full symbolic expansion, so the
corollaries are literal specializations of the theorems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .algebra import Generator, Kind, Polynomial, gen_h
from .combinatorics import (
    IntTuple,
    binary_compositions,
    eta_tuple,
    tuple_add,
    weak_compositions,
    xi_tuple,
)
from .rowdet import SquareMatrix, rowdet

_ZERO = Polynomial.zero(Kind.WORD)


@dataclass(frozen=True)
class PieriContext:
    """Parameters of one verification: size n, weight p, base tuple alpha.

    ``negative_kill`` lists the columns i on which h[k,i] is sent to 0
    for all k < 0.
    """

    n: int
    p: int
    alpha: IntTuple
    negative_kill: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "negative_kill", frozenset(self.negative_kill))
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.alpha) != self.n:
            raise ValueError(f"alpha must have length {self.n}, got {self.alpha!r}")


def kill_negative(poly: Polynomial, columns: Iterable[int]) -> Polynomial:
    """Send h[k,i] to 0 for every k < 0 and i in ``columns``."""
    cols = frozenset(columns)
    if not cols:
        return poly

    def image(g: Generator) -> Polynomial | None:
        if g.family == "h2" and g.indices[0] < 0 and g.indices[1] in cols:
            return _ZERO
        return None

    return poly.substitute(image)


def _h_matrix(n: int, offsets: IntTuple, alpha: IntTuple) -> SquareMatrix:
    """The matrix with (i, j) entry h[alpha_i + offsets_j, i]."""
    return SquareMatrix.from_function(
        n,
        lambda i, j: Polynomial.from_generator(gen_h(alpha[i - 1] + offsets[j - 1], i)),
        Kind.WORD,
    )


def t_alpha(ctx: PieriContext) -> Polynomial:
    """rowdet((h[alpha_i + j, i])), with the kill substitution applied."""
    offsets = tuple(range(1, ctx.n + 1))
    det = rowdet(_h_matrix(ctx.n, offsets, ctx.alpha))
    return kill_negative(det, ctx.negative_kill)


def _shifted(ctx: PieriContext, beta: IntTuple) -> PieriContext:
    return PieriContext(ctx.n, ctx.p, tuple_add(ctx.alpha, beta), ctx.negative_kill)


def first_rule_sides(ctx: PieriContext) -> tuple[Polynomial, Polynomial]:
    """Both sides of the first rule: the weak-composition sum and the
    eta-column row-determinant."""
    if ctx.p < 0:
        raise ValueError("first rule needs p >= 0")
    lhs = _ZERO
    for beta in weak_compositions(ctx.n, ctx.p):
        lhs = lhs + t_alpha(_shifted(ctx, beta))
    eta = eta_tuple(ctx.n, ctx.p)
    rhs = kill_negative(rowdet(_h_matrix(ctx.n, eta, ctx.alpha)), ctx.negative_kill)
    return lhs, rhs


def second_rule_sides(ctx: PieriContext) -> tuple[Polynomial, Polynomial]:
    """Both sides of the second rule: the 0/1-composition sum and the
    xi-column row-determinant."""
    if not 0 <= ctx.p <= ctx.n:
        raise ValueError(f"second rule needs p in 0..{ctx.n}, got {ctx.p}")
    lhs = _ZERO
    for beta in binary_compositions(ctx.n, ctx.p):
        lhs = lhs + t_alpha(_shifted(ctx, beta))
    xi = xi_tuple(ctx.n, ctx.p)
    rhs = kill_negative(rowdet(_h_matrix(ctx.n, xi, ctx.alpha)), ctx.negative_kill)
    return lhs, rhs


def verify_first(ctx: PieriContext) -> bool:
    lhs, rhs = first_rule_sides(ctx)
    return lhs == rhs


def verify_second(ctx: PieriContext) -> bool:
    lhs, rhs = second_rule_sides(ctx)
    return lhs == rhs


def h_entry(k: int, i: int, kill: frozenset[int]) -> Polynomial:
    """A single grid generator, respecting the kill columns."""
    if k < 0 and i in kill:
        return _ZERO
    return Polynomial.from_generator(gen_h(k, i))


def s_poly(lam: IntTuple, kill: frozenset[int] = frozenset()) -> Polynomial:
    """rowdet((h[lam_i + j - i, i])) over the first len(lam) columns."""
    m = len(lam)
    matrix = SquareMatrix.from_function(
        m,
        lambda i, j: Polynomial.from_generator(gen_h(lam[i - 1] + j - i, i)),
        Kind.WORD,
    )
    return kill_negative(rowdet(matrix), kill)


def e_block(p: int, q: int, kill: frozenset[int] = frozenset()) -> Polynomial:
    """rowdet((h[1 + j - i, q + i])) over p rows; the unit when p = 0."""
    matrix = SquareMatrix.from_function(
        p,
        lambda i, j: Polynomial.from_generator(gen_h(1 + j - i, q + i)),
        Kind.WORD,
    )
    return kill_negative(rowdet(matrix), kill)


def _sum_t(ctx: PieriContext, betas: Iterable[IntTuple]) -> Polynomial:
    total = _ZERO
    for beta in betas:
        total = total + t_alpha(_shifted(ctx, beta))
    return total


def _sum_s(mu: IntTuple, betas: Iterable[IntTuple], kill: frozenset[int]) -> Polynomial:
    total = _ZERO
    for beta in betas:
        total = total + s_poly(tuple_add(mu, beta), kill)
    return total


def cor_h_sides(ctx: PieriContext, mode: str = "alpha") -> tuple[Polynomial, Polynomial]:
    """Sides of the factorized first-rule corollary.

    ``mode="alpha"``: ctx.alpha is the base tuple; requires alpha_n <= -n
    and the kill set to contain column n.  Returns (composition sum,
    leading-minor rowdet times the single surviving entry).

    ``mode="mu"``: ctx.alpha is read as mu with mu_n = 0.  Returns
    (s_mubar * h[p,n], sum of s_{mu+beta}); internally this is the same
    matrix identity under the reindexing alpha_i = mu_i - i.
    """
    n, p, kill = ctx.n, ctx.p, ctx.negative_kill
    if n not in kill:
        raise ValueError("corollary needs column n in negative_kill")
    if mode == "alpha":
        alpha = ctx.alpha
        if alpha[-1] > -n:
            raise ValueError(f"corollary needs alpha_n <= -{n}, got {alpha[-1]}")
        lhs = _sum_t(ctx, weak_compositions(n, p))
        minor = SquareMatrix.from_function(
            n - 1,
            lambda i, j: Polynomial.from_generator(gen_h(alpha[i - 1] + j, i)),
            Kind.WORD,
        )
        rhs = kill_negative(rowdet(minor), kill) * h_entry(alpha[-1] + n + p, n, kill)
        return lhs, rhs
    if mode == "mu":
        mu = ctx.alpha
        if mu[-1] != 0:
            raise ValueError(f"mu-form needs mu_n = 0, got {mu[-1]}")
        lhs = s_poly(mu[:-1], kill) * h_entry(p, n, kill)
        rhs = _sum_s(mu, weak_compositions(n, p), kill)
        return lhs, rhs
    raise ValueError(f"unknown mode {mode!r}")


def cor_e_sides(ctx: PieriContext, mode: str = "alpha") -> tuple[Polynomial, Polynomial]:
    """Sides of the block-factorized second-rule corollary (q = n - p).

    ``mode="alpha"``: requires alpha_i < -q for i > q.  Returns
    (composition sum, q-block rowdet times p-block rowdet).

    ``mode="mu"``: ctx.alpha is read as mu with mu_i = 0 for i > q.
    Returns (s_mubar * e_block, sum of s_{mu+beta}) with mubar the first
    q entries.

    Both forms need the kill set to cover columns q+1 .. n.
    """
    n, p, kill = ctx.n, ctx.p, ctx.negative_kill
    if not 0 <= p <= n:
        raise ValueError(f"corollary needs p in 0..{n}, got {p}")
    q = n - p
    missing = set(range(q + 1, n + 1)) - kill
    if missing:
        raise ValueError(f"corollary needs columns {sorted(missing)} in negative_kill")
    if mode == "alpha":
        alpha = ctx.alpha
        bad = [i for i in range(q + 1, n + 1) if alpha[i - 1] >= -q]
        if bad:
            raise ValueError(f"corollary needs alpha_i < -{q} for i in {bad}")
        lhs = _sum_t(ctx, binary_compositions(n, p))
        top = SquareMatrix.from_function(
            q,
            lambda i, j: Polynomial.from_generator(gen_h(alpha[i - 1] + j, i)),
            Kind.WORD,
        )
        bottom = SquareMatrix.from_function(
            p,
            lambda i, j: Polynomial.from_generator(gen_h(alpha[q + i - 1] + q + j + 1, q + i)),
            Kind.WORD,
        )
        rhs = kill_negative(rowdet(top), kill) * kill_negative(rowdet(bottom), kill)
        return lhs, rhs
    if mode == "mu":
        mu = ctx.alpha
        bad = [i for i in range(q + 1, n + 1) if mu[i - 1] != 0]
        if bad:
            raise ValueError(f"mu-form needs mu_i = 0 for i in {bad}")
        lhs = s_poly(mu[:q], kill) * e_block(p, q, kill)
        rhs = _sum_s(mu, binary_compositions(n, p), kill)
        return lhs, rhs
    raise ValueError(f"unknown mode {mode!r}")


def verify_cor_h(ctx: PieriContext, mode: str = "alpha") -> bool:
    lhs, rhs = cor_h_sides(ctx, mode)
    return lhs == rhs


def verify_cor_e(ctx: PieriContext, mode: str = "alpha") -> bool:
    lhs, rhs = cor_e_sides(ctx, mode)
    return lhs == rhs
