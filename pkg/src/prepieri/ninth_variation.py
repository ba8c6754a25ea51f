"""Schur-like determinants on a doubly indexed commutative grid g[k,j].

``s_mu_beta`` expands det((g_{mu_i + j - i, beta_i + j - i})) in the
commutative ring, with g[k,j] = 0 for all k < 0 applied as a substitution
pass.  ``verify_fun_rule`` checks the multiplication rule for g[p,q]
against such a determinant, and ``fun_rule_sides_via_h`` recomputes both
sides through the factorized first-rule corollary under the grid
assignment h[k,i] -> g[k, beta'_i - mu_i + k].
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Generator, Kind, Polynomial, gen_g
from .combinatorics import IntTuple, tuple_add, weak_compositions
from .rowdet import SquareMatrix, rowdet
from .rules import PieriContext, cor_h_sides

_ZERO = Polynomial.zero(Kind.EXPONENT)


@dataclass(frozen=True)
class NinthContext:
    """Parameters: grid weight (p, q), an (ell+1)-tuple mu ending in 0,
    and an ell-tuple beta of column offsets."""

    ell: int
    p: int
    q: int
    mu: IntTuple
    beta: IntTuple

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(self.mu))
        object.__setattr__(self, "beta", tuple(self.beta))
        if self.ell < 0:
            raise ValueError("ell must be nonnegative")
        if len(self.mu) != self.ell + 1:
            raise ValueError(f"mu must have length {self.ell + 1}, got {self.mu!r}")
        if self.mu[-1] != 0:
            raise ValueError(f"mu must end in 0, got {self.mu!r}")
        if len(self.beta) != self.ell:
            raise ValueError(f"beta must have length {self.ell}, got {self.beta!r}")

    @property
    def beta_prime(self) -> IntTuple:
        return self.beta + (self.q - self.p,)


def kill_negative_g(poly: Polynomial) -> Polynomial:
    """Send g[k,j] to 0 for every k < 0."""

    def image(g: Generator) -> Polynomial | None:
        if g.family == "g2" and g.indices[0] < 0:
            return _ZERO
        return None

    return poly.substitute(image)


def g_poly(k: int, j: int) -> Polynomial:
    """A single killed grid entry: 0 when k < 0."""
    if k < 0:
        return _ZERO
    return Polynomial.from_generator(gen_g(k, j), Kind.EXPONENT)


def s_mu_beta(mu: IntTuple, beta: IntTuple) -> Polynomial:
    """det((g_{mu_i + j - i, beta_i + j - i})), killed after expansion."""
    if len(mu) != len(beta):
        raise ValueError(f"length mismatch: {mu!r} vs {beta!r}")
    m = len(mu)
    matrix = SquareMatrix.from_function(
        m,
        lambda i, j: Polynomial.from_generator(
            gen_g(mu[i - 1] + j - i, beta[i - 1] + j - i), Kind.EXPONENT
        ),
        Kind.EXPONENT,
    )
    return kill_negative_g(rowdet(matrix))


def fun_rule_sides(ctx: NinthContext) -> tuple[Polynomial, Polynomial]:
    """(g[p,q] * s_{mubar, beta}, sum over delta of s_{mu+delta, beta'+delta}).

    A negative p leaves the sum empty and kills g[p,q], so the identity
    degenerates to 0 = 0.
    """
    lhs = g_poly(ctx.p, ctx.q) * s_mu_beta(ctx.mu[:-1], ctx.beta)
    rhs = _ZERO
    beta_prime = ctx.beta_prime
    for delta in weak_compositions(ctx.ell + 1, ctx.p):
        rhs = rhs + s_mu_beta(tuple_add(ctx.mu, delta), tuple_add(beta_prime, delta))
    return lhs, rhs


def verify_fun_rule(ctx: NinthContext) -> bool:
    lhs, rhs = fun_rule_sides(ctx)
    return lhs == rhs


def fun_rule_sides_via_h(ctx: NinthContext) -> tuple[Polynomial, Polynomial]:
    """Both sides recomputed through the h-grid corollary.

    The mu-form corollary sides are expanded in the free h-ring (killing
    column n = ell + 1), then pushed into the commutative g-ring by
    h[k,i] -> g[k, beta'_i - mu_i + k].
    """
    n = ctx.ell + 1
    beta_prime = ctx.beta_prime

    def image(g: Generator) -> Polynomial | None:
        if g.family != "h2":
            return None
        k, i = g.indices
        return g_poly(k, beta_prime[i - 1] - ctx.mu[i - 1] + k)

    pieri_ctx = PieriContext(n, ctx.p, ctx.mu, frozenset({n}))
    lhs_h, rhs_h = cor_h_sides(pieri_ctx, mode="mu")
    return lhs_h.substitute(image, Kind.EXPONENT), rhs_h.substitute(image, Kind.EXPONENT)
