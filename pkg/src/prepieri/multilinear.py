"""Multilinear elements of the free X-ring and their antisymmetric calculus.

A multilinear element of size n is supported on words of the exact shape
X[p_1,1] X[p_2,2] ... X[p_n,n].  The symmetric group acts on the right by
permuting the first-index tuple p; an element is antisymmetric when every
permutation acts by its sign.  Every antisymmetric element decomposes
uniquely as an integer combination of the basis row-determinants
rowdet((X[gamma_j, i])) indexed by strictly increasing gamma, and that
normal form is what ``decompose`` extracts.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .algebra import Generator, Kind, Polynomial, gen_X, gen_h
from .combinatorics import (
    IntTuple,
    Permutation,
    act,
    adjacent_transpositions,
    permutations,
)
from .rowdet import SquareMatrix, rowdet


class NotMultilinearError(ValueError):
    """The polynomial is not supported on size-n multilinear words."""


class NotAntisymmetricError(ValueError):
    """The element fails the sign rule under some transposition."""


class OrbitClosureError(ValueError):
    """A tuple set is not closed under the right action; carries a witness."""

    def __init__(self, beta: IntTuple, sigma: Permutation):
        self.beta = beta
        self.sigma = sigma
        super().__init__(f"set is not action-closed: {beta} maps out under {sigma!r}")


class MultilinearElement:
    """A word polynomial whose every word reads the columns 1..n in order."""

    __slots__ = ("n", "poly")

    def __init__(self, n: int, poly: Polynomial):
        if poly.kind is not Kind.WORD:
            raise NotMultilinearError("multilinear elements live in the word ring")
        for word in poly.terms:
            if len(word) != n:
                raise NotMultilinearError(f"word of length {len(word)}, expected {n}")
            for col, g in enumerate(word, start=1):
                if g.family != "X2" or g.indices[1] != col:
                    raise NotMultilinearError(f"bad factor {g.render()} in column {col}")
        self.n = n
        self.poly = poly

    @classmethod
    def zero(cls, n: int) -> "MultilinearElement":
        return cls(n, Polynomial.zero(Kind.WORD))

    def row_tuples(self) -> dict[IntTuple, int]:
        """The first-index tuples of the support, with coefficients."""
        return {tuple(g.indices[0] for g in word): c for word, c in self.poly.terms.items()}

    def __add__(self, other: "MultilinearElement") -> "MultilinearElement":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return MultilinearElement(self.n, self.poly + other.poly)

    def __sub__(self, other: "MultilinearElement") -> "MultilinearElement":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return MultilinearElement(self.n, self.poly - other.poly)

    def __rmul__(self, scalar: int) -> "MultilinearElement":
        return MultilinearElement(self.n, self.poly * scalar)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultilinearElement):
            return NotImplemented
        return self.n == other.n and self.poly == other.poly

    __hash__ = None

    def __repr__(self) -> str:
        return f"<multilinear n={self.n} {self.poly.render()}>"


def _word(p: IntTuple) -> tuple[Generator, ...]:
    return tuple(gen_X(k, i) for i, k in enumerate(p, start=1))


def from_tuples(n: int, coeffs: Mapping[IntTuple, int]) -> MultilinearElement:
    """Build an element from first-index tuples and coefficients."""
    poly = Polynomial.from_terms(Kind.WORD, ((_word(p), c) for p, c in coeffs.items()))
    return MultilinearElement(n, poly)


def t_multilinear(alpha: Sequence[int]) -> MultilinearElement:
    """T_alpha = rowdet((X[alpha_i + j, i]))."""
    alpha = tuple(alpha)
    n = len(alpha)
    matrix = SquareMatrix.from_function(
        n,
        lambda i, j: Polynomial.from_generator(gen_X(alpha[i - 1] + j, i)),
        Kind.WORD,
    )
    return MultilinearElement(n, rowdet(matrix))


def basis_det(gamma: Sequence[int]) -> MultilinearElement:
    """rowdet((X[gamma_j, i])): the j-th column holds X[gamma_j, .]."""
    gamma = tuple(gamma)
    n = len(gamma)
    matrix = SquareMatrix.from_function(
        n,
        lambda i, j: Polynomial.from_generator(gen_X(gamma[j - 1], i)),
        Kind.WORD,
    )
    return MultilinearElement(n, rowdet(matrix))


def act_multilinear(m: MultilinearElement, tau: Permutation) -> MultilinearElement:
    """Right action: each word's first-index tuple p becomes p permuted by tau."""
    if tau.n != m.n:
        raise ValueError("permutation size mismatch")
    terms = {}
    for word, c in m.poly.terms.items():
        p = tuple(g.indices[0] for g in word)
        key = _word(act(p, tau))
        terms[key] = terms.get(key, 0) + c
    return MultilinearElement(m.n, Polynomial.from_terms(Kind.WORD, terms.items()))


def is_antisymmetric(m: MultilinearElement, full: bool = False) -> bool:
    """Whether every permutation acts by its sign.

    Checking the adjacent transpositions suffices since they generate the
    group; ``full=True`` checks the whole group anyway (slow mode).
    """
    taus = permutations(m.n) if full else adjacent_transpositions(m.n)
    for tau in taus:
        if act_multilinear(m, tau).poly != m.poly * tau.sign:
            return False
    return True


def t_set(tuples: Iterable[IntTuple], n: int) -> MultilinearElement:
    """T_B: the sum of T_beta over an action-closed set B of n-tuples.

    Closure is checked on the adjacent transpositions; a violation is
    rejected with a witness pair (beta, sigma).
    """
    B = set()
    for beta in tuples:
        beta = tuple(beta)
        if len(beta) != n:
            raise ValueError(f"tuple {beta!r} does not have length {n}")
        B.add(beta)
    for beta in sorted(B):
        for sigma in adjacent_transpositions(n):
            if act(beta, sigma) not in B:
                raise OrbitClosureError(beta, sigma)
    total = MultilinearElement.zero(n)
    for beta in sorted(B):
        total = total + t_multilinear(beta)
    return total


def orbit(beta: Sequence[int]) -> set[IntTuple]:
    """The full right orbit of a tuple."""
    beta = tuple(beta)
    return {act(beta, sigma) for sigma in permutations(len(beta))}


def decompose(m: MultilinearElement) -> dict[IntTuple, int]:
    """Coefficients of an antisymmetric element on the increasing basis.

    The coefficient of rowdet((X[gamma_j, i])) is read off the word whose
    first-index tuple is gamma itself (strictly increasing), since that
    word occurs in no other basis determinant.
    """
    if not is_antisymmetric(m):
        raise NotAntisymmetricError("element is not antisymmetric")
    coeffs = {}
    for p, c in m.row_tuples().items():
        if all(a < b for a, b in zip(p, p[1:])):
            coeffs[p] = c
    return coeffs


def reconstruct(coeffs: Mapping[IntTuple, int], n: int) -> MultilinearElement:
    """Assemble sum of coefficient * basis determinant."""
    total = MultilinearElement.zero(n)
    for gamma, c in coeffs.items():
        total = total + c * basis_det(gamma)
    return total


def verify_decomposition(m: MultilinearElement, alpha: Sequence[int] | None = None) -> bool:
    """Round-trip check, optionally pushed into the h-grid ring.

    Reconstructs from ``decompose`` and compares; when ``alpha`` is given,
    also applies X[k,i] -> h[alpha_i + k, i] to both sides and compares
    the images.
    """
    rebuilt = reconstruct(decompose(m), m.n)
    if rebuilt != m:
        return False
    if alpha is None:
        return True
    alpha = tuple(alpha)
    if len(alpha) != m.n:
        raise ValueError("alpha must have length n")

    def image(g: Generator) -> Polynomial | None:
        if g.family != "X2":
            return None
        k, i = g.indices
        return Polynomial.from_generator(gen_h(alpha[i - 1] + k, i))

    return m.poly.substitute(image) == rebuilt.poly.substitute(image)
