"""Permutations, integer tuples, composition streams and Iverson determinants.

Permutations of [n] = {1, ..., n} are stored in one-line notation with
their sign (computed by inversion counting; n stays small here).  Integer
tuples are plain Python tuples; the right action ``act(eta, sigma)``
permutes entries by ``sigma``.  Composition streams are emitted in
descending lexicographic order so that expansion output is reproducible.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

IntTuple = tuple[int, ...]


def inversion_count(images: Sequence[int]) -> int:
    n = len(images)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if images[a] > images[b]
    )


class Permutation:
    """A bijection of [n] with cached inversion-count length and sign."""

    __slots__ = ("images", "length", "sign")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a bijection of [{len(imgs)}]: {imgs!r}")
        self.images = imgs
        self.length = inversion_count(imgs)
        self.sign = -1 if self.length % 2 else 1

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        imgs[a - 1], imgs[b - 1] = imgs[b - 1], imgs[a - 1]
        return cls(imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self . other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self.images[other.images[i - 1] - 1] for i in range(1, self.n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({','.join(str(i) for i in self.images)})"


def permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for imgs in itertools.permutations(range(1, n + 1)):
        yield Permutation(imgs)


def adjacent_transpositions(n: int) -> list[Permutation]:
    """The Coxeter generators (i, i+1) of S_n."""
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Cached ``(sign, zero-based images)`` pairs for all of S_n."""
    out = []
    for imgs in itertools.permutations(range(n)):
        sign = -1 if inversion_count(imgs) % 2 else 1
        out.append((sign, imgs))
    return tuple(out)


def tuple_add(a: IntTuple, b: IntTuple) -> IntTuple:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def tuple_sub(a: IntTuple, b: IntTuple) -> IntTuple:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def tuple_abs(a: IntTuple) -> int:
    """Entry sum of a tuple (additive in each argument)."""
    return sum(a)


def act(eta: IntTuple, sigma: Permutation) -> IntTuple:
    """Right action: entry j of the result is eta[sigma(j)]."""
    if len(eta) != sigma.n:
        raise ValueError(f"length mismatch: tuple {len(eta)}, permutation {sigma.n}")
    return tuple(eta[img - 1] for img in sigma.images)


def weak_compositions(n: int, p: int) -> Iterator[IntTuple]:
    """All tuples in N^n with entry sum p, in descending lexicographic order.

    Empty stream when p < 0 (the sum over them is then empty).
    """
    if p < 0:
        return
    if n == 0:
        if p == 0:
            yield ()
        return
    if n == 1:
        yield (p,)
        return
    for first in range(p, -1, -1):
        for rest in weak_compositions(n - 1, p - first):
            yield (first,) + rest


def binary_compositions(n: int, p: int) -> Iterator[IntTuple]:
    """All tuples in {0,1}^n with entry sum p, in descending lexicographic order."""
    if p < 0 or p > n:
        return
    if n == 0:
        yield ()
        return
    if p > 0:
        for rest in binary_compositions(n - 1, p - 1):
            yield (1,) + rest
    if p < n:
        for rest in binary_compositions(n - 1, p):
            yield (0,) + rest


def eta_tuple(n: int, p: int) -> IntTuple:
    """The column-offset tuple (1, 2, ..., n-1, n+p)."""
    if n < 1:
        raise ValueError("n must be positive")
    if p < 0:
        raise ValueError("p must be nonnegative")
    return tuple(range(1, n)) + (n + p,)


def xi_tuple(n: int, p: int) -> IntTuple:
    """The column-offset tuple (1, ..., n-p, n-p+2, ..., n+1)."""
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got {p}")
    return tuple(range(1, n - p + 1)) + tuple(range(n - p + 2, n + 2))


def covers(u: int, v: int) -> bool:
    """The relation u - v in {0, 1}."""
    return u - v in (0, 1)


def _int_det(n: int, entry) -> int:
    """Signed permutation expansion of an integer matrix given entrywise."""
    total = 0
    for sign, imgs in signed_permutations(n):
        prod = 1
        for i in range(n):
            prod *= entry(i, imgs[i])
            if prod == 0:
                break
        total += sign * prod
    return total


def iverson_geq_det(nu: IntTuple) -> int:
    """Determinant of the 0/1 matrix with (i,j) entry [nu_i >= j]."""
    n = len(nu)
    return _int_det(n, lambda i, j: 1 if nu[i] >= j + 1 else 0)


def cover_det(nu: IntTuple) -> int:
    """Determinant of the 0/1 matrix with (i,j) entry [nu_i - j in {0,1}]."""
    n = len(nu)
    return _int_det(n, lambda i, j: 1 if covers(nu[i], j + 1) else 0)


def signed_match_sum(nu: IntTuple, target: IntTuple) -> int:
    """Sum of signs over all sigma with nu equal to target permuted by sigma."""
    if len(nu) != len(target):
        raise ValueError("length mismatch")
    total = 0
    for sign, imgs in signed_permutations(len(nu)):
        if all(target[img] == entry for img, entry in zip(imgs, nu)):
            total += sign
    return total


def oplus(alpha: Permutation, beta: Permutation) -> Permutation:
    """The block permutation with images (alpha(1..k), k+beta(1..n-k)).

    Its sign is the product of the blocks' signs, and this map is a
    bijection onto the permutations fixing {1, ..., k} setwise.
    """
    k = alpha.n
    return Permutation(alpha.images + tuple(k + img for img in beta.images))
