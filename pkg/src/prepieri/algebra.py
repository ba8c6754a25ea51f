"""Exact polynomial arithmetic over the integers.

Two ring flavours share one representation:

* ``Kind.WORD`` — the free (noncommutative) ring on indexed generators.
  A monomial is an ordered tuple of generators; multiplication
  concatenates.
* ``Kind.EXPONENT`` — the commutative polynomial ring.  A monomial is a
  sorted tuple of ``(generator, exponent)`` pairs with positive
  exponents; multiplication adds exponents.

Coefficients are Python ints, so all arithmetic is exact at any size.
Polynomials are immutable values: every operation returns a fresh
``Polynomial`` whose term map contains no zero coefficients.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Union


class Kind(Enum):
    WORD = "word"
    EXPONENT = "exponent"


class IncompatibleRingError(ValueError):
    """Raised when operands or substitution images mix ring kinds."""


class Generator(NamedTuple):
    """An indexed symbol from one of the five generator families.

    ``family`` is a short tag; ``indices`` carries one or two integers
    depending on the family.  Tuple ordering on ``(family, indices)``
    doubles as the canonical generator order.
    """

    family: str
    indices: tuple[int, ...]

    def render(self) -> str:
        letter = _FAMILY_LETTER[self.family]
        return f"{letter}[{','.join(str(i) for i in self.indices)}]"


# family tag -> (index arity, rendered letter, second index must be >= 1)
_FAMILY_INFO = {
    "H": (1, "H", False),   # NSym generators H_k
    "X2": (2, "X", True),   # free variables X_{k,i} on a column grid
    "g2": (2, "g", False),  # doubly indexed grid g_{k,j}, j unrestricted
    "h2": (2, "h", True),   # grid h_{k,i} on columns i >= 1
    "lam": (1, "h", False),  # commutative h_k
}
_FAMILY_LETTER = {fam: info[1] for fam, info in _FAMILY_INFO.items()}


def _make(family: str, indices: tuple[int, ...]) -> Generator:
    arity, _, column = _FAMILY_INFO[family]
    if len(indices) != arity:
        raise ValueError(f"family {family!r} takes {arity} indices, got {indices!r}")
    if column and indices[1] < 1:
        raise ValueError(f"column index must be >= 1 in {family!r}, got {indices!r}")
    return Generator(family, indices)


def gen_h(k: int, i: int) -> Generator:
    """The grid generator h[k,i] (any k, column i >= 1)."""
    return _make("h2", (k, i))


def gen_X(k: int, i: int) -> Generator:
    """The free variable X[k,i] (any k, column i >= 1)."""
    return _make("X2", (k, i))


def gen_H(k: int) -> Generator:
    """The singly indexed generator H[k] (any k; reductions live elsewhere)."""
    return _make("H", (k,))


def gen_g(k: int, j: int) -> Generator:
    """The doubly indexed generator g[k,j]; both indices unrestricted."""
    return _make("g2", (k, j))


def gen_lam(k: int) -> Generator:
    """The commutative generator h[k] (k >= 1 in canonical use)."""
    return _make("lam", (k,))


# A monomial key: a word (tuple of generators) or a sorted exponent map
# (tuple of (generator, positive exponent) pairs).
MonomialKey = tuple
ImageMap = Union[Mapping[Generator, "Polynomial"], Callable[[Generator], "Polynomial | None"]]


def _merge_exponents(a: MonomialKey, b: MonomialKey) -> MonomialKey:
    """Merge two sorted exponent keys, adding exponents of shared generators."""
    out: list[tuple[Generator, int]] = []
    ia, ib = 0, 0
    while ia < len(a) and ib < len(b):
        ga, ea = a[ia]
        gb, eb = b[ib]
        if ga == gb:
            out.append((ga, ea + eb))
            ia += 1
            ib += 1
        elif ga < gb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def monomial_degree(kind: Kind, key: MonomialKey) -> int:
    if kind is Kind.WORD:
        return len(key)
    return sum(e for _, e in key)


def monomial_sort_key(kind: Kind, key: MonomialKey):
    """Length-then-lex order on words; degree-then-lex on exponent maps."""
    return (monomial_degree(kind, key), key)


def render_monomial(kind: Kind, key: MonomialKey) -> str:
    if not key:
        return "1"
    if kind is Kind.WORD:
        return "*".join(g.render() for g in key)
    parts = []
    for g, e in key:
        parts.append(g.render() if e == 1 else f"{g.render()}^{e}")
    return "*".join(parts)


class Polynomial:
    """An immutable sparse polynomial with integer coefficients."""

    __slots__ = ("kind", "terms")

    def __init__(self, kind: Kind, terms: Mapping[MonomialKey, int] | None = None):
        self.kind = kind
        if terms:
            self.terms = {key: c for key, c in terms.items() if c}
        else:
            self.terms = {}

    @classmethod
    def _raw(cls, kind: Kind, terms: dict[MonomialKey, int]) -> "Polynomial":
        # internal fast path: terms already canonical (no zero coefficients)
        poly = object.__new__(cls)
        poly.kind = kind
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, kind: Kind) -> "Polynomial":
        return cls._raw(kind, {})

    @classmethod
    def one(cls, kind: Kind) -> "Polynomial":
        return cls._raw(kind, {(): 1})

    @classmethod
    def from_generator(cls, g: Generator, kind: Kind = Kind.WORD) -> "Polynomial":
        key = (g,) if kind is Kind.WORD else ((g, 1),)
        return cls._raw(kind, {key: 1})

    @classmethod
    def from_terms(cls, kind: Kind, items: Iterable[tuple[MonomialKey, int]]) -> "Polynomial":
        """Canonicalize an iterable of (monomial key, coefficient) pairs."""
        acc: dict[MonomialKey, int] = {}
        for key, c in items:
            c = acc.get(key, 0) + c
            if c:
                acc[key] = c
            else:
                acc.pop(key, None)
        return cls._raw(kind, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[tuple[MonomialKey, int]]:
        return iter(self.terms.items())

    def coefficient(self, key: MonomialKey) -> int:
        return self.terms.get(key, 0)

    def _check_kind(self, other: "Polynomial") -> None:
        if self.kind is not other.kind:
            raise IncompatibleRingError(
                f"cannot combine {self.kind.value} and {other.kind.value} polynomials"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.kind is other.kind and self.terms == other.terms

    __hash__ = None  # mutable dict inside; equality-only value

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_kind(other)
        acc = dict(self.terms)
        for key, c in other.terms.items():
            c = acc.get(key, 0) + c
            if c:
                acc[key] = c
            else:
                del acc[key]
        return Polynomial._raw(self.kind, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_kind(other)
        acc = dict(self.terms)
        for key, c in other.terms.items():
            c = acc.get(key, 0) - c
            if c:
                acc[key] = c
            else:
                del acc[key]
        return Polynomial._raw(self.kind, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.kind, {key: -c for key, c in self.terms.items()})

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.kind)
            return Polynomial._raw(self.kind, {key: c * other for key, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_kind(other)
        acc: dict[MonomialKey, int] = {}
        if self.kind is Kind.WORD:
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    key = ka + kb  # factors of self precede factors of other
                    c = acc.get(key, 0) + ca * cb
                    if c:
                        acc[key] = c
                    else:
                        del acc[key]
        else:
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    key = _merge_exponents(ka, kb)
                    c = acc.get(key, 0) + ca * cb
                    if c:
                        acc[key] = c
                    else:
                        del acc[key]
        return Polynomial._raw(self.kind, acc)

    def __rmul__(self, other: int) -> "Polynomial":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not defined here")
        result = Polynomial.one(self.kind)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute(self, image: ImageMap, kind: Kind | None = None) -> "Polynomial":
        """Apply the ring homomorphism extending ``image`` to generators.

        ``image`` maps generators to polynomials of the output kind; a
        missing image (``None`` / absent key) keeps the generator.  Word
        order is preserved.  Passing ``kind=Kind.EXPONENT`` on a word
        polynomial composes with the canonical map onto the commutative
        ring; the reverse direction is rejected.
        """
        out_kind = kind if kind is not None else self.kind
        if self.kind is Kind.EXPONENT and out_kind is Kind.WORD:
            raise IncompatibleRingError("no canonical map from exponent kind to word kind")
        lookup = image.get if isinstance(image, Mapping) else image

        if self.kind is Kind.WORD:
            support = {g for key in self.terms for g in key}
        else:
            support = {g for key in self.terms for g, _ in key}
        images = {g: lookup(g) for g in support}
        if out_kind is self.kind and all(poly is None for poly in images.values()):
            return self  # the identity extension fixes this polynomial

        def resolve(g: Generator) -> Polynomial:
            poly = images[g]
            if poly is None:
                poly = Polynomial.from_generator(g, out_kind)
                images[g] = poly
            elif poly.kind is not out_kind:
                raise IncompatibleRingError(
                    f"image of {g.render()} has kind {poly.kind.value}, expected {out_kind.value}"
                )
            return poly

        total = Polynomial.zero(out_kind)
        for key, c in self.terms.items():
            term = Polynomial.one(out_kind)
            if self.kind is Kind.WORD:
                for g in key:
                    term = term * resolve(g)
                    if term.is_zero():
                        break
            else:
                for g, e in key:
                    term = term * resolve(g) ** e
                    if term.is_zero():
                        break
            total = total + term * c
        return total

    def to_commutative(self) -> "Polynomial":
        """Image under the canonical map onto the commutative ring."""
        if self.kind is Kind.EXPONENT:
            return self
        return self.substitute(lambda g: None, kind=Kind.EXPONENT)

    def sorted_terms(self) -> list[tuple[MonomialKey, int]]:
        kind = self.kind
        return sorted(self.terms.items(), key=lambda item: monomial_sort_key(kind, item[0]))

    def render(self) -> str:
        """Signed sum of coefficient*monomial in canonical order."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for key, c in self.sorted_terms():
            mono = render_monomial(self.kind, key)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<{self.kind.value} {self.render()}>"


def first_difference(p: Polynomial, q: Polynomial) -> tuple[str, int, int] | None:
    """First monomial (canonical order) on which two polynomials disagree.

    Returns ``(rendered monomial, coefficient in p, coefficient in q)``
    or ``None`` when the polynomials are equal.
    """
    if p.kind is not q.kind:
        raise IncompatibleRingError("cannot compare polynomials of different kinds")
    keys = set(p.terms) | set(q.terms)
    for key in sorted(keys, key=lambda k: monomial_sort_key(p.kind, k)):
        cp, cq = p.terms.get(key, 0), q.terms.get(key, 0)
        if cp != cq:
            return render_monomial(p.kind, key), cp, cq
    return None
