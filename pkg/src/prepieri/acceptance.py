"""The full verification matrix behind the package's acceptance gate.

Each criterion is a function ``seed -> (passed, detail)`` running an
exact-equality sweep at its stated parameter ranges.  The CLI ``sweep``
command and the acceptance test module both execute this matrix.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .algebra import Kind, Polynomial, gen_h
from .combinatorics import (
    IntTuple,
    Permutation,
    act,
    binary_compositions,
    cover_det,
    covers,
    eta_tuple,
    iverson_geq_det,
    oplus,
    permutations,
    signed_match_sum,
    signed_permutations,
    tuple_abs,
    weak_compositions,
    xi_tuple,
)
from .multilinear import decompose, reconstruct, t_set, verify_decomposition
from .ninth_variation import NinthContext, fun_rule_sides, fun_rule_sides_via_h, verify_fun_rule
from .nsym import h_word, immaculate, verify_right_pieri
from .rowdet import SquareMatrix, rowdet
from .rules import (
    PieriContext,
    cor_e_sides,
    cor_h_sides,
    first_rule_sides,
    second_rule_sides,
    verify_first,
    verify_second,
)
from .schur import (
    alt_pieri_addends,
    alt_pieri_equiv,
    e_poly,
    h_poly,
    horizontal_strips,
    jacobi_trudi,
    vertical_strips,
)

ALPHA_RANGE = (-3, 3)
ALPHA_SAMPLES = 50


def sample_alphas(rng: random.Random, n: int, count: int = ALPHA_SAMPLES) -> list[IntTuple]:
    low, high = ALPHA_RANGE
    return [tuple(rng.randint(low, high) for _ in range(n)) for _ in range(count)]


def _criterion_first_rule(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    start = time.perf_counter()
    cases = 0
    for n in range(1, 5):
        for p in range(0, 5):
            for alpha in [(0,) * n] + sample_alphas(rng, n):
                cases += 1
                if not verify_first(PieriContext(n, p, alpha)):
                    return False, f"first rule fails at n={n} p={p} alpha={alpha}"
    elapsed = time.perf_counter() - start
    if elapsed >= 30.0:
        return False, f"{cases} cases verified but took {elapsed:.1f}s (budget 30s)"
    return True, f"{cases} cases, {elapsed:.1f}s"


def _criterion_second_rule(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    start = time.perf_counter()
    cases = 0
    for n in range(1, 5):
        for p in range(0, n + 1):
            for alpha in [(0,) * n] + sample_alphas(rng, n):
                cases += 1
                if not verify_second(PieriContext(n, p, alpha)):
                    return False, f"second rule fails at n={n} p={p} alpha={alpha}"
    elapsed = time.perf_counter() - start
    if elapsed >= 30.0:
        return False, f"{cases} cases verified but took {elapsed:.1f}s (budget 30s)"
    return True, f"{cases} cases, {elapsed:.1f}s"


def _h_matrix_shifts(alpha: IntTuple, shifts: list[list[int]]) -> Polynomial:
    n = len(shifts)
    matrix = SquareMatrix.from_function(
        n,
        lambda i, j: Polynomial.from_generator(gen_h(alpha[i - 1] + shifts[i - 1][j - 1], i)),
        Kind.WORD,
    )
    return rowdet(matrix)


def _criterion_worked_examples(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    checked = 0
    for alpha2 in [(0, 0), tuple(rng.randint(-3, 3) for _ in range(2))]:
        # first rule, n=2, p=2: three displayed addends against eta = (1,4)
        addends = [
            _h_matrix_shifts(alpha2, [[3, 4], [1, 2]]),
            _h_matrix_shifts(alpha2, [[2, 3], [2, 3]]),
            _h_matrix_shifts(alpha2, [[1, 2], [3, 4]]),
        ]
        displayed = addends[0] + addends[1] + addends[2]
        target = _h_matrix_shifts(alpha2, [[1, 4], [1, 4]])
        lhs, rhs = first_rule_sides(PieriContext(2, 2, alpha2))
        if not (displayed == target == lhs == rhs):
            return False, f"first-rule display mismatch at alpha={alpha2}"
        checked += 1
    for alpha3 in [(0, 0, 0), tuple(rng.randint(-3, 3) for _ in range(3))]:
        # second rule, n=3, p=2: three displayed addends against xi = (1,3,4)
        addends = [
            _h_matrix_shifts(alpha3, [[2, 3, 4], [2, 3, 4], [1, 2, 3]]),
            _h_matrix_shifts(alpha3, [[2, 3, 4], [1, 2, 3], [2, 3, 4]]),
            _h_matrix_shifts(alpha3, [[1, 2, 3], [2, 3, 4], [2, 3, 4]]),
        ]
        displayed = addends[0] + addends[1] + addends[2]
        target = _h_matrix_shifts(alpha3, [[1, 3, 4], [1, 3, 4], [1, 3, 4]])
        lhs, rhs = second_rule_sides(PieriContext(3, 2, alpha3))
        if not (displayed == target == lhs == rhs):
            return False, f"second-rule display mismatch at alpha={alpha3}"
        checked += 1
    return True, f"{checked} displayed identities reproduced term-for-term"


def _criterion_corollaries(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    cases = 0
    for n in range(1, 5):
        kill_n = frozenset({n})
        for p in range(-2, 4):
            for _ in range(3):
                alpha = tuple(rng.randint(-2, 2) for _ in range(n - 1)) + (-n - rng.randint(0, 2),)
                ctx = PieriContext(n, p, alpha, kill_n)
                lhs, rhs = cor_h_sides(ctx, mode="alpha")
                cases += 1
                if lhs != rhs:
                    return False, f"cor-h alpha fails at n={n} p={p} alpha={alpha}"
                if p < 0 and not (lhs.is_zero() and rhs.is_zero()):
                    return False, f"cor-h p<0 must degenerate to 0=0 at n={n} p={p}"
                mu = tuple(rng.randint(-2, 2) for _ in range(n - 1)) + (0,)
                ctx = PieriContext(n, p, mu, kill_n)
                lhs, rhs = cor_h_sides(ctx, mode="mu")
                cases += 1
                if lhs != rhs:
                    return False, f"cor-h mu fails at n={n} p={p} mu={mu}"
        for p in range(0, n + 1):
            q = n - p
            kill = frozenset(range(q + 1, n + 1))
            for _ in range(3):
                alpha = tuple(rng.randint(-2, 2) for _ in range(q)) + tuple(
                    -q - 1 - rng.randint(0, 2) for _ in range(p)
                )
                ctx = PieriContext(n, p, alpha, kill)
                lhs, rhs = cor_e_sides(ctx, mode="alpha")
                cases += 1
                if lhs != rhs:
                    return False, f"cor-e alpha fails at n={n} p={p} alpha={alpha}"
                mu = tuple(rng.randint(-2, 2) for _ in range(q)) + (0,) * p
                ctx = PieriContext(n, p, mu, kill)
                lhs, rhs = cor_e_sides(ctx, mode="mu")
                cases += 1
                if lhs != rhs:
                    return False, f"cor-e mu fails at n={n} p={p} mu={mu}"
    return True, f"{cases} corollary cases"


def _partitions_up_to(weight: int) -> list[tuple[int, ...]]:
    def of_weight(w: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if w == 0:
            yield ()
            return
        for first in range(min(w, max_part), 0, -1):
            for rest in of_weight(w - first, first):
                yield (first,) + rest

    out: list[tuple[int, ...]] = []
    for w in range(weight + 1):
        out.extend(of_weight(w, w))
    return out


def _criterion_schur(seed: int) -> tuple[bool, str]:
    if horizontal_strips((2, 1), 2) != [(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)]:
        return False, "horizontal strips of (2,1) at p=2 are wrong"
    cases = 0
    saw_h_cancellation = False
    for lam in _partitions_up_to(6):
        for p in range(0, 4):
            n = len(lam) + p
            padded = lam + (0,) * (n - len(lam))
            product_h = jacobi_trudi(padded) * h_poly(p)
            strip_sum = Polynomial.zero(Kind.EXPONENT)
            for mu in horizontal_strips(lam, p):
                strip_sum = strip_sum + jacobi_trudi(mu + (0,) * (n - len(mu)))
            if product_h != strip_sum:
                return False, f"h-strip rule fails at lam={lam} p={p}"
            product_e = jacobi_trudi(padded) * e_poly(p)
            strip_sum = Polynomial.zero(Kind.EXPONENT)
            for mu in vertical_strips(lam, p):
                strip_sum = strip_sum + jacobi_trudi(mu + (0,) * (n - len(mu)))
            if product_e != strip_sum:
                return False, f"e-strip rule fails at lam={lam} p={p}"
            if not alt_pieri_equiv(lam, p, "H"):
                return False, f"alternative H rule fails at lam={lam} p={p}"
            if not alt_pieri_equiv(lam, p, "E"):
                return False, f"alternative E rule fails at lam={lam} p={p}"
            for _, result in alt_pieri_addends(lam, p, "E"):
                if not result.is_zero() and result.sign != 1:
                    return False, f"E addend with sign -1 at lam={lam} p={p}"
            if any(
                not result.is_zero() and result.sign == -1
                for _, result in alt_pieri_addends(lam, p, "H")
            ):
                saw_h_cancellation = True
            cases += 1
    if not saw_h_cancellation:
        return False, "no H-kind cancelling pair found in the tested range"
    return True, f"{cases} (lam, p) pairs; E-kind cancellation-free, H-kind cancels"


def _criterion_immaculate(seed: int) -> tuple[bool, str]:
    h1, h2 = h_word((1,)), h_word((2,))
    if immaculate((1,)) * h1 != h2 + (h1 * h1 - h2):
        return False, "the (1)*H_1 split into H_2 + (H_1 H_1 - H_2) fails"
    cases = 0
    for n in range(0, 4):
        for alpha in itertools.product(range(-1, 4), repeat=n):
            for s in range(0, 4):
                cases += 1
                if not verify_right_pieri(alpha, s):
                    return False, f"right rule fails at alpha={alpha} s={s}"
    return True, f"{cases} (alpha, s) cases"


def _criterion_ninth_variation(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    cases = 0
    for ell in range(0, 3):
        for mu_head in itertools.product(range(-1, 4), repeat=ell):
            mu = mu_head + (0,)
            for beta in itertools.product(range(-1, 4), repeat=ell):
                for p in range(-1, 4):
                    for q in range(-2, 4):
                        cases += 1
                        ctx = NinthContext(ell, p, q, mu, beta)
                        if not verify_fun_rule(ctx):
                            return False, f"grid rule fails at {ctx}"
    agreements = 0
    for ell in range(0, 3):
        for _ in range(25):
            mu = tuple(rng.randint(-1, 3) for _ in range(ell)) + (0,)
            beta = tuple(rng.randint(-1, 3) for _ in range(ell))
            p, q = rng.randint(-1, 3), rng.randint(-2, 3)
            ctx = NinthContext(ell, p, q, mu, beta)
            direct = fun_rule_sides(ctx)
            via_h = fun_rule_sides_via_h(ctx)
            if direct != via_h:
                return False, f"reduction path disagrees at {ctx}"
            agreements += 1
    return True, f"{cases} direct cases, {agreements} reduction-path agreements"


def _random_increasing_tuple(rng: random.Random, n: int) -> IntTuple:
    values = rng.sample(range(-2, 6), n)
    return tuple(sorted(values))


def _criterion_pre_lr(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    cases = 0
    for n in range(1, 4):
        for p in range(0, 5):
            element = t_set(set(weak_compositions(n, p)), n)
            cases += 1
            if decompose(element) != {eta_tuple(n, p): 1}:
                return False, f"weak-composition decomposition fails at n={n} p={p}"
        for p in range(0, n + 1):
            element = t_set(set(binary_compositions(n, p)), n)
            cases += 1
            if decompose(element) != {xi_tuple(n, p): 1}:
                return False, f"0/1-composition decomposition fails at n={n} p={p}"
    for n in range(1, 5):
        for _ in range(10):
            coeffs = {}
            for _ in range(rng.randint(1, 4)):
                coeffs[_random_increasing_tuple(rng, n)] = rng.randint(-5, 5) or 1
            element = reconstruct(coeffs, n)
            cases += 1
            alpha = tuple(rng.randint(-2, 2) for _ in range(n))
            if decompose(element) != coeffs or not verify_decomposition(element, alpha):
                return False, f"round trip fails at n={n} coeffs={coeffs}"
    return True, f"{cases} decomposition cases"


def _criterion_lemma_suites(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    checks = 0

    # truth-value shift: [u >= k] = [u >= k+1] whenever u != k
    for u in range(-6, 7):
        for k in range(-6, 7):
            if u != k and (u >= k) != (u >= k + 1):
                return False, f"Iverson shift fails at u={u} k={k}"
            checks += 1

    # the geq-bracket determinant against the eta-matching signed sum
    for n in range(1, 6):
        for p in range(0, 3):
            eta = eta_tuple(n, p)
            total = tuple_abs(eta)
            for _ in range(60):
                head = tuple(rng.randint(-1, n + p + 1) for _ in range(n - 1))
                nu = head + (total - sum(head),)
                checks += 1
                if iverson_geq_det(nu) != signed_match_sum(nu, eta):
                    return False, f"geq-det vs match sum fails at nu={nu} eta={eta}"

    # the geq-bracket determinant against N^n shifts, arbitrary nu
    for n in range(1, 6):
        for _ in range(60):
            nu = tuple(rng.randint(-2, n + 3) for _ in range(n))
            expected = sum(
                sign
                for sign, imgs in signed_permutations(n)
                if all(nu[i] - (imgs[i] + 1) >= 0 for i in range(n))
            )
            checks += 1
            if iverson_geq_det(nu) != expected:
                return False, f"geq-det vs shift sum fails at nu={nu}"

    # cover-bracket determinant: xi matching and {0,1}^n shifts
    for n in range(1, 6):
        for p in range(0, n + 1):
            xi = xi_tuple(n, p)
            total = tuple_abs(xi)
            for _ in range(40):
                head = tuple(rng.randint(0, n + 2) for _ in range(n - 1))
                nu = head + (total - sum(head),)
                checks += 1
                if cover_det(nu) != signed_match_sum(nu, xi):
                    return False, f"cover-det vs match sum fails at nu={nu} xi={xi}"
        for _ in range(60):
            nu = tuple(rng.randint(-2, n + 3) for _ in range(n))
            expected = sum(
                sign
                for sign, imgs in signed_permutations(n)
                if all(nu[i] - (imgs[i] + 1) in (0, 1) for i in range(n))
            )
            checks += 1
            if cover_det(nu) != expected:
                return False, f"cover-det vs shift sum fails at nu={nu}"

    # off-identity permutations never cover the xi diagonal
    for n in range(1, 6):
        for p in range(0, n + 1):
            xi = xi_tuple(n, p)
            for sigma in permutations(n):
                if sigma.is_identity():
                    continue
                checks += 1
                if all(covers(xi[i - 1], sigma(i)) for i in range(1, n + 1)):
                    return False, f"non-identity cover product nonzero at n={n} p={p} {sigma!r}"

    # matching existence under the pigeonhole hypotheses
    for n in range(2, 5):
        values = range(-1, 3) if n == 4 else range(-1, 4)
        for eta in itertools.product(values, repeat=n):
            head = eta[:-1]
            if len(set(head)) < n - 1:
                continue
            head_set = set(head)
            for nu in itertools.product(values, repeat=n):
                if sum(nu) != sum(eta) or not head_set <= set(nu):
                    continue
                checks += 1
                if not any(act(eta, sigma) == nu for sigma in permutations(n)):
                    return False, f"no matching permutation for nu={nu} eta={eta}"
                if len(set(eta)) == n and signed_match_sum(nu, eta) == 0:
                    return False, f"match sum vanishes for distinct eta={eta} nu={nu}"

    # factorization with a zero last row (but for the corner)
    for n in range(1, 6):
        for _ in range(5):
            matrix = _random_word_matrix(rng, n, zero_last_row=True)
            lead = rowdet(matrix.leading(n - 1))
            checks += 1
            if rowdet(matrix) != lead * matrix.entry(n, n):
                return False, f"corner factorization fails at n={n}"

    # block-triangular factorization
    for n in range(0, 6):
        for k in range(0, n + 1):
            for _ in range(3):
                matrix = _random_word_matrix(rng, n, zero_block=k)
                top = rowdet(matrix.leading(k))
                bottom = rowdet(
                    matrix.submatrix(range(k + 1, n + 1), range(k + 1, n + 1))
                )
                checks += 1
                if rowdet(matrix) != top * bottom:
                    return False, f"block factorization fails at n={n} k={k}"

    # permuting rows scales the integer determinant by the sign
    for n in range(1, 6):
        for _ in range(20):
            nu = tuple(rng.randint(-1, n + 2) for _ in range(n))
            tau = Permutation(rng.sample(range(1, n + 1), n))
            checks += 1
            if iverson_geq_det(act(nu, tau)) != tau.sign * iverson_geq_det(nu):
                return False, f"row permutation sign fails at nu={nu} tau={tau!r}"

    # block-sum embedding of permutation pairs
    for n in range(0, 6):
        for k in range(0, n + 1):
            image = {}
            for a in permutations(k):
                for b in permutations(n - k):
                    combined = oplus(a, b)
                    checks += 1
                    if combined.sign != a.sign * b.sign:
                        return False, f"sign multiplicativity fails at {a!r} {b!r}"
                    image[combined.images] = True
            fixing = [
                tau for tau in permutations(n)
                if set(tau.images[:k]) == set(range(1, k + 1))
            ]
            if len(image) != len(fixing) or any(tau.images not in image for tau in fixing):
                return False, f"block-sum bijection fails at n={n} k={k}"

    return True, f"{checks} lemma checks"


def _random_word_matrix(
    rng: random.Random, n: int, zero_last_row: bool = False, zero_block: int | None = None
) -> SquareMatrix:
    """A matrix of short random word polynomials, optionally with the zero
    patterns of the factorization lemmas."""

    def entry(i: int, j: int) -> Polynomial:
        if zero_last_row and i == n and j < n:
            return Polynomial.zero(Kind.WORD)
        if zero_block is not None and i > zero_block and j <= zero_block:
            return Polynomial.zero(Kind.WORD)
        poly = Polynomial.zero(Kind.WORD)
        for _ in range(rng.randint(1, 2)):
            word = tuple(
                gen_h(rng.randint(-2, 4), rng.randint(1, 3)) for _ in range(rng.randint(0, 2))
            )
            poly = poly + Polynomial.from_terms(Kind.WORD, [(word, rng.randint(-2, 2) or 1)])
        return poly

    return SquareMatrix.from_function(n, entry, Kind.WORD)


@dataclass
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str
    elapsed_s: float


CRITERIA: tuple[tuple[str, Callable[[int], tuple[bool, str]]], ...] = (
    ("first-rule", _criterion_first_rule),
    ("second-rule", _criterion_second_rule),
    ("worked-examples", _criterion_worked_examples),
    ("corollary-suite", _criterion_corollaries),
    ("schur-layer", _criterion_schur),
    ("immaculate-right-rule", _criterion_immaculate),
    ("ninth-variation", _criterion_ninth_variation),
    ("antisymmetric-decomposition", _criterion_pre_lr),
    ("lemma-suites", _criterion_lemma_suites),
)


def worker_count() -> int:
    raw = os.environ.get("PREPIERI_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_all(seed: int, workers: int | None = None) -> list[CriterionResult]:
    """Run every criterion; report assembly is ordered by criterion index
    regardless of completion order."""
    if workers is None:
        workers = worker_count()

    def run_one(item: tuple[int, tuple[str, Callable]]) -> CriterionResult:
        index, (name, func) = item
        start = time.perf_counter()
        passed, detail = func(seed)
        return CriterionResult(index, name, passed, detail, time.perf_counter() - start)

    numbered = list(enumerate(CRITERIA, start=1))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_one, numbered))
    else:
        results = [run_one(item) for item in numbered]
    return sorted(results, key=lambda r: r.index)
