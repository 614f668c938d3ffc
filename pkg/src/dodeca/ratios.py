"""Exact interval arithmetic on positive rationals.

Musical intervals are frequency ratios >= 1 in lowest terms;
concatenating intervals multiplies their ratios (the logarithmic law).
Superparticular ratios (n+1)/n get special treatment: split identities,
smooth enumeration, geometric-division tests, and bounded product
decompositions.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "Ratio",
    "DivisionCheck",
    "Means",
    "DescartesEntry",
    "combine",
    "difference",
    "is_superparticular",
    "split2",
    "split3",
    "smooth_superparticulars",
    "geometric_division_exists",
    "verify_division",
    "means",
    "cents",
    "decompositions",
    "ARCHYTAS_GENERA",
    "REINACH_DIATONIC",
    "DESCARTES_COMPENDIUM",
]

RationalLike = Union[int, Fraction, str]


@dataclass(frozen=True)
class Ratio:
    """A musical interval: an exact rational >= 1 in lowest terms.

    Construction reduces and, when handed a value below 1, flips it to
    the ascending form; descending motion is expressed by operation
    order, never by fractions below 1.

    >>> str(Ratio(6, 4))
    '3/2'
    >>> str(Ratio(2, 3))
    '3/2'
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self) -> None:
        num, den = self.numerator, self.denominator
        if not (isinstance(num, int) and isinstance(den, int)):
            raise ValueError(
                f"ratio terms must be integers, got {num!r}/{den!r}"
            )
        if num <= 0 or den <= 0:
            raise ValueError(
                f"ratio terms must be positive, got {num}/{den}"
            )
        if num < den:
            num, den = den, num
        g = math.gcd(num, den)
        object.__setattr__(self, "numerator", num // g)
        object.__setattr__(self, "denominator", den // g)

    @classmethod
    def parse(cls, text: str) -> "Ratio":
        """Parse ``"p/q"`` or a bare integer ``"p"``."""
        body = text.strip()
        try:
            if "/" in body:
                p, q = body.split("/", 1)
                return cls(int(p), int(q))
            return cls(int(body))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a ratio: {text!r}") from None

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Ratio":
        return cls(f.numerator, f.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def combine(a: Ratio, b: Ratio) -> Ratio:
    """Concatenate two intervals: the ratio of their sum is the product."""
    return Ratio(a.numerator * b.numerator, a.denominator * b.denominator)


def difference(a: Ratio, b: Ratio) -> Ratio:
    """The interval by which a surpasses b: a divided by b."""
    if a.fraction < b.fraction:
        raise ValueError(
            f"descending interval: {a} is smaller than {b}; "
            f"swap the operands"
        )
    return Ratio(a.numerator * b.denominator, a.denominator * b.numerator)


def is_superparticular(r: Ratio) -> bool:
    """True for ratios of the form (n+1)/n (after reduction)."""
    return r.numerator - r.denominator == 1


def _require_superparticular(r: Ratio) -> int:
    if not is_superparticular(r):
        raise ValueError(f"{r} is not superparticular")
    return r.denominator


def split2(r: Ratio) -> tuple[Ratio, Ratio]:
    """Write (p+1)/p as (2p+2)/(2p+1) times (2p+1)/(2p).

    >>> tuple(str(x) for x in split2(Ratio(9, 8)))
    ('18/17', '17/16')
    """
    p = _require_superparticular(r)
    return Ratio(2 * p + 2, 2 * p + 1), Ratio(2 * p + 1, 2 * p)


def split3(r: Ratio) -> tuple[Ratio, Ratio, Ratio]:
    """Write (p+1)/p as the product of three superparticular steps.

    >>> tuple(str(x) for x in split3(Ratio(4, 3)))
    ('12/11', '11/10', '10/9')
    """
    p = _require_superparticular(r)
    return (
        Ratio(3 * p + 3, 3 * p + 2),
        Ratio(3 * p + 2, 3 * p + 1),
        Ratio(3 * p + 1, 3 * p),
    )


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    for p in range(3, isqrt(k) + 1, 2):
        if k % p == 0:
            return False
    return True


def _smooth_numbers(primes: Sequence[int], bound: int) -> set[int]:
    """All integers <= bound whose prime factors lie in `primes`."""
    heap = [1]
    seen = {1}
    while heap:
        v = heapq.heappop(heap)
        for p in primes:
            w = v * p
            if w <= bound and w not in seen:
                seen.add(w)
                heapq.heappush(heap, w)
    return seen


def smooth_superparticulars(
    primes: Iterable[int], bound: int = 10**6
) -> list[Ratio]:
    """All (n+1)/n with n < bound and both terms smooth over `primes`,
    in descending order of value.

    The search is exhaustive only up to the bound; finiteness of the
    full list is a theorem (Stormer), not something this function
    recomputes, so choose the bound generously.
    """
    prime_list = sorted(set(primes))
    if not prime_list:
        raise ValueError("at least one prime is required")
    for p in prime_list:
        if not _is_prime(p):
            raise ValueError(f"not a prime: {p}")
    if bound < 2:
        raise ValueError(f"bound must be at least 2, got {bound}")
    smooth = _smooth_numbers(prime_list, bound)
    return [
        Ratio(n + 1, n)
        for n in sorted(smooth)
        if n < bound and n + 1 in smooth
    ]


def _iroot(m: int, k: int) -> int:
    """Largest r with r**k <= m, exactly."""
    if m < 2:
        return m
    if k == 2:
        return isqrt(m)
    lo, hi = 1, 1 << (m.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= m:
            lo = mid
        else:
            hi = mid - 1
    return lo


def geometric_division_exists(r: Ratio, k: int) -> bool:
    """Can r be split into k equal rational subintervals?

    True exactly when numerator and denominator are both perfect k-th
    powers, i.e. when r is the k-th power of a rational.
    """
    if k < 2:
        raise ValueError(f"division into k parts needs k >= 2, got {k}")
    return (
        _iroot(r.numerator, k) ** k == r.numerator
        and _iroot(r.denominator, k) ** k == r.denominator
    )


@dataclass(frozen=True)
class DivisionCheck:
    """Outcome of an exact product-vs-target comparison.

    The residual is product/target as a plain rational; it is below 1
    when the factors undershoot, which is why it is not normalized to
    ascending form.
    """

    ok: bool
    residual: Optional[Fraction] = None


def verify_division(factors: Sequence[Ratio], target: Ratio) -> DivisionCheck:
    """Check that the factors multiply exactly to the target."""
    if not factors:
        raise ValueError("at least one factor is required")
    product = Fraction(1)
    for f in factors:
        product *= f.fraction
    if product == target.fraction:
        return DivisionCheck(True, None)
    return DivisionCheck(False, product / target.fraction)


@dataclass(frozen=True)
class Means:
    """Arithmetic, geometric, and harmonic means of an interval [a, b].

    The geometric mean is populated only when sqrt(ab) is rational;
    otherwise it is None and `geometric_is_rational` is False.
    """

    arithmetic: Fraction
    geometric: Optional[Fraction]
    harmonic: Fraction

    @property
    def geometric_is_rational(self) -> bool:
        return self.geometric is not None


def means(a: RationalLike, b: RationalLike) -> Means:
    """The three classical means of 0 < a < b."""
    fa, fb = Fraction(a), Fraction(b)
    if not 0 < fa < fb:
        raise ValueError(f"means require 0 < a < b, got a={fa}, b={fb}")
    product = fa * fb
    num_root = isqrt(product.numerator)
    den_root = isqrt(product.denominator)
    geometric = None
    if (
        num_root * num_root == product.numerator
        and den_root * den_root == product.denominator
    ):
        geometric = Fraction(num_root, den_root)
    return Means(
        arithmetic=(fa + fb) / 2,
        geometric=geometric,
        harmonic=2 * fa * fb / (fa + fb),
    )


def cents(r: Ratio) -> float:
    """The interval size in cents: 1200 * log2(r)."""
    return 1200.0 * (math.log2(r.numerator) - math.log2(r.denominator))


def decompositions(
    r: Ratio, k: int, max_den: int
) -> list[list[Ratio]]:
    """All multisets of k superparticular factors with product r and
    every denominator at most max_den.

    Each factor list is ordered ascending by value (equivalently,
    descending by denominator) and the result is sorted
    lexicographically. The unbounded problem has infinitely many
    answers; max_den makes the search finite.
    """
    _require_superparticular(r)
    if k < 2:
        raise ValueError(f"decomposition needs k >= 2 factors, got {k}")
    if max_den < 1:
        raise ValueError(f"max_den must be positive, got {max_den}")
    results: list[list[Fraction]] = []

    def search(target: Fraction, slots: int, den_cap: int,
               chosen: list[Fraction]) -> None:
        if slots == 0:
            if target == 1:
                results.append(list(chosen))
            return
        if target > Fraction(2) ** slots:
            # even k octaves fall short
            return
        for m in range(min(den_cap, max_den), 0, -1):
            f = Fraction(m + 1, m)
            if f**slots > target:
                # every remaining factor is at least f, so the smallest
                # reachable product already overshoots; smaller m only
                # grows f
                break
            chosen.append(f)
            search(target / f, slots - 1, m, chosen)
            chosen.pop()

    search(r.fraction, k, max_den, [])
    results.sort()
    return [[Ratio.from_fraction(f) for f in fs] for fs in results]


# ---------------------------------------------------------------------------
# Classical tables, kept as printed in their sources.

ARCHYTAS_GENERA: dict[str, tuple[Ratio, ...]] = {
    "enharmonic": (Ratio(5, 4), Ratio(36, 35), Ratio(28, 27)),
    "chromatic": (Ratio(32, 27), Ratio(243, 224), Ratio(28, 27)),
    "diatonic": (Ratio(9, 8), Ratio(8, 7), Ratio(28, 27)),
}
"""Archytas' three divisions of the fourth; each multiplies to 4/3."""

REINACH_DIATONIC: dict[str, tuple[Ratio, ...]] = {
    "Archytas": (Ratio(9, 8), Ratio(8, 7), Ratio(28, 27)),
    "Eratosthenes": (Ratio(9, 8), Ratio(9, 8), Ratio(256, 243)),
    "Didymus": (Ratio(9, 8), Ratio(10, 9), Ratio(16, 15)),
    "Ptolemy": (Ratio(10, 9), Ratio(11, 10), Ratio(12, 11)),
}
"""Diatonic-genus tetrachords after Reinach; each row multiplies to 4/3."""


@dataclass(frozen=True)
class DescartesEntry:
    """A row of the interval table in Descartes' Compendium musicae.

    Entries are kept exactly as printed: fractions are not reduced, and
    the one label that disagrees with standard interval naming (5/4,
    printed as a second where usage says major third) is flagged rather
    than corrected.
    """

    numerator: int
    denominator: int
    printed_label: str
    printed_label_is_nonstandard: bool = field(default=False)


DESCARTES_COMPENDIUM: tuple[DescartesEntry, ...] = (
    DescartesEntry(2, 1, "8ve"),
    DescartesEntry(3, 1, "12th"),
    DescartesEntry(3, 2, "5th"),
    DescartesEntry(4, 1, "15th"),
    DescartesEntry(4, 2, "8ve"),
    DescartesEntry(4, 3, "4th"),
    DescartesEntry(5, 1, "17th"),
    DescartesEntry(5, 2, "10th maj."),
    DescartesEntry(5, 3, "6th maj."),
    DescartesEntry(5, 4, "2nd", printed_label_is_nonstandard=True),
    DescartesEntry(6, 1, "19th"),
    DescartesEntry(6, 2, "12th"),
    DescartesEntry(6, 3, "8ve"),
    DescartesEntry(6, 4, "5th"),
    DescartesEntry(6, 5, "3rd min."),
)
