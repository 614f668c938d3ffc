"""Duration-sequence algebra with exact rational values.

Non-retrogradable (palindromic) rhythm tests, augmentation and
diminution, symmetric amplification, central-value transforms,
chromatic duration sequences, and structural pattern detection.
All values are positive `fractions.Fraction`s; floats are rejected so
palindrome and equality checks stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Union

__all__ = [
    "DurationSequence",
    "TotalResult",
    "ScalarChain",
    "InterleaveAnalysis",
    "parse_durations",
    "retrograde",
    "is_non_retrogradable",
    "augment",
    "symmetric_amplify",
    "modify_central",
    "total",
    "chromatic_sequence",
    "detect_scalar_chain",
    "interleave_analysis",
]

RationalLike = Union[int, Fraction]


def _as_fraction(value: RationalLike, what: str = "duration") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(
            f"{what}s must be exact rationals, got {value!r}"
        )
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise ValueError(f"{what}s must be exact rationals, got {value!r}")


@dataclass(frozen=True)
class DurationSequence:
    """An ordered list of exact positive durations with a unit label."""

    values: tuple[Fraction, ...]
    unit: str = ""

    def __post_init__(self) -> None:
        coerced = tuple(_as_fraction(v) for v in self.values)
        for v in coerced:
            if v <= 0:
                raise ValueError(f"durations must be positive, got {v}")
        object.__setattr__(self, "values", coerced)

    @classmethod
    def of(cls, values: Iterable[RationalLike], unit: str = "") -> "DurationSequence":
        return cls(tuple(values), unit)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def parse_durations(text: str, unit: str = "") -> DurationSequence:
    """Parse space-separated rational tokens: ``"2 3/2 2"``."""
    values = []
    for tok in text.split():
        try:
            values.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational duration: {tok!r}") from None
    return DurationSequence(tuple(values), unit)


def retrograde(d: DurationSequence) -> DurationSequence:
    """The sequence read right to left."""
    return replace(d, values=d.values[::-1])


def is_non_retrogradable(d: DurationSequence) -> bool:
    """True when the sequence reads the same in both directions."""
    return d.values == d.values[::-1]


def augment(d: DurationSequence, factor: RationalLike) -> DurationSequence:
    """Multiply every duration by an exact factor (< 1 is diminution)."""
    f = _as_fraction(factor, "augmentation factor")
    if f <= 0:
        raise ValueError(f"augmentation factor must be positive, got {f}")
    return replace(d, values=tuple(v * f for v in d.values))


def symmetric_amplify(
    d: DurationSequence, wing: DurationSequence
) -> DurationSequence:
    """Add a rhythm on the left and its retrograde on the right.

    Defined only for non-retrogradable seeds, so the result is again
    non-retrogradable.
    """
    if not is_non_retrogradable(d):
        raise ValueError(
            f"symmetric amplification needs a non-retrogradable seed, "
            f"got {d}"
        )
    return replace(d, values=wing.values + d.values + wing.values[::-1])


def modify_central(d: DurationSequence, delta: RationalLike) -> DurationSequence:
    """Enlarge or diminish the central value of an odd-length sequence."""
    if len(d) % 2 == 0:
        raise ValueError(
            f"central modification needs an odd-length sequence, "
            f"got length {len(d)}"
        )
    shift = _as_fraction(delta, "central delta")
    mid = len(d) // 2
    new_center = d.values[mid] + shift
    if new_center <= 0:
        raise ValueError(
            f"central value would become {new_center}; durations must stay "
            f"positive"
        )
    return replace(
        d, values=d.values[:mid] + (new_center,) + d.values[mid + 1:]
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


@dataclass(frozen=True)
class TotalResult:
    """Exact sum of a sequence; primality is reported only when the sum
    is a positive integer."""

    total: Fraction
    is_integer: bool
    is_prime: Optional[bool]


def total(d: DurationSequence) -> TotalResult:
    """Exact sum with a primality flag on positive-integer totals."""
    s = sum(d.values, Fraction(0))
    if s.denominator == 1 and s >= 1:
        return TotalResult(s, True, _is_prime(s.numerator))
    return TotalResult(s, s.denominator == 1, None)


def chromatic_sequence(
    start: RationalLike,
    end: RationalLike,
    step: RationalLike,
    unit: str = "",
) -> DurationSequence:
    """The inclusive arithmetic progression from start to end by step."""
    a = _as_fraction(start, "endpoint")
    b = _as_fraction(end, "endpoint")
    s = _as_fraction(step, "step")
    if s == 0:
        raise ValueError("step must be nonzero")
    span = (b - a) / s
    if span.denominator != 1:
        raise ValueError(
            f"step {s} does not divide the span from {a} to {b}"
        )
    if span < 0:
        raise ValueError(
            f"step {s} points away from {b} when starting at {a}"
        )
    count = span.numerator + 1
    return DurationSequence(
        tuple(a + i * s for i in range(count)), unit
    )


@dataclass(frozen=True)
class ScalarChain:
    """A sequence split as B, r.B, r^2.B, ... for one ratio r != 1."""

    block: DurationSequence
    factors: tuple[Fraction, ...]


def detect_scalar_chain(d: DurationSequence) -> Optional[ScalarChain]:
    """Find a block repeated under one scalar ratio, if any.

    The values must split into equal-length consecutive blocks with each
    block a single fixed multiple r of the one before (r != 1, since a
    factor of 1 is mere repetition). The smallest block that works wins,
    giving the longest chain. Returns None when no split qualifies.
    """
    n = len(d)
    for size in range(1, n // 2 + 1):
        if n % size:
            continue
        blocks = [
            d.values[i:i + size] for i in range(0, n, size)
        ]
        r = blocks[1][0] / blocks[0][0]
        if r == 1:
            continue
        if all(
            blocks[j][i] == blocks[j - 1][i] * r
            for j in range(1, len(blocks))
            for i in range(size)
        ):
            return ScalarChain(
                block=replace(d, values=blocks[0]),
                factors=(r,) * (len(blocks) - 1),
            )
    return None


_CONSTANT = "constant"
_INC_DEC = "increasing-then-decreasing"
_OTHER = "other"


def _shape(values: tuple[Fraction, ...]) -> str:
    if len(set(values)) <= 1:
        return _CONSTANT
    i = 0
    while i + 1 < len(values) and values[i + 1] > values[i]:
        i += 1
    peak = i
    if peak == 0 or peak == len(values) - 1:
        return _OTHER
    while i + 1 < len(values) and values[i + 1] < values[i]:
        i += 1
    return _INC_DEC if i == len(values) - 1 else _OTHER


@dataclass(frozen=True)
class InterleaveAnalysis:
    """The two position-parity subsequences with a shape tag each.

    Tags come from {constant, increasing-then-decreasing, other};
    positions are counted 1-based, and both parities are reported
    symmetrically.
    """

    odd: DurationSequence
    odd_shape: str
    even: DurationSequence
    even_shape: str


def interleave_analysis(d: DurationSequence) -> InterleaveAnalysis:
    """Split into odd- and even-position subsequences and tag shapes."""
    odd = replace(d, values=d.values[0::2])
    even = replace(d, values=d.values[1::2])
    return InterleaveAnalysis(
        odd=odd,
        odd_shape=_shape(odd.values),
        even=even,
        even_shape=_shape(even.values),
    )
