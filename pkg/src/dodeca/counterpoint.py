"""Counterpoint transforms on ordered sequences.

Transposition, inversion, and retrogradation of pitch-class sequences;
twelve-tone row validation and the 48 classical row forms; generalized
series over explicit symbol alphabets (dynamics, attacks); and
transcription transforms on sequences of pitches in cents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence, Union

from .pitchclass import parse_note
from .rhythm import DurationSequence, retrograde as _retro_durations

__all__ = [
    "PcSequence",
    "SymbolSeries",
    "CentSequence",
    "LabeledRow",
    "parse_pc_sequence",
    "transpose_seq",
    "invert_seq",
    "retrograde_seq",
    "validate_row",
    "row_forms",
    "intensity_alphabet",
    "scale_intervals",
    "octave_shift",
]

INTENSITIES: tuple[str, ...] = ("ppp", "pp", "p", "mf", "f", "ff", "fff")


@dataclass(frozen=True)
class PcSequence:
    """An ordered motive of pitch classes sharing one modulus."""

    items: tuple[int, ...]
    modulus: int = 12

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        object.__setattr__(
            self, "items", tuple(x % self.modulus for x in self.items)
        )

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.items)


@dataclass(frozen=True)
class SymbolSeries:
    """A generalized series: indices into an explicit symbol alphabet."""

    alphabet: tuple[str, ...]
    items: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet symbols must be distinct")
        for i in self.items:
            if not 0 <= i < len(self.alphabet):
                raise ValueError(
                    f"series index {i} outside alphabet of size "
                    f"{len(self.alphabet)}"
                )

    def symbols(self) -> tuple[str, ...]:
        return tuple(self.alphabet[i] for i in self.items)


@dataclass(frozen=True)
class CentSequence:
    """Pitches in cents; finite floats, exactness not required."""

    pitches: tuple[float, ...]

    def __post_init__(self) -> None:
        coerced = tuple(float(p) for p in self.pitches)
        for p in coerced:
            if not math.isfinite(p):
                raise ValueError(f"pitches must be finite, got {p!r}")
        object.__setattr__(self, "pitches", coerced)


def parse_pc_sequence(text: str, modulus: int = 12) -> PcSequence:
    """Parse space-separated tokens; integers, or note names when n = 12.

    >>> parse_pc_sequence("0 4 7").items
    (0, 4, 7)
    >>> parse_pc_sequence("C E G").items
    (0, 4, 7)
    """
    items = []
    for tok in text.split():
        try:
            items.append(int(tok))
            continue
        except ValueError:
            pass
        if modulus != 12:
            raise ValueError(
                f"not a pitch class: {tok!r} (note names need modulus 12)"
            )
        items.append(parse_note(tok).value)
    return PcSequence(tuple(items), modulus)


def transpose_seq(m: PcSequence, t: int) -> PcSequence:
    """Shift every item by t mod n, order preserved."""
    return replace(m, items=tuple((x + t) % m.modulus for x in m.items))


def invert_seq(m: PcSequence, axis: int) -> PcSequence:
    """Replace every item x by axis - x mod n."""
    return replace(m, items=tuple((axis - x) % m.modulus for x in m.items))


AnySequence = Union[
    PcSequence, SymbolSeries, CentSequence, DurationSequence, Sequence
]


def retrograde_seq(m: AnySequence) -> AnySequence:
    """The sequence written backwards, whatever kind it is."""
    if isinstance(m, PcSequence):
        return replace(m, items=m.items[::-1])
    if isinstance(m, SymbolSeries):
        return replace(m, items=m.items[::-1])
    if isinstance(m, CentSequence):
        return replace(m, pitches=m.pitches[::-1])
    if isinstance(m, DurationSequence):
        return _retro_durations(m)
    return m[::-1]


def validate_row(m: PcSequence) -> bool:
    """True iff m is a twelve-tone row: length 12, all pcs distinct."""
    if m.modulus != 12:
        raise ValueError(
            f"twelve-tone rows are defined over modulus 12, got {m.modulus}"
        )
    return len(m.items) == 12 and len(set(m.items)) == 12


@dataclass(frozen=True)
class LabeledRow:
    label: str
    row: PcSequence


def row_forms(m: PcSequence) -> list[LabeledRow]:
    """The 48 labeled forms P/I/R/RI at every transposition.

    P0 is the input untransposed; It inverts about the row's first pitch
    class, then transposes by t; Rt and RIt are the retrogrades of Pt
    and It. Symmetric rows may repeat forms under different labels; all
    48 labels are always emitted.
    """
    if not validate_row(m):
        raise ValueError(
            f"not a valid twelve-tone row: {m} "
            f"(need 12 distinct pitch classes)"
        )
    first = m.items[0]
    inv = invert_seq(m, 2 * first)  # fixes the first pitch class
    forms: list[LabeledRow] = []
    for prefix, base in (("P", m), ("I", inv)):
        for t in range(12):
            forms.append(LabeledRow(f"{prefix}{t}", transpose_seq(base, t)))
    for prefix, base in (("R", m), ("RI", inv)):
        for t in range(12):
            forms.append(
                LabeledRow(
                    f"{prefix}{t}", retrograde_seq(transpose_seq(base, t))
                )
            )
    return forms


def intensity_alphabet() -> tuple[str, ...]:
    """The ordered dynamics alphabet ppp .. fff."""
    return INTENSITIES


def scale_intervals(
    c: CentSequence, factor: Union[int, Fraction]
) -> CentSequence:
    """Multiply every successive interval by a factor, first pitch fixed."""
    f = Fraction(factor)
    if f <= 0:
        raise ValueError(f"interval factor must be positive, got {f}")
    if not c.pitches:
        return c
    first = c.pitches[0]
    scale = float(f)
    return replace(
        c, pitches=tuple(first + scale * (p - first) for p in c.pitches)
    )


def octave_shift(c: CentSequence, k: int) -> CentSequence:
    """Shift every pitch by k octaves (1200k cents)."""
    return replace(c, pitches=tuple(p + 1200.0 * k for p in c.pitches))
