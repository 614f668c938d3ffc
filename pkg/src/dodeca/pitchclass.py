"""Pitch classes and pitch-class sets over Z_n.

A pitch class is a residue mod n (n = 12 in the tempered system); a
pitch-class set is a subset of Z_n, stored as an n-bit mask and written
externally as a sorted bracket list like ``[0, 2, 4, 6, 8, 10]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Literal

__all__ = [
    "PitchClass",
    "PitchClassSet",
    "parse_note",
    "format_note",
    "parse_pcset",
    "transpose_set",
    "invert_set",
    "stabilizer",
    "minimal_period",
    "orbit_count",
    "orbit_count_burnside",
]

_NATURALS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTALS = {"": 0, "#": 1, "♯": 1, "b": -1, "♭": -1, "♮": 0}
_SHARP_NAMES = ("C", "C♯", "D", "D♯", "E", "F",
                "F♯", "G", "G♯", "A", "A♯", "B")
_FLAT_NAMES = ("C", "D♭", "D", "E♭", "E", "F",
               "G♭", "G", "A♭", "A", "B♭", "B")

_NOTE_RE = re.compile(r"([A-G])([#b♯♭♮]?)\Z")


@dataclass(frozen=True)
class PitchClass:
    """A residue in Z_n.

    >>> PitchClass(6).value
    6
    """

    value: int
    modulus: int = 12

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"pitch class must lie in [0, {self.modulus}), got {self.value}"
            )


@dataclass(frozen=True)
class PitchClassSet:
    """A subset of Z_n held as an n-bit mask.

    Bit x of ``mask`` is set exactly when pitch class x is a member.
    Construct from explicit members with :meth:`from_members` or from
    text with :func:`parse_pcset`.

    >>> str(PitchClassSet.from_members([4, 0, 2]))
    '[0, 2, 4]'
    """

    modulus: int
    mask: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if not 0 <= self.mask < (1 << self.modulus):
            raise ValueError(
                f"mask {self.mask:#x} out of range for modulus {self.modulus}"
            )

    @classmethod
    def from_members(
        cls, members: Iterable[int], modulus: int = 12
    ) -> "PitchClassSet":
        """Build a set from integers; values are reduced mod ``modulus``."""
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        mask = 0
        for x in members:
            mask |= 1 << (x % modulus)
        return cls(modulus, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(
            x for x in range(self.modulus) if self.mask >> x & 1
        )

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> (x % self.modulus) & 1)

    def is_subset_of(self, other: "PitchClassSet") -> bool:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        return "[" + ", ".join(str(x) for x in self.members) + "]"


def parse_pcset(text: str, modulus: int = 12) -> PitchClassSet:
    """Parse ``"[0, 2, 4]"`` (brackets optional, comma or space separated)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
    members = []
    for tok in tokens:
        try:
            members.append(int(tok))
        except ValueError:
            raise ValueError(f"not a pitch class: {tok!r}") from None
    return PitchClassSet.from_members(members, modulus)


def parse_note(text: str) -> PitchClass:
    """Parse a note name into a Z_12 pitch class.

    The name is an upper-case letter A-G followed by at most one
    accidental: ``#`` or ``♯`` (sharp), ``b`` or ``♭`` (flat),
    ``♮`` (natural).

    >>> parse_note("C").value
    0
    >>> parse_note("F♯").value
    6
    >>> parse_note("B♭").value
    10
    """
    m = _NOTE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a note name: {text!r}")
    letter, accidental = m.groups()
    value = (_NATURALS[letter] + _ACCIDENTALS[accidental]) % 12
    return PitchClass(value, 12)


def format_note(pc: PitchClass | int, flat_preferred: bool = False) -> str:
    """Spell a Z_12 pitch class, sharp-preferred unless asked otherwise.

    >>> format_note(6)
    'F♯'
    >>> format_note(6, flat_preferred=True)
    'G♭'
    """
    if isinstance(pc, PitchClass):
        if pc.modulus != 12:
            raise ValueError(
                f"note names are defined for modulus 12, got {pc.modulus}"
            )
        value = pc.value
    else:
        value = pc % 12
    return (_FLAT_NAMES if flat_preferred else _SHARP_NAMES)[value]


def _full_mask(n: int) -> int:
    return (1 << n) - 1


def _rotate(mask: int, t: int, n: int) -> int:
    t %= n
    if t == 0:
        return mask
    return ((mask << t) | (mask >> (n - t))) & _full_mask(n)


def _reflect(mask: int, axis: int, n: int) -> int:
    out = 0
    for x in range(n):
        if mask >> x & 1:
            out |= 1 << ((axis - x) % n)
    return out


def transpose_set(s: PitchClassSet, t: int) -> PitchClassSet:
    """Translate every member by t mod n."""
    return PitchClassSet(s.modulus, _rotate(s.mask, t, s.modulus))


def invert_set(s: PitchClassSet, axis: int) -> PitchClassSet:
    """Map every member x to axis - x mod n."""
    return PitchClassSet(s.modulus, _reflect(s.mask, axis, s.modulus))


def stabilizer(s: PitchClassSet) -> frozenset[int]:
    """All translations t with transpose_set(s, t) == s.

    Always contains 0 and forms a subgroup of Z_n.
    """
    n = s.modulus
    return frozenset(t for t in range(n) if _rotate(s.mask, t, n) == s.mask)


def minimal_period(s: PitchClassSet) -> int:
    """Smallest t > 0 fixing s under translation; divides n.

    Equals the number of distinct transpositions of s.
    """
    if s.mask == 0:
        raise ValueError("minimal period is undefined for the empty set")
    n = s.modulus
    for t in range(1, n + 1):
        if n % t == 0 and _rotate(s.mask, t, n) == s.mask:
            return t
    raise AssertionError("unreachable: n itself always fixes s")


_Group = Literal["T", "TI"]


def _check_group(group: str) -> None:
    if group not in ("T", "TI"):
        raise ValueError(f"group must be 'T' or 'TI', got {group!r}")


def orbit_count(n: int, group: _Group = "T") -> int:
    """Number of orbits of subsets of Z_n under T or TI, by enumeration.

    Walks all 2^n subsets and floods each orbit through the group
    generators (translation by 1; for TI also reflection through 0).
    Refuses n > 16 to bound the walk.
    """
    _check_group(group)
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n > 16:
        raise ValueError(
            f"orbit enumeration is limited to modulus 16, got {n}"
        )
    total = 1 << n
    seen = bytearray(total)
    count = 0
    for start in range(total):
        if seen[start]:
            continue
        count += 1
        seen[start] = 1
        stack = [start]
        while stack:
            cur = stack.pop()
            nxt = _rotate(cur, 1, n)
            if not seen[nxt]:
                seen[nxt] = 1
                stack.append(nxt)
            if group == "TI":
                nxt = _reflect(cur, 0, n)
                if not seen[nxt]:
                    seen[nxt] = 1
                    stack.append(nxt)
    return count


@lru_cache(maxsize=None)
def orbit_count_burnside(n: int, group: _Group = "T") -> int:
    """Same count as :func:`orbit_count`, via Burnside's lemma.

    Averages 2^(number of cycles) over the group elements: a subset is
    fixed by a permutation of Z_n exactly when it is a union of that
    permutation's cycles.
    """
    _check_group(group)
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    total = 0
    size = 0
    for t in range(n):
        # translation x -> x + t has gcd(t, n) cycles
        total += 1 << gcd(t, n)
        size += 1
    if group == "TI":
        for a in range(n):
            # reflection x -> a - x; count its cycles directly
            seen = [False] * n
            cycles = 0
            for x in range(n):
                if seen[x]:
                    continue
                cycles += 1
                y = x
                while not seen[y]:
                    seen[y] = True
                    y = (a - y) % n
            total += 1 << cycles
            size += 1
    assert total % size == 0
    return total // size
