"""Modes of limited transposition over Z_n.

A mode of limited transposition is a pitch-class set invariant under a
nontrivial translation mod 12, hence with fewer than 12 distinct
transpositions. This module builds the seven classical modes, tests
membership, enumerates every translation-invariant subset of Z_n, and
classifies invariant subsets as truncations (subsets of some mode
transposition).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .pitchclass import PitchClassSet, minimal_period, transpose_set

__all__ = [
    "ModeRecord",
    "LimitedSubset",
    "ClosureAudit",
    "messiaen_modes",
    "is_limited_transposition",
    "mode_label",
    "enumerate_limited",
    "classify_truncation",
    "complement",
    "closure_audit",
]

# index -> (pitch classes, note spelling of the reference transposition)
_MODE_TABLE: tuple[tuple[tuple[int, ...], tuple[str, ...]], ...] = (
    ((0, 2, 4, 6, 8, 10),
     ("C", "D", "E", "F♯", "G♯", "B♭")),
    ((0, 1, 3, 4, 6, 7, 9, 10),
     ("C", "D♭", "E♭", "E♮", "F♯", "G", "A", "B♭")),
    ((0, 2, 3, 4, 6, 7, 8, 10, 11),
     ("C", "D", "E♭", "E♮", "F♯", "G", "A♭", "B♭",
      "B♮")),
    ((0, 1, 2, 5, 6, 7, 8, 11),
     ("C", "D♭", "D♮", "F", "F♯", "G", "A♭", "B")),
    ((0, 1, 5, 6, 7, 11),
     ("C", "D♭", "F", "F♯", "G", "B")),
    ((0, 2, 4, 5, 6, 8, 10, 11),
     ("C", "D", "E", "F", "F♯", "G♯", "A♯", "B")),
    ((0, 1, 2, 3, 4, 6, 7, 8, 9, 10),
     ("C", "D♭", "D♮", "E♭", "E♮", "F♯", "G",
      "A♭", "A♮", "B♭")),
)


@dataclass(frozen=True)
class ModeRecord:
    """One of the seven modes: its index (1-based), pitch-class set,
    minimal invariance translation, and conventional note spelling."""

    index: int
    pcs: PitchClassSet
    period: int
    note_names: tuple[str, ...]


@dataclass(frozen=True)
class LimitedSubset:
    """An entry of :func:`enumerate_limited`: a translation-invariant
    subset with its period; the empty and the full set are degenerate."""

    pcs: PitchClassSet
    period: int
    degenerate: bool


@dataclass(frozen=True)
class ClosureAudit:
    """Outcome of checking that every nondegenerate invariant subset of
    Z_12 is contained in some mode transposition."""

    nondegenerate: int
    classified: int
    unclassified: tuple[PitchClassSet, ...]

    @property
    def holds(self) -> bool:
        return not self.unclassified


@lru_cache(maxsize=1)
def messiaen_modes() -> tuple[ModeRecord, ...]:
    """The seven modes of limited transposition, in classical order."""
    records = []
    for i, (pcs, names) in enumerate(_MODE_TABLE, start=1):
        s = PitchClassSet.from_members(pcs, 12)
        records.append(ModeRecord(i, s, minimal_period(s), names))
    return tuple(records)


def is_limited_transposition(s: PitchClassSet) -> bool:
    """True when s has fewer than n distinct transpositions."""
    if s.mask == 0:
        raise ValueError("the empty set has no transpositions to limit")
    return minimal_period(s) < s.modulus


def mode_label(index: int, transposition: int) -> PitchClassSet:
    """The pitch-class set of a labeled mode transposition.

    Labels are 1-based: transposition t means the reference set shifted
    by t - 1 semitones, so label 1 is the mode itself.
    """
    if not 1 <= index <= 7:
        raise ValueError(f"mode index must be in 1..7, got {index}")
    record = messiaen_modes()[index - 1]
    if not 1 <= transposition <= record.period:
        raise ValueError(
            f"mode {index} has period {record.period}: transposition labels "
            f"run 1..{record.period}, got {transposition}"
        )
    return transpose_set(record.pcs, transposition - 1)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def enumerate_limited(n: int = 12) -> list[LimitedSubset]:
    """Every subset of Z_n with a nontrivial stabilizer, ascending by mask.

    A subset invariant under translation by d (a proper divisor of n) is
    a union of congruence classes mod d, so the enumeration replicates
    each d-bit seed across Z_n instead of scanning all 2^n subsets. The
    empty and the full set are included, flagged degenerate.
    """
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    if n > 24:
        raise ValueError(f"refusing to enumerate beyond modulus 24, got {n}")
    masks: set[int] = set()
    for d in _divisors(n)[:-1]:  # proper divisors only
        copies = n // d
        for seed in range(1 << d):
            mask = 0
            for r in range(d):
                if seed >> r & 1:
                    for j in range(copies):
                        mask |= 1 << (r + j * d)
            masks.add(mask)
    out = []
    full = (1 << n) - 1
    for mask in sorted(masks):
        s = PitchClassSet(n, mask)
        period = next(
            d for d in _divisors(n)
            if transpose_set(s, d).mask == mask
        )
        out.append(LimitedSubset(s, period, mask in (0, full)))
    return out


def classify_truncation(s: PitchClassSet) -> list[tuple[int, int]]:
    """All labeled mode transpositions containing s, as (index, label).

    s must be a nonempty limited-transposition subset of Z_12; an empty
    result means s escapes the seven-mode system.
    """
    if s.modulus != 12:
        raise ValueError(
            f"truncation classification is defined over modulus 12, "
            f"got {s.modulus}"
        )
    if not is_limited_transposition(s):
        raise ValueError(f"{s} is not of limited transposition")
    hits = []
    for record in messiaen_modes():
        for t in range(1, record.period + 1):
            if s.is_subset_of(mode_label(record.index, t)):
                hits.append((record.index, t))
    return hits


def complement(s: PitchClassSet) -> PitchClassSet:
    """Z_n minus s; shares s's stabilizer."""
    full = (1 << s.modulus) - 1
    return PitchClassSet(s.modulus, full & ~s.mask)


def closure_audit() -> ClosureAudit:
    """Check the seven-mode system for closure up to truncation.

    Recomputes, rather than assumes, that every nondegenerate
    translation-invariant subset of Z_12 is contained in some mode
    transposition.
    """
    unclassified = []
    nondegenerate = 0
    for entry in enumerate_limited(12):
        if entry.degenerate:
            continue
        nondegenerate += 1
        if not classify_truncation(entry.pcs):
            unclassified.append(entry.pcs)
    return ClosureAudit(
        nondegenerate=nondegenerate,
        classified=nondegenerate - len(unclassified),
        unclassified=tuple(unclassified),
    )
