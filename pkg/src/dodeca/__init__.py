"""Exact arithmetic for symmetric musical structures.

Pitch-class sets over Z_n, modes of limited transposition, counterpoint
transforms, palindromic duration sequences, fan permutations, and
superparticular ratio arithmetic. Everything is computed exactly
(integers, `fractions.Fraction`); floats appear only in cent values.
"""

from __future__ import annotations

__version__ = "0.1.0"

__all__ = ["__version__"]
