"""Request and response bodies for the HTTP service.

Exact rationals travel as strings ("3/2", "18/17") so nothing is ever
rounded on the wire; pitch classes and permutation images travel as
integer arrays.
"""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, Field, model_validator

# Durations accept either one space-separated string ("2 3/2 2") or a
# list of integer/string tokens.
Durations = Union[str, list[Union[int, str]]]
Rational = Union[int, str]


# --------------------------------------------------------------------------
# pitch-class sets and modes

class PcsRequest(BaseModel):
    pcs: list[int]
    modulus: int = 12


class TransposeRequest(PcsRequest):
    t: int


class InvertRequest(PcsRequest):
    axis: int = 0


class EnumerateRequest(BaseModel):
    modulus: int = 12


class PcsResponse(BaseModel):
    pcs: list[int]
    modulus: int


class StabilizerResponse(BaseModel):
    transpositions: list[int]
    modulus: int


class PeriodResponse(BaseModel):
    period: int


class ModeInfo(BaseModel):
    index: int
    pcs: list[int]
    period: int
    note_names: list[str]


class ModesResponse(BaseModel):
    modes: list[ModeInfo]


class Truncation(BaseModel):
    mode: int
    transposition: int


class ClassifyResponse(BaseModel):
    pcs: list[int]
    modulus: int
    is_limited: bool
    period: int
    truncations: Optional[list[Truncation]] = None


class LimitedSubsetInfo(BaseModel):
    pcs: list[int]
    period: int
    degenerate: bool


class EnumerateResponse(BaseModel):
    modulus: int
    count: int
    subsets: list[LimitedSubsetInfo]
    # Closure audit, modulus 12 only: do all nondegenerate invariant
    # subsets arise as truncations of the seven modes?
    closure_nondegenerate: Optional[int] = None
    closure_classified: Optional[int] = None
    closure_holds: Optional[bool] = None


# --------------------------------------------------------------------------
# twelve-tone rows

class RowRequest(BaseModel):
    row: list[int]


class RowValidateResponse(BaseModel):
    valid: bool
    reason: Optional[str] = None


class RowForm(BaseModel):
    label: str
    row: list[int]


class RowFormsResponse(BaseModel):
    forms: list[RowForm]


# --------------------------------------------------------------------------
# rhythm

class RhythmRequest(BaseModel):
    durations: Durations


class AugmentRequest(RhythmRequest):
    factor: Rational


class AmplifyRequest(RhythmRequest):
    wing: Durations


class CentralRequest(RhythmRequest):
    delta: Rational


class DurationsResponse(BaseModel):
    durations: list[str]


class NrrResponse(BaseModel):
    non_retrogradable: bool


class TotalResponse(BaseModel):
    total: str
    is_integer: bool
    is_prime: Optional[bool] = None


class ChainResponse(BaseModel):
    found: bool
    block: Optional[list[str]] = None
    factors: Optional[list[str]] = None


class InterleaveResponse(BaseModel):
    odd: list[str]
    odd_shape: str
    even: list[str]
    even_shape: str


# --------------------------------------------------------------------------
# permutations

class PermSpec(BaseModel):
    """Exactly one of the three ways to name a permutation."""

    images: Optional[list[int]] = None
    fan: Optional[int] = None
    chronochromie: bool = False

    @model_validator(mode="after")
    def _exactly_one(self) -> "PermSpec":
        picked = sum(
            (self.images is not None, self.fan is not None,
             self.chronochromie)
        )
        if picked != 1:
            raise ValueError(
                "specify exactly one of: images, fan, chronochromie"
            )
        return self


class PermRequest(BaseModel):
    perm: PermSpec


class IterateRequest(BaseModel):
    perm: PermSpec
    sequence: Optional[list[str]] = None


class PermResponse(BaseModel):
    images: list[int]


class OrderResponse(BaseModel):
    order: int


class CyclesResponse(BaseModel):
    cycles: list[list[int]]


class IterateResponse(BaseModel):
    steps: int
    orbit: list[list[str]]


class ChronochromieResponse(BaseModel):
    images: list[int]
    cycles: list[list[int]]
    order: int
    order_by_iteration: int
    documented_return_steps: int
    matches_documented: bool


# --------------------------------------------------------------------------
# ratios

class CombineRequest(BaseModel):
    ratios: list[str] = Field(min_length=1)


class DifferenceRequest(BaseModel):
    a: str
    b: str


class RatioRequest(BaseModel):
    ratio: str


class SmoothRequest(BaseModel):
    primes: list[int] = Field(min_length=1)
    bound: int = 10**6


class DivcheckRequest(BaseModel):
    ratio: str
    parts: int


class VerifyRequest(BaseModel):
    factors: list[str] = Field(min_length=1)
    target: str


class MeansRequest(BaseModel):
    a: Rational
    b: Rational


class DecomposeRequest(BaseModel):
    ratio: str
    parts: int
    max_den: int


class RatioResponse(BaseModel):
    ratio: str


class FactorsResponse(BaseModel):
    factors: list[str]


class RatiosResponse(BaseModel):
    ratios: list[str]


class DivcheckResponse(BaseModel):
    divisible: bool


class VerifyResponse(BaseModel):
    ok: bool
    residual: Optional[str] = None


class MeansResponse(BaseModel):
    arithmetic: str
    geometric: Optional[str] = None
    geometric_is_rational: bool
    harmonic: str


class CentsResponse(BaseModel):
    cents: float


class DecomposeResponse(BaseModel):
    decompositions: list[list[str]]


# --------------------------------------------------------------------------
# catalog

class AnalyzeRequest(BaseModel):
    """Either inline corpus TSV or the bundled corpus."""

    tsv: Optional[str] = None
    bundled: bool = False

    @model_validator(mode="after")
    def _exactly_one(self) -> "AnalyzeRequest":
        if (self.tsv is None) == (not self.bundled):
            raise ValueError("specify exactly one of: tsv, bundled")
        return self


class EntryInfo(BaseModel):
    id: str
    name: Optional[str] = None
    durations: list[str]
    unit: str
    source: str


class BundledResponse(BaseModel):
    entries: list[EntryInfo]


class ReportInfo(BaseModel):
    id: str
    non_retrogradable: bool
    total: str
    total_is_integer: bool
    prime_total: bool
    scalar_chain: bool
    chain_block: Optional[list[str]] = None
    chain_factors: Optional[list[str]] = None
    interleave_pattern: bool
    odd_shape: str
    even_shape: str


class AnalyzeResponse(BaseModel):
    reports: list[ReportInfo]
    table: str
