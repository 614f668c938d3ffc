"""The ASGI application: one endpoint per library operation.

Domain errors (ValueError from the core modules) become HTTP 400 with
the module's message; malformed request bodies are FastAPI's usual 422.
All handlers are pure functions of their inputs.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..catalog import bundled_corpus, parse_corpus, report_corpus
from ..counterpoint import PcSequence, row_forms, validate_row
from ..modes import (
    classify_truncation,
    closure_audit,
    enumerate_limited,
    is_limited_transposition,
    messiaen_modes,
)
from ..perms import (
    CHRONOCHROMIE_DOCUMENTED_RETURN_STEPS,
    Perm,
    chronochromie,
    cycles,
    fan_perm,
    order,
    order_by_iteration,
    orbit_of_sequence,
)
from ..pitchclass import (
    PitchClassSet,
    invert_set,
    minimal_period,
    stabilizer,
    transpose_set,
)
from ..ratios import (
    Ratio,
    cents,
    combine,
    decompositions,
    difference,
    geometric_division_exists,
    means,
    smooth_superparticulars,
    split2,
    split3,
    verify_division,
)
from ..rhythm import (
    DurationSequence,
    augment,
    detect_scalar_chain,
    interleave_analysis,
    is_non_retrogradable,
    modify_central,
    parse_durations,
    symmetric_amplify,
    total,
)
from . import schemas as s


def _pcset(pcs: list[int], modulus: int) -> PitchClassSet:
    return PitchClassSet.from_members(pcs, modulus=modulus)


def _seq(durations: s.Durations) -> DurationSequence:
    if isinstance(durations, str):
        return parse_durations(durations)
    return DurationSequence.of([Fraction(str(v)) for v in durations])


def _ratio(text: str) -> Ratio:
    return Ratio.parse(text)


def _strs(values) -> list[str]:
    return [str(v) for v in values]


def _perm(spec: s.PermSpec) -> Perm:
    if spec.images is not None:
        return Perm(tuple(spec.images))
    if spec.fan is not None:
        return fan_perm(spec.fan)
    return chronochromie()


def create_app() -> FastAPI:
    app = FastAPI(
        title="dodeca",
        version=__version__,
        description="Exact pitch-class, rhythm, permutation, and "
                    "interval-ratio computations.",
    )

    @app.exception_handler(ValueError)
    async def _domain_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    # -- modes ------------------------------------------------------------

    @app.get("/api/modes", response_model=s.ModesResponse)
    def list_modes() -> s.ModesResponse:
        return s.ModesResponse(modes=[
            s.ModeInfo(
                index=m.index,
                pcs=sorted(m.pcs.members),
                period=m.period,
                note_names=list(m.note_names),
            )
            for m in messiaen_modes()
        ])

    @app.post("/api/modes/classify", response_model=s.ClassifyResponse)
    def classify(req: s.PcsRequest) -> s.ClassifyResponse:
        pcset = _pcset(req.pcs, req.modulus)
        limited = is_limited_transposition(pcset)
        truncations = None
        if limited and req.modulus == 12:
            truncations = [
                s.Truncation(mode=i, transposition=t)
                for i, t in classify_truncation(pcset)
            ]
        return s.ClassifyResponse(
            pcs=sorted(pcset.members),
            modulus=req.modulus,
            is_limited=limited,
            period=minimal_period(pcset),
            truncations=truncations,
        )

    @app.post("/api/modes/enumerate", response_model=s.EnumerateResponse)
    def enumerate_(req: s.EnumerateRequest) -> s.EnumerateResponse:
        subsets = enumerate_limited(req.modulus)
        audit = closure_audit() if req.modulus == 12 else None
        return s.EnumerateResponse(
            modulus=req.modulus,
            count=len(subsets),
            subsets=[
                s.LimitedSubsetInfo(
                    pcs=sorted(sub.pcs.members),
                    period=sub.period,
                    degenerate=sub.degenerate,
                )
                for sub in subsets
            ],
            closure_nondegenerate=None if audit is None else audit.nondegenerate,
            closure_classified=None if audit is None else audit.classified,
            closure_holds=None if audit is None else audit.holds,
        )

    # -- pitch-class sets --------------------------------------------------

    @app.post("/api/pcs/transpose", response_model=s.PcsResponse)
    def pcs_transpose(req: s.TransposeRequest) -> s.PcsResponse:
        out = transpose_set(_pcset(req.pcs, req.modulus), req.t)
        return s.PcsResponse(pcs=sorted(out.members), modulus=req.modulus)

    @app.post("/api/pcs/invert", response_model=s.PcsResponse)
    def pcs_invert(req: s.InvertRequest) -> s.PcsResponse:
        out = invert_set(_pcset(req.pcs, req.modulus), req.axis)
        return s.PcsResponse(pcs=sorted(out.members), modulus=req.modulus)

    @app.post("/api/pcs/stabilizer", response_model=s.StabilizerResponse)
    def pcs_stabilizer(req: s.PcsRequest) -> s.StabilizerResponse:
        st = stabilizer(_pcset(req.pcs, req.modulus))
        return s.StabilizerResponse(
            transpositions=sorted(st), modulus=req.modulus
        )

    @app.post("/api/pcs/period", response_model=s.PeriodResponse)
    def pcs_period(req: s.PcsRequest) -> s.PeriodResponse:
        return s.PeriodResponse(
            period=minimal_period(_pcset(req.pcs, req.modulus))
        )

    # -- rows ---------------------------------------------------------------

    @app.post("/api/row/validate", response_model=s.RowValidateResponse)
    def row_validate(req: s.RowRequest) -> s.RowValidateResponse:
        seq = PcSequence(tuple(req.row))
        if validate_row(seq):
            return s.RowValidateResponse(valid=True)
        if len(seq.items) != 12:
            reason = f"length {len(seq.items)} != 12"
        else:
            reason = "pitch classes repeat"
        return s.RowValidateResponse(valid=False, reason=reason)

    @app.post("/api/row/forms", response_model=s.RowFormsResponse)
    def row_forms_(req: s.RowRequest) -> s.RowFormsResponse:
        forms = row_forms(PcSequence(tuple(req.row)))
        return s.RowFormsResponse(forms=[
            s.RowForm(label=f.label, row=list(f.row.items)) for f in forms
        ])

    # -- rhythm ---------------------------------------------------------------

    @app.post("/api/rhythm/nrr", response_model=s.NrrResponse)
    def rhythm_nrr(req: s.RhythmRequest) -> s.NrrResponse:
        return s.NrrResponse(
            non_retrogradable=is_non_retrogradable(_seq(req.durations))
        )

    @app.post("/api/rhythm/augment", response_model=s.DurationsResponse)
    def rhythm_augment(req: s.AugmentRequest) -> s.DurationsResponse:
        out = augment(_seq(req.durations), Fraction(str(req.factor)))
        return s.DurationsResponse(durations=_strs(out.values))

    @app.post("/api/rhythm/amplify", response_model=s.DurationsResponse)
    def rhythm_amplify(req: s.AmplifyRequest) -> s.DurationsResponse:
        out = symmetric_amplify(_seq(req.durations), _seq(req.wing))
        return s.DurationsResponse(durations=_strs(out.values))

    @app.post("/api/rhythm/central", response_model=s.DurationsResponse)
    def rhythm_central(req: s.CentralRequest) -> s.DurationsResponse:
        out = modify_central(_seq(req.durations), Fraction(str(req.delta)))
        return s.DurationsResponse(durations=_strs(out.values))

    @app.post("/api/rhythm/total", response_model=s.TotalResponse)
    def rhythm_total(req: s.RhythmRequest) -> s.TotalResponse:
        t = total(_seq(req.durations))
        return s.TotalResponse(
            total=str(t.total), is_integer=t.is_integer, is_prime=t.is_prime
        )

    @app.post("/api/rhythm/chain", response_model=s.ChainResponse)
    def rhythm_chain(req: s.RhythmRequest) -> s.ChainResponse:
        chain = detect_scalar_chain(_seq(req.durations))
        if chain is None:
            return s.ChainResponse(found=False)
        return s.ChainResponse(
            found=True,
            block=_strs(chain.block.values),
            factors=_strs(chain.factors),
        )

    @app.post("/api/rhythm/interleave", response_model=s.InterleaveResponse)
    def rhythm_interleave(req: s.RhythmRequest) -> s.InterleaveResponse:
        ia = interleave_analysis(_seq(req.durations))
        return s.InterleaveResponse(
            odd=_strs(ia.odd.values),
            odd_shape=ia.odd_shape,
            even=_strs(ia.even.values),
            even_shape=ia.even_shape,
        )

    # -- permutations -----------------------------------------------------

    @app.get("/api/perm/fan/{n}", response_model=s.PermResponse)
    def perm_fan(n: int) -> s.PermResponse:
        return s.PermResponse(images=list(fan_perm(n).images))

    @app.post("/api/perm/order", response_model=s.OrderResponse)
    def perm_order(req: s.PermRequest) -> s.OrderResponse:
        return s.OrderResponse(order=order(_perm(req.perm)))

    @app.post("/api/perm/cycles", response_model=s.CyclesResponse)
    def perm_cycles(req: s.PermRequest) -> s.CyclesResponse:
        return s.CyclesResponse(
            cycles=[list(c) for c in cycles(_perm(req.perm))]
        )

    @app.post("/api/perm/iterate", response_model=s.IterateResponse)
    def perm_iterate(req: s.IterateRequest) -> s.IterateResponse:
        p = _perm(req.perm)
        seq = req.sequence
        if seq is None:
            seq = [str(i) for i in range(1, p.n + 1)]
        orbit = orbit_of_sequence(p, seq)
        return s.IterateResponse(
            steps=len(orbit), orbit=[list(state) for state in orbit]
        )

    @app.get("/api/perm/chronochromie",
             response_model=s.ChronochromieResponse)
    def perm_chronochromie() -> s.ChronochromieResponse:
        p = chronochromie()
        k = order(p)
        return s.ChronochromieResponse(
            images=list(p.images),
            cycles=[list(c) for c in cycles(p)],
            order=k,
            order_by_iteration=order_by_iteration(p),
            documented_return_steps=CHRONOCHROMIE_DOCUMENTED_RETURN_STEPS,
            matches_documented=(
                k == CHRONOCHROMIE_DOCUMENTED_RETURN_STEPS
            ),
        )

    # -- ratios -------------------------------------------------------------

    @app.post("/api/ratio/combine", response_model=s.RatioResponse)
    def ratio_combine(req: s.CombineRequest) -> s.RatioResponse:
        out = _ratio(req.ratios[0])
        for text in req.ratios[1:]:
            out = combine(out, _ratio(text))
        return s.RatioResponse(ratio=str(out))

    @app.post("/api/ratio/difference", response_model=s.RatioResponse)
    def ratio_difference(req: s.DifferenceRequest) -> s.RatioResponse:
        return s.RatioResponse(
            ratio=str(difference(_ratio(req.a), _ratio(req.b)))
        )

    @app.post("/api/ratio/split2", response_model=s.FactorsResponse)
    def ratio_split2(req: s.RatioRequest) -> s.FactorsResponse:
        return s.FactorsResponse(factors=_strs(split2(_ratio(req.ratio))))

    @app.post("/api/ratio/split3", response_model=s.FactorsResponse)
    def ratio_split3(req: s.RatioRequest) -> s.FactorsResponse:
        return s.FactorsResponse(factors=_strs(split3(_ratio(req.ratio))))

    @app.post("/api/ratio/smooth", response_model=s.RatiosResponse)
    def ratio_smooth(req: s.SmoothRequest) -> s.RatiosResponse:
        found = smooth_superparticulars(req.primes, req.bound)
        return s.RatiosResponse(ratios=_strs(found))

    @app.post("/api/ratio/divcheck", response_model=s.DivcheckResponse)
    def ratio_divcheck(req: s.DivcheckRequest) -> s.DivcheckResponse:
        return s.DivcheckResponse(
            divisible=geometric_division_exists(_ratio(req.ratio), req.parts)
        )

    @app.post("/api/ratio/verify", response_model=s.VerifyResponse)
    def ratio_verify(req: s.VerifyRequest) -> s.VerifyResponse:
        check = verify_division(
            [_ratio(f) for f in req.factors], _ratio(req.target)
        )
        return s.VerifyResponse(
            ok=check.ok,
            residual=None if check.residual is None else str(check.residual),
        )

    @app.post("/api/ratio/means", response_model=s.MeansResponse)
    def ratio_means(req: s.MeansRequest) -> s.MeansResponse:
        m = means(Fraction(str(req.a)), Fraction(str(req.b)))
        return s.MeansResponse(
            arithmetic=str(m.arithmetic),
            geometric=None if m.geometric is None else str(m.geometric),
            geometric_is_rational=m.geometric_is_rational,
            harmonic=str(m.harmonic),
        )

    @app.post("/api/ratio/cents", response_model=s.CentsResponse)
    def ratio_cents(req: s.RatioRequest) -> s.CentsResponse:
        return s.CentsResponse(cents=cents(_ratio(req.ratio)))

    @app.post("/api/ratio/decompose", response_model=s.DecomposeResponse)
    def ratio_decompose(req: s.DecomposeRequest) -> s.DecomposeResponse:
        found = decompositions(_ratio(req.ratio), req.parts, req.max_den)
        return s.DecomposeResponse(
            decompositions=[_strs(fs) for fs in found]
        )

    # -- catalog -----------------------------------------------------------

    @app.get("/api/catalog/bundled", response_model=s.BundledResponse)
    def catalog_bundled() -> s.BundledResponse:
        return s.BundledResponse(entries=[
            s.EntryInfo(
                id=e.id,
                name=e.name,
                durations=_strs(e.durations.values),
                unit=e.durations.unit,
                source=e.source,
            )
            for e in bundled_corpus()
        ])

    @app.post("/api/catalog/analyze", response_model=s.AnalyzeResponse)
    def catalog_analyze(req: s.AnalyzeRequest) -> s.AnalyzeResponse:
        if req.bundled:
            entries = bundled_corpus()
        else:
            entries = parse_corpus(req.tsv or "", source="<request>")
        report = report_corpus(entries)
        return s.AnalyzeResponse(
            reports=[
                s.ReportInfo(**r.json_payload()) for r in report.reports
            ],
            table=report.table(),
        )

    return app


app = create_app()
