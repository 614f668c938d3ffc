import pytest
from hypothesis import given, strategies as st

from dodeca.counterpoint import (
    CentSequence,
    PcSequence,
    SymbolSeries,
    intensity_alphabet,
    invert_seq,
    octave_shift,
    parse_pc_sequence,
    retrograde_seq,
    row_forms,
    scale_intervals,
    transpose_seq,
    validate_row,
)
from dodeca.rhythm import DurationSequence

ROW = (0, 11, 3, 4, 8, 7, 9, 5, 6, 1, 2, 10)


def test_parse_integers_and_note_names():
    assert parse_pc_sequence("0 4 7").items == (0, 4, 7)
    assert parse_pc_sequence("C E G").items == (0, 4, 7)
    assert parse_pc_sequence("C F♯ Bb").items == (0, 6, 10)


def test_note_names_need_modulus_12():
    with pytest.raises(ValueError):
        parse_pc_sequence("C E G", modulus=10)
    assert parse_pc_sequence("0 4 7", modulus=10).items == (0, 4, 7)


def test_items_reduced_mod_n():
    assert PcSequence((12, 13, -1)).items == (0, 1, 11)


def test_transpose_and_invert():
    melody = PcSequence((0, 4, 7))
    assert transpose_seq(melody, 2).items == (2, 6, 9)
    assert invert_seq(melody, 0).items == (0, 8, 5)


def test_retrograde_dispatch():
    assert retrograde_seq(PcSequence((0, 4, 7))).items == (7, 4, 0)
    assert retrograde_seq((1, 2, 3)) == (3, 2, 1)
    d = DurationSequence.of([1, 2, 3])
    assert retrograde_seq(d).values == d.values[::-1]
    series = SymbolSeries(intensity_alphabet(), (0, 3, 6))
    assert retrograde_seq(series).items == (6, 3, 0)
    cents = CentSequence((0.0, 700.0))
    assert retrograde_seq(cents).pitches == (700.0, 0.0)


@given(st.lists(st.integers(0, 11), min_size=1, max_size=24))
def test_retrograde_is_involution(items):
    seq = PcSequence(tuple(items))
    assert retrograde_seq(retrograde_seq(seq)) == seq


@given(st.lists(st.integers(0, 11), min_size=1, max_size=24),
       st.integers(-12, 12), st.integers(-12, 12))
def test_transpositions_compose(items, s, t):
    seq = PcSequence(tuple(items))
    assert transpose_seq(transpose_seq(seq, s), t) == \
        transpose_seq(seq, s + t)


# -- rows ---------------------------------------------------------------------

def test_validate_row():
    assert validate_row(PcSequence(ROW))
    assert not validate_row(PcSequence((0, 1, 2)))
    assert not validate_row(PcSequence(ROW[:11] + (0,)))


def test_validate_row_needs_modulus_12():
    with pytest.raises(ValueError):
        validate_row(PcSequence((0, 1, 2), modulus=3))


def test_row_forms_are_48_labeled():
    forms = row_forms(PcSequence(ROW))
    assert len(forms) == 48
    labels = [f.label for f in forms]
    assert labels[0] == "P0" and labels[12] == "I0"
    assert labels[24] == "R0" and labels[36] == "RI0"
    assert len(set(labels)) == 48


def test_prime_zero_is_the_input():
    forms = {f.label: f.row for f in row_forms(PcSequence(ROW))}
    assert forms["P0"].items == ROW


def test_inversion_fixes_the_first_pitch_class():
    forms = {f.label: f.row for f in row_forms(PcSequence(ROW))}
    assert forms["I0"].items[0] == ROW[0]
    # interval sequence is negated
    p0, i0 = forms["P0"].items, forms["I0"].items
    for a, b, c, d in zip(p0, p0[1:], i0, i0[1:]):
        assert (b - a) % 12 == (c - d) % 12


def test_retrograde_forms_reverse_their_primes():
    forms = {f.label: f.row for f in row_forms(PcSequence(ROW))}
    for t in range(12):
        assert forms[f"R{t}"].items == forms[f"P{t}"].items[::-1]
        assert forms[f"RI{t}"].items == forms[f"I{t}"].items[::-1]


def test_every_form_is_a_valid_row():
    for f in row_forms(PcSequence(ROW)):
        assert validate_row(f.row), f.label


def test_row_forms_rejects_invalid_input():
    with pytest.raises(ValueError, match="twelve-tone row"):
        row_forms(PcSequence((0, 1, 2)))


# -- intensities and cents ------------------------------------------------------

def test_intensity_alphabet_has_seven_grades():
    alphabet = intensity_alphabet()
    assert len(alphabet) == 7
    assert alphabet[0] == "ppp" and alphabet[-1] == "fff"


def test_symbol_series_bounds_checked():
    with pytest.raises(ValueError):
        SymbolSeries(intensity_alphabet(), (0, 7))


def test_scale_intervals_anchors_at_first_pitch():
    c = CentSequence((100.0, 200.0, 400.0))
    out = scale_intervals(c, 2)
    assert out.pitches == (100.0, 300.0, 700.0)


def test_scale_intervals_fraction_and_errors():
    from fractions import Fraction
    c = CentSequence((0.0, 600.0))
    assert scale_intervals(c, Fraction(1, 2)).pitches == (0.0, 300.0)
    with pytest.raises(ValueError):
        scale_intervals(c, 0)


def test_octave_shift():
    c = CentSequence((0.0, 700.0))
    assert octave_shift(c, 1).pitches == (1200.0, 1900.0)
    assert octave_shift(c, -1).pitches == (-1200.0, -500.0)
