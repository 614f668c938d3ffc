import pytest
from hypothesis import given, strategies as st

from dodeca.perms import (
    CHRONOCHROMIE_DOCUMENTED_RETURN_STEPS,
    Perm,
    apply,
    chronochromie,
    cycles,
    fan_perm,
    inverse,
    load_perm_file,
    orbit_of_sequence,
    order,
    order_by_iteration,
    parse_perm_lines,
)


def test_perm_validates_bijection():
    with pytest.raises(ValueError):
        Perm((1, 1, 3))
    with pytest.raises(ValueError):
        Perm((0, 1, 2))
    with pytest.raises(ValueError):
        Perm(())


def test_fan_images():
    assert fan_perm(1).images == (1,)
    assert fan_perm(2).images == (1, 2)
    assert fan_perm(3).images == (2, 1, 3)
    assert fan_perm(4).images == (2, 3, 1, 4)
    assert fan_perm(5).images == (3, 2, 4, 1, 5)
    assert fan_perm(6).images == (3, 4, 2, 5, 1, 6)


def test_fan_reads_center_outward():
    assert apply(fan_perm(5), "abcde") == "cbdae"
    assert apply(fan_perm(4), ["w", "x", "y", "z"]) == ["x", "y", "w", "z"]


def test_fan_orders():
    assert order(fan_perm(3)) == 2
    assert order(fan_perm(4)) == 3


def test_apply_checks_length():
    with pytest.raises(ValueError):
        apply(fan_perm(3), "ab")


def test_inverse_composes_to_identity():
    p = fan_perm(7)
    q = inverse(p)
    assert apply(q, apply(p, tuple(range(7)))) == tuple(range(7))


def test_cycles_of_small_perm():
    assert cycles(Perm((2, 1, 3))) == ((1, 2), (3,))
    assert cycles(Perm((2, 3, 1))) == ((1, 2, 3),)


def test_order_by_iteration_matches_cycle_arithmetic():
    for n in range(1, 12):
        p = fan_perm(n)
        assert order_by_iteration(p) == order(p)


def test_order_by_iteration_respects_limit():
    with pytest.raises(ValueError, match="iterations"):
        order_by_iteration(Perm((2, 3, 1)), limit=2)


@given(st.permutations(list(range(1, 9))))
def test_order_annihilates(images):
    p = Perm(tuple(images))
    k = order(p)
    state = tuple(range(1, 9))
    for _ in range(k):
        state = tuple(apply(p, state))
    assert state == tuple(range(1, 9))


# -- the 32-duration interversion table -----------------------------------------

def test_chronochromie_is_a_32_element_bijection():
    p = chronochromie()
    assert p.n == 32
    assert sorted(p.images) == list(range(1, 33))


def test_chronochromie_cycle_structure():
    assert cycles(chronochromie()) == (
        (1, 3, 5, 7, 26, 10),
        (2, 28, 11, 8),
        (4, 30, 14, 23, 31, 12, 24, 6, 32, 13, 9, 25, 29, 15, 16, 17, 18, 22),
        (19, 21, 20),
        (27,),
    )


def test_chronochromie_order_is_36_not_the_documented_35():
    p = chronochromie()
    assert order(p) == 36
    assert order_by_iteration(p) == 36
    # the claim circulating in commentary says 35; the computation
    # disagrees, and both numbers stay visible
    assert CHRONOCHROMIE_DOCUMENTED_RETURN_STEPS == 35
    assert order(p) != CHRONOCHROMIE_DOCUMENTED_RETURN_STEPS


def test_orbit_of_sequence_closes_after_order_steps():
    p = fan_perm(4)
    orbit = orbit_of_sequence(p, ("a", "b", "c", "d"))
    assert len(orbit) == order(p)
    assert orbit[0] == ("a", "b", "c", "d")
    assert len(set(orbit)) == len(orbit)


def test_orbit_can_be_shorter_when_values_repeat():
    p = fan_perm(3)  # order 2
    orbit = orbit_of_sequence(p, ("x", "x", "y"))
    assert orbit == [("x", "x", "y")]


def test_orbit_checks_length():
    with pytest.raises(ValueError):
        orbit_of_sequence(fan_perm(3), ("a",))


# -- file format -----------------------------------------------------------------

def test_parse_perm_lines():
    text = "# comment\n2 1 3\n\n3,1,2\n"
    perms = parse_perm_lines(text)
    assert [p.images for p in perms] == [(2, 1, 3), (3, 1, 2)]


def test_parse_perm_lines_reports_line_numbers():
    with pytest.raises(ValueError, match="line 2"):
        parse_perm_lines("1 2\n2 2\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_perm_lines("1 x\n")


def test_load_perm_file(tmp_path):
    path = tmp_path / "perms.txt"
    path.write_text("2 3 1\n", encoding="utf-8")
    assert load_perm_file(path)[0].images == (2, 3, 1)
