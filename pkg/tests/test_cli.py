import io
import json

from dodeca.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_modes_list(capsys):
    code, out, err = run(capsys, "modes", "list")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == 7
    assert lines[0] == "mode 1  period 2  [0, 2, 4, 6, 8, 10]  C D E F♯ G♯ B♭"
    assert lines[4].startswith("mode 5  period 6  [0, 1, 5, 6, 7, 11]")


def test_modes_classify(capsys):
    code, out, _ = run(capsys, "modes", "classify", "[0, 3, 6, 9]")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "limited: true"
    assert lines[1] == "period: 3"
    assert lines[2].startswith("truncation of: mode 2 (t=1)")


def test_modes_classify_unrestricted(capsys):
    code, out, _ = run(capsys, "modes", "classify", "[0, 4, 7]")
    assert code == 0
    assert out.splitlines() == ["limited: false", "period: 12"]


def test_modes_enumerate(capsys):
    code, out, _ = run(capsys, "modes", "enumerate")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "count: 76"
    assert lines[1] == ("closure: 74/74 nondegenerate subsets are mode "
                        "truncations (holds: true)")
    assert lines[2] == "[] period 1 degenerate"
    assert len(lines) == 78


def test_pcs_commands(capsys):
    assert run(capsys, "pcs", "transpose", "[0, 4, 7]", "2")[1] == \
        "[2, 6, 9]\n"
    assert run(capsys, "pcs", "invert", "0 4 7")[1] == "[0, 5, 8]\n"
    assert run(capsys, "pcs", "stabilizer", "0,3,6,9")[1] == "0 3 6 9\n"
    assert run(capsys, "pcs", "period", "[0, 6]")[1] == "6\n"


def test_row_validate_exit_codes(capsys):
    code, out, _ = run(capsys, "row", "validate",
                       "0 11 3 4 8 7 9 5 6 1 2 10")
    assert (code, out) == (0, "valid\n")
    code, out, _ = run(capsys, "row", "validate", "0 1 2")
    assert code == 1
    assert out == "invalid: length 3 != 12\n"


def test_row_forms(capsys):
    code, out, _ = run(capsys, "row", "forms",
                       "0 11 3 4 8 7 9 5 6 1 2 10")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 48
    assert lines[0] == "P0: 0 11 3 4 8 7 9 5 6 1 2 10"
    assert lines[12].startswith("I0: 0 1 9 8 4 5 3 7 6 11 10 2")


def test_rhythm_commands(capsys):
    assert run(capsys, "rhythm", "nrr", "2 1 2")[1] == "true\n"
    assert run(capsys, "rhythm", "nrr", "1 2")[1] == "false\n"
    assert run(capsys, "rhythm", "augment", "2 1 2",
               "--factor", "3/2")[1] == "3 3/2 3\n"
    assert run(capsys, "rhythm", "amplify", "2 1 2",
               "--wing", "2 3")[1] == "2 3 2 1 2 3 2\n"
    assert run(capsys, "rhythm", "central", "2 1 2",
               "--delta=-1/2")[1] == "2 1/2 2\n"
    assert run(capsys, "rhythm", "total", "2 1 2")[1] == "5 (prime)\n"
    assert run(capsys, "rhythm", "total", "1 1 1 2 2 2")[1] == \
        "9 (not prime)\n"
    assert run(capsys, "rhythm", "total", "2 1/2 3")[1] == "11/2\n"
    assert run(capsys, "rhythm", "chain", "4 4 2 2 1 1")[1] == \
        "block: 4 4\nfactors: 1/2 1/2\n"
    assert run(capsys, "rhythm", "chain", "2 1 2")[1] == "none\n"
    assert run(capsys, "rhythm", "interleave",
               "1 3 2 3 3 3 2 3 1 3")[1] == \
        "odd: 1 2 3 2 1 (increasing-then-decreasing)\neven: 3 3 3 3 3 " \
        "(constant)\n"


def test_perm_commands(capsys):
    assert run(capsys, "perm", "fan", "5")[1] == "3 2 4 1 5\n"
    assert run(capsys, "perm", "order", "--fan", "4")[1] == "3\n"
    assert run(capsys, "perm", "cycles", "--images", "2 1 3")[1] == \
        "(1 2)(3)\n"
    code, out, _ = run(capsys, "perm", "iterate", "--fan", "3",
                       "--sequence", "a b c")
    assert code == 0
    assert out == "a b c\nb a c\n"


def test_perm_chronochromie(capsys):
    code, out, _ = run(capsys, "perm", "chronochromie")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("images: 3 28 5 30 7 32")
    assert lines[2] == "order: 36"
    assert lines[3] == "documented return steps: 35"
    assert lines[4] == "matches documented: false"


def test_ratio_commands(capsys):
    assert run(capsys, "ratio", "combine", "3/2", "4/3")[1] == "2/1\n"
    assert run(capsys, "ratio", "difference", "9/8", "10/9")[1] == \
        "81/80\n"
    assert run(capsys, "ratio", "split2", "9/8")[1] == "18/17 17/16\n"
    assert run(capsys, "ratio", "split3", "4/3")[1] == \
        "12/11 11/10 10/9\n"
    assert run(capsys, "ratio", "divcheck", "9/4", "2")[1] == "true\n"
    assert run(capsys, "ratio", "divcheck", "9/8", "2") == \
        (0, "false\n", "")
    assert run(capsys, "ratio", "means", "1", "2")[1] == \
        "arithmetic: 3/2\ngeometric: irrational\nharmonic: 4/3\n"
    assert run(capsys, "ratio", "means", "1", "4")[1] == \
        "arithmetic: 5/2\ngeometric: 2\nharmonic: 8/5\n"
    assert run(capsys, "ratio", "cents", "3/2")[1] == "701.955\n"
    assert run(capsys, "ratio", "decompose", "9/8", "2", "20")[1] == \
        "21/20 15/14\n18/17 17/16\n"


def test_ratio_smooth(capsys):
    code, out, _ = run(capsys, "ratio", "smooth", "--primes", "2,3,5")
    assert code == 0
    assert out.splitlines() == [
        "2/1", "3/2", "4/3", "5/4", "6/5",
        "9/8", "10/9", "16/15", "25/24", "81/80",
    ]


def test_ratio_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "ratio", "verify", "4/3",
                       "9/8", "8/7", "28/27")
    assert (code, out) == (0, "exact\n")
    code, out, _ = run(capsys, "ratio", "verify", "4/3", "9/8", "9/8")
    assert code == 1
    assert out == "residual: 243/256\n"


def test_catalog_analyze_bundled(capsys):
    code, out, _ = run(capsys, "catalog", "analyze", "--bundled")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["id", "nrr", "total", "prime", "chain",
                                "interleave"]
    assert len(lines) == 23
    row = next(ln for ln in lines if ln.startswith("tala-115"))
    assert "[4 4] x 1/2,1/2" in row


def test_catalog_analyze_file_and_stdin(capsys, tmp_path, monkeypatch):
    tsv = "a\tone\t2 1 2\nb\t\t1 2\n"
    path = tmp_path / "corpus.tsv"
    path.write_text(tsv, encoding="utf-8")
    code, from_file, _ = run(capsys, "catalog", "analyze", str(path))
    assert code == 0
    assert from_file.splitlines()[1].startswith("a")

    monkeypatch.setattr("sys.stdin", io.StringIO(tsv))
    code, from_stdin, _ = run(capsys, "catalog", "analyze", "-")
    assert code == 0
    assert from_stdin == from_file


def test_catalog_analyze_argument_conflicts(capsys, tmp_path):
    code, _, err = run(capsys, "catalog", "analyze")
    assert code == 2 and "usage error" in err
    path = tmp_path / "x.tsv"
    path.write_text("a\t\t1\n", encoding="utf-8")
    code, _, err = run(capsys, "catalog", "analyze", str(path),
                       "--bundled")
    assert code == 2 and "usage error" in err


def test_catalog_analyze_missing_file(capsys):
    code, _, err = run(capsys, "catalog", "analyze", "no-such-file.tsv")
    assert code == 1
    assert err.startswith("error:")


def test_domain_error_exits_1(capsys):
    code, out, err = run(capsys, "modes", "enumerate", "--modulus", "99")
    assert code == 1 and out == ""
    assert err.startswith("error:") and "24" in err


def test_bad_argument_exits_2(capsys):
    code, _, err = run(capsys, "pcs", "period", "[0, x]")
    assert code == 2
    assert err.startswith("usage error:")


def test_unknown_subcommand_exits_2(capsys):
    assert run(capsys, "modes", "frobnicate")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_perm_spec_is_mutually_exclusive(capsys):
    code, _, _ = run(capsys, "perm", "order", "--fan", "4",
                     "--images", "1 2")
    assert code == 2
    assert run(capsys, "perm", "order")[0] == 2


def test_json_output(capsys):
    code, out, _ = run(capsys, "rhythm", "total", "2 1 2", "--json")
    assert code == 0
    assert json.loads(out) == {"total": "5", "is_integer": True,
                               "is_prime": True}
    keys = list(json.loads(out))
    assert keys == sorted(keys)


def test_repeat_invocations_are_byte_identical(capsys):
    first = run(capsys, "modes", "list")
    second = run(capsys, "modes", "list")
    assert first == second


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    assert "modes" in capsys.readouterr().out
