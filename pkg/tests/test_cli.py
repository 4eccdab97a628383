"""The text format and the command-line wrappers."""

import json
from pathlib import Path

import pytest

from groebner import GF, LEX, QQ
from groebner.cli import main
from groebner.parser import (
    ParseError,
    parse_ideal_file,
    parse_polynomial,
    print_ideal_file,
)

DATA = Path(__file__).parent / "data"
CUBIC = str(DATA / "twisted_cubic.id")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def test_parse_twisted_cubic_file():
    ideal = parse_ideal_file((DATA / "twisted_cubic.id").read_text(), order=LEX)
    assert ideal.ring.names == ("w", "x", "y", "z")
    assert ideal.ring.field == QQ
    w, x, y, z = ideal.ring.variables()
    assert ideal.generators[0] == w * w - x * y


def test_parse_print_round_trip():
    text = (DATA / "twisted_cubic.id").read_text()
    ideal = parse_ideal_file(text, order=LEX)
    printed = print_ideal_file(ideal)
    reparsed = parse_ideal_file(printed, order=LEX)
    assert reparsed.entries == ideal.entries
    assert print_ideal_file(reparsed) == printed


def test_round_trip_with_rational_coefficients():
    text = "field QQ\nring x y\nf = 1/2*x^2 - 3*y^2\n"
    ideal = parse_ideal_file(text)
    assert print_ideal_file(parse_ideal_file(print_ideal_file(ideal))) == print_ideal_file(ideal)


def test_round_trip_prime_field():
    text = "field Fp:7\nring x y\nf = 6*x + y\n"
    ideal = parse_ideal_file(text)
    reparsed = parse_ideal_file(print_ideal_file(ideal))
    assert reparsed.generators == ideal.generators


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_ideal_file("field QQ\nring x y\nf = x^-1\n")
    assert "line 3" in str(err.value)
    with pytest.raises(ParseError):
        parse_ideal_file("field QQ\nring x y\nf = 2x\n")  # implicit product
    with pytest.raises(ParseError):
        parse_ideal_file("field QQ\nring x y\nf = x + q\n")  # unknown variable
    with pytest.raises(ParseError):
        parse_ideal_file("field Fp:10\nring x\nf = x\n")  # composite modulus
    with pytest.raises(ParseError):
        parse_ideal_file("ring x\nfield QQ\nf = x\n")


def test_empty_polynomial_list_is_zero_ideal():
    ideal = parse_ideal_file("field QQ\nring x y\n")
    assert ideal.generators == []


def test_field_override():
    text = "field QQ\nring x y\nf = 3*x - y\n"
    ideal = parse_ideal_file(text, field_override=GF(32003))
    assert ideal.ring.field == GF(32003)


def test_parse_polynomial_helper():
    ideal = parse_ideal_file("field QQ\nring x y\n")
    f = parse_polynomial("x^2 - 2*y", ideal.ring)
    x, y = ideal.ring.variables()
    assert f == x * x - y - y


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def test_gb_command_lex(capsys):
    rc = main(["gb", "--order", "lex", CUBIC])
    out = capsys.readouterr().out
    assert rc == 0
    assert out == (DATA / "twisted_cubic.gb.lex.golden").read_text()


def test_hilbert_command(capsys):
    rc = main(["hilbert", "--dmax", "10", CUBIC])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert out == "1,4,7,10,13,16,19,22,25,28,31"


def test_hilbert_command_zero_ideal(tmp_path, capsys):
    f = tmp_path / "zero.id"
    f.write_text("field QQ\nring x y z\n")
    rc = main(["hilbert", "--dmax", "4", str(f)])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert out == "1,3,6,10,15"


def test_member_json_schema(capsys):
    rc = main(["member", "--poly", "w^2 - x*y", "--json", CUBIC])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"order", "field", "generators", "result", "timings"}
    assert payload["result"]["member"] is True
    assert payload["result"]["certificate"][0] == "1"


def test_degree_cap_exit_code(capsys):
    rc = main(["gb", "--order", "lex", "--degree-cap", "2", CUBIC])
    capsys.readouterr()
    assert rc == 2


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.id"
    bad.write_text("field QQ\nring x\nf = x^-1\n")
    rc = main(["gb", str(bad)])
    err = capsys.readouterr().err
    assert rc == 1
    assert "parse error" in err


def test_eliminate_command(capsys):
    rc = main(["eliminate", "--keep", "x", "--order", "lex", CUBIC])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert len(out) == 1
    assert set(out[0].replace(" ", "")) <= set("xyz^123*+-")


def test_regularity_and_betti_commands(capsys):
    rc = main(["regularity", CUBIC])
    out = capsys.readouterr().out
    assert rc == 0 and "regularity: 2" in out
    rc = main(["betti", "--json", CUBIC])
    payload = json.loads(capsys.readouterr().out)
    assert {"i": 0, "j": 2, "beta": 3} in payload["result"]
    assert {"i": 1, "j": 3, "beta": 2} in payload["result"]


def test_degenerate_command(capsys):
    rc = main(["degenerate", "--weights=-16,-4,-1,0", "--order", "lex", "--json", CUBIC])
    payload = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert payload["result"]["flat"] is True
    texps = [
        [t["t_exp"] for t in gen] for gen in payload["result"]["family"]["generators"]
    ]
    assert texps == [[0, 27], [0, 13], [0, 14], [0, 1]]


def test_mayr_meyer_emits_parseable_file(capsys):
    rc = main(["mayr-meyer", "-n", "1", "--homogeneous"])
    out = capsys.readouterr().out
    assert rc == 0
    ideal = parse_ideal_file(out)
    assert ideal.ring.nvars == 11
    assert len(ideal.generators) == 4


def test_saturate_quotient_inideal_commands(tmp_path, capsys):
    f = tmp_path / "sat.id"
    f.write_text("field QQ\nring x0 x1 x2\nf1 = x1^2\nf2 = x1*x2\n")
    rc = main(["saturate", str(f)])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "x1"
    rc = main(["quotient", "--poly", "x2", str(f)])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "x1"
    rc = main(["inideal", "--order", "lex", CUBIC])
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["w^2", "w*y", "w*z", "x*z^2"]


def test_bs_regular_command(capsys):
    rc = main(["bs-regular", "--m", "2", "--field", "Fp:32003", CUBIC])
    out = capsys.readouterr().out.strip()
    assert rc == 0 and out == "regular"
