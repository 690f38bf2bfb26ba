from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regdecomp.errors import SessionError
from regdecomp.session import (
    Ref,
    format_session,
    parse_session,
    tokenize,
)

from conftest import polynomials


def test_basic_session():
    s = parse_session("ring Q[x,y]; seq X=(x,y); sweep X total<=6;")
    assert s.ring.variable_names == ("x", "y")
    assert s.binding("X").kind == "seq" and len(s.binding("X").value) == 2
    cmd = s.command
    assert cmd.name == "sweep" and cmd.target == Ref("X")
    assert cmd.param("total") == 6 and cmd.params[0].op == "<="


def test_flagship_session_and_optional_semicolon():
    s = parse_session("ring Q[a,b,c,d]; seq X=(a*b,c*d); sweep X total<=10")
    a, b, c, d = s.ring.gens()
    assert s.binding("X").value == (a * b, c * d)
    assert s.command.param("total") == 10


def test_prime_field_and_let():
    s = parse_session("""
        ring F7[x,y];   # small field
        let f = 3x^2 - 1/2*y;
        let g = f*x + 8;
        artin-rees g P=(x,y) hmax=4;
    """)
    x, y = s.ring.gens()
    f = s.binding("f").value
    assert str(s.ring.field) == "F7"
    assert f == 3 * x**2 - Fraction(1, 2) * y
    assert s.binding("g").value == f * x + 1
    # integer parameters are never reduced mod p
    assert s.command.param("hmax") == 4 and s.command.name == "artin-rees"


def test_ideal_binding_and_inline_target():
    s = parse_session("ring Q[x,y,z]; ideal I = (x*y, y*z, z*x); power-sweep I n<=4;")
    assert s.binding("I").kind == "ideal"
    s = parse_session("ring Q[x,y]; decompose (x, y) n=(2,3);")
    assert len(s.command.target) == 2 and s.command.param("n") == (2, 3)


@pytest.mark.parametrize("text,line,column,fragment", [
    ("ring Q[x];\nlet f = y;", 2, 9, "y"),
    ("ring Q[x];\nsweep Y total<=3;", 2, 7, "Y"),
    ("ring Q[x]; let f = x +;", 1, 23, ""),
    ("ring Q[x];\n  let f = x $ 1;", 2, 13, "$"),
    ("ring F6[x]; seq X=(x); sweep X total<=2;", 1, 6, ""),
    ("ring Q[x]; ring Q[y]; sweep (x) total<=2;", 1, 12, ""),
    ("ring Q[x]; seq X=(x);", 1, 22, ""),
    ("seq X=(x); sweep X total<=2;", 1, 1, ""),
    ("ring Q[x]; frobnicate (x);", 1, 12, "frobnicate"),
])
def test_errors_carry_position(text, line, column, fragment):
    with pytest.raises(SessionError) as info:
        parse_session(text)
    err = info.value
    assert (err.line, err.column) == (line, column)
    assert str(err).startswith(f"line {line}, column {column}: ")
    assert fragment in str(err)


def test_tokenizer_positions():
    toks = tokenize("ring Q[x];\n  seq X = (x);")
    seq_tok = next(t for t in toks if t.text == "seq")
    assert (seq_tok.line, seq_tok.column) == (2, 3)
    assert toks[-1].kind == "eof"


ROUND_TRIP = [
    "ring Q[x,y]; seq X=(x,y); sweep X total<=6;",
    "ring Q[a,b,c,d]; seq X=(a*b,c*d); sweep X total<=8;",
    "ring F32003[x,y,z]; let f = 2*x - 1/3*y^2; ideal P=(x,y); artin-rees f P=(x,y) hmax=5 ccap=7;",
    "ring Q[x,y,z]; seq X=(x, y*(1-x), z*(1-x)); check-regseq X bound=3;",
    "ring Q[x,y]; colon-check (x,y) n=(2,1) i=1;",
    "ring Q[x,y,z]; ideal I=(x*y,y*z,z*x); power-sweep I n<=4",
]


@pytest.mark.parametrize("text", ROUND_TRIP)
def test_round_trip(text):
    s = parse_session(text)
    again = parse_session(format_session(s))
    assert again == s
    assert format_session(again) == format_session(s)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_round_trip_random_polynomials(data):
    base = parse_session("ring Q[x,y,z]; decompose (x) n=(1);")
    f = data.draw(polynomials(base.ring))
    text = f"ring Q[x,y,z]; let f = {f}; artin-rees f P=(x,y);"
    if not f or f.is_constant():
        text = "ring Q[x,y,z]; let f = x; artin-rees f P=(x,y);"
        f = base.ring.gen(0)
    s = parse_session(text)
    assert s.binding("f").value == f
    assert parse_session(format_session(s)) == s
