from fractions import Fraction

import pytest
from hypothesis import given, settings

from zigzag.boundary import ON_D, Between, BlowupProgram, FarRightFree, canonical
from zigzag.dsl import (
    DslError,
    format_program,
    format_ring,
    parse_polynomial,
    parse_program,
    parse_ring,
    tokenize,
)
from strategies import programs


def test_step1_only_program():
    p = parse_program("base hirzebruch 1\nstep1 on-d\nfinal { G on E0; G on E0 }\n")
    assert p == BlowupProgram(1, ON_D, (), ("E0", "E0"))
    assert p.paper_k == 1


def test_program_with_comments_and_steps():
    text = """
    # two interior steps
    base hirzebruch 2
    step1 free      # proper transform of F1 stays next to D
    blow between E1 E0
    blow free
    final { G on E3; G on E2; }
    """
    p = parse_program(text)
    assert p.interior == (Between("E1", "E0"), FarRightFree())
    assert p.final == ("E3", "E2")


def test_program_without_step1():
    assert parse_program("base hirzebruch 0 final { G on F1 }") == BlowupProgram(0, None, (), ("F1",))


def test_negative_base_from_normalization_parses():
    assert parse_program("base hirzebruch -1\nfinal { G on F1; G on F1 }").base_n == -1


def err(text, parse=parse_program):
    with pytest.raises(DslError) as info:
        parse(text)
    return info.value


def test_blow_between_base_curves_is_located():
    e = err("base hirzebruch 1\nstep1 on-d\nblow between F0 D\nfinal { G on E0 }")
    assert (e.line, e.col, e.kind) == (3, 1, "invalid-location")


def test_empty_final_block():
    e = err("base hirzebruch 1\nstep1 on-d\nfinal { }")
    assert "at least one attachment" in e.message
    assert (e.line, e.col) == (3, 7)


@pytest.mark.parametrize(
    "text, line, col, kind",
    [
        ("base hirzebruch x", 1, 17, "syntax-error"),
        ("base hirzebruch 1\nstep1 sideways\nfinal { G on E0 }", 2, 7, "syntax-error"),
        ("base hirzebruch 1\nstep1 on-d\nfinal { G on E7 }", 3, 9, "invalid-location"),
        ("base hirzebruch 1\nblow free\nfinal { G on F1 }", 2, 1, "invalid-state"),
        ("base hirzebruch 1\nstep1 on-d\nfinal { G on E0 } extra", 3, 19, "syntax-error"),
        ("base hirzebruch 1\nstep1 on-d\nblow sideways\nfinal { G on E0 }", 3, 6, "syntax-error"),
        ("base hirzebruch 1\n\n  $", 3, 3, "syntax-error"),
    ],
)
def test_positioned_errors(text, line, col, kind):
    e = err(text)
    assert (e.line, e.col, e.kind) == (line, col, kind)
    assert str(e).startswith(f"{line}:{col}: {kind}: ")


def test_format_program():
    p = BlowupProgram(1, ON_D, (Between("E1", "E0"),), ("E2", "E0"))
    assert format_program(p) == (
        "base hirzebruch 1\nstep1 on-d\nblow between E1 E0\nfinal { G on E2; G on E0 }\n"
    )


@settings(max_examples=100, deadline=None)
@given(programs)
def test_program_roundtrip(p):
    assert parse_program(format_program(p)) == p
    c = canonical(p)
    assert format_program(parse_program(format_program(c))) == format_program(c)


# polynomials and rings ------------------------------------------------------


def test_polynomial_grammar():
    vars = ("x", "y")
    p = parse_polynomial("-(x + 1/2)^2 * y - -y", vars)
    x, y = (parse_polynomial(v, vars) for v in vars)
    assert p == -(x + Fraction(1, 2)) ** 2 * y + y


@pytest.mark.parametrize(
    "text, col, kind",
    [
        ("x + w", 5, "unknown-variable"),
        ("x +", 4, "syntax-error"),
        ("(x", 3, "syntax-error"),
        ("x^y", 3, "syntax-error"),
        ("1/0", 3, "syntax-error"),
    ],
)
def test_polynomial_errors(text, col, kind):
    e = err(text, lambda t: parse_polynomial(t, ("x", "y")))
    assert (e.line, e.col, e.kind) == (1, col, kind)


RING = """ring vars x, y, z
ideal { x*y - z^2 + 1 }
derivation d { x -> 0; y -> 2*z; z -> x }
"""


def test_ring_roundtrip():
    rf = parse_ring(RING)
    assert rf.ring.vars == ("x", "y", "z")
    assert [d.name for d in rf.derivations] == ["d"]
    again = parse_ring(format_ring(rf))
    assert again.ring.relations.generators == rf.ring.relations.generators
    assert again.derivations[0].images == rf.derivations[0].images


def test_ring_order_option():
    rf = parse_ring("ring vars x, y order lex\nideal { x - y }")
    assert rf.ring.relations.order == "lex"
    assert "order lex" in format_ring(rf)


@pytest.mark.parametrize(
    "text, line, kind, fragment",
    [
        ("ring vars x, x", 1, "syntax-error", "declared twice"),
        ("ring vars x order weird", 1, "syntax-error", "unknown order"),
        ("ring vars x\nderivation d { x -> w }", 2, "unknown-variable", "undeclared"),
        ("ring vars x, y\nderivation d { x -> 0 }", 2, "syntax-error", "no image for y"),
        ("ring vars x\nderivation d { x -> 0 }\nderivation d { x -> 1 }", 3, "syntax-error", "defined twice"),
        ("ring vars x\nderivation d { x -> 0; x -> 1 }", 2, "syntax-error", "given twice"),
    ],
)
def test_ring_errors(text, line, kind, fragment):
    e = err(text, parse_ring)
    assert (e.line, e.kind) == (line, kind)
    assert fragment in e.message


def test_tokenizer_positions():
    toks = tokenize("a\n  b -> 3")
    assert [(t.text, t.line, t.col) for t in toks] == [("a", 1, 1), ("b", 2, 3), ("->", 2, 5), ("3", 2, 8), ("", 2, 9)]
