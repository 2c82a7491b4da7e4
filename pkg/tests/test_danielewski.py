from fractions import Fraction

import pytest

from zigzag.boundary import F1, InvalidParameter, BlowupProgram
from zigzag.classify import AFFINE_PLANE, H, classify
from zigzag.danielewski import (
    VARS,
    build,
    certificates,
    embedding_witness,
    from_roots,
    s_q,
    zigzag_of,
)
from zigzag.dsl import parse_polynomial
from zigzag.lnd import apply, commutator
from zigzag.poly import Polynomial


def test_three_simple_roots():
    s = s_q(3)
    assert s.smooth and s.q == 3
    certs = certificates(s)
    assert [c["status"] for c in certs.values()] == ["certified-yes"] * 2
    assert all(c["fixed_point_free"] for c in certs.values())


def test_linear_p_is_a_plane():
    s = build(parse_polynomial("z", ("z",)))
    assert s.q == 1 and s.smooth
    assert classify(zigzag_of(s)).surface_class == AFFINE_PLANE


def test_double_root_is_singular():
    s = build(parse_polynomial("z^2", ("z",)))
    assert not s.smooth
    assert not any(c["fixed_point_free"] for c in certificates(s).values())
    with pytest.raises(InvalidParameter):
        zigzag_of(s)


def test_p_must_depend_on_z_only():
    with pytest.raises(InvalidParameter):
        build(parse_polynomial("x + z", VARS))
    with pytest.raises(InvalidParameter):
        build(parse_polynomial("5", ("z",)))


def test_rational_roots():
    s = from_roots([Fraction(1, 2), -3, 7])
    assert s.smooth
    assert s.p.evaluate({"x": 0, "y": 0, "z": Fraction(1, 2)}) == 0
    assert all(c["fixed_point_free"] for c in certificates(s).values())


@pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
def test_certified_for_small_q(q):
    s = s_q(q)
    for c in certificates(s).values():
        assert c["status"] == "certified-yes"
        assert c["fixed_point_free"]


def test_zigzag_for_three_roots():
    p = zigzag_of(s_q(3))
    assert p == BlowupProgram(0, None, (), (F1, F1, F1))
    c = classify(p)
    assert (c.surface_class, c.m) == (H, 1)


def test_zigzag_for_two_roots_matches_hand_program():
    assert classify(zigzag_of(s_q(2))) == classify(BlowupProgram(0, None, (), (F1, F1)))


@pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
def test_zigzag_class(q):
    expected = AFFINE_PLANE if q == 1 else H
    assert classify(zigzag_of(s_q(q))).surface_class == expected


def test_embedding_witness():
    w = embedding_witness(s_q(3))
    assert w.identity_certified
    assert w.component_values == (1, 2, 3) and w.values_distinct
    assert w.v_linear_on_components
    assert (str(w.rho), str(w.v), str(w.u)) == ("x", "y", "z")


def test_embedding_witness_needs_roots():
    s = build(parse_polynomial("z^2 - 2", ("z",)))
    assert s.smooth
    with pytest.raises(InvalidParameter):
        embedding_witness(s)


def test_the_two_translations_differ():
    s = s_q(3)
    x, y, z = Polynomial.variables(VARS)
    assert apply(s.d_x, x).is_zero() and not apply(s.d_y, x).is_zero()
    assert apply(s.d_y, y).is_zero() and not apply(s.d_x, y).is_zero()
    # [d_x, d_y](z) = p'(z) - p'(z) = 0, but [d_x, d_y](x) = p''(z) x
    assert commutator(s.d_x, s.d_y, z).is_zero()
    assert commutator(s.d_x, s.d_y, x) == s.p.derivative("z").derivative("z") * x
