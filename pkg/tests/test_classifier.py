import pytest
from hypothesis import given, settings

from zigzag.boundary import F1, ON_D, Between, BlowupProgram, InvalidState, normalize, replay, init_hirzebruch
from zigzag.classify import (
    A_MINUS_H,
    AFFINE_PLANE,
    H,
    classify,
    decide_k_trivial,
    essential_components,
    pictograph,
)
from strategies import programs


def creation_index(cid):
    return int(cid[1:])


def test_essential_on_proto_fiber():
    g = replay(BlowupProgram(0, None, (), (F1, F1)))
    assert essential_components(g) == [F1]


def test_essential_on_both_step1_curves():
    g = replay(BlowupProgram(1, ON_D, (), ("E0", "E1")))
    assert set(essential_components(g)) == {"E0", "E1"}


def test_essential_needs_final_step():
    with pytest.raises(InvalidState):
        essential_components(init_hirzebruch(1))


@settings(max_examples=100, deadline=None)
@given(programs)
def test_newest_curves_beside_e1_and_e0_are_essential(p):
    # the newest curve strictly right of E1 (and strictly left of E0) is a (-1)-curve
    # before the final step, so in a minimal program it must carry a leaf
    norm = normalize(p)
    if norm.paper_k == 0:
        return
    g = replay(norm)
    ess = set(essential_components(g))
    chain = g.chain_curves()
    i1, i0 = chain.index(g.e1_id), chain.index(g.e0_id)
    assert max(chain[i1 + 1 :], key=creation_index) in ess
    assert max(chain[:i0], key=creation_index) in ess


def test_m_for_leaves_on_proto_fiber():
    g = replay(BlowupProgram(0, None, (), (F1,) * 3))
    # delta = 1 = m * g with g = 1
    assert decide_k_trivial(g) == 1


def test_m_absent_for_conflicting_step1_curves():
    g = replay(BlowupProgram(1, ON_D, (), ("E0", "E1")))
    # E0: 0 + 1 = m * 1 gives m = 1; E1: -1 + 1 = m * 1 gives m = 0
    assert decide_k_trivial(g) is None


@settings(max_examples=100, deadline=None)
@given(programs)
def test_positive_k_is_never_k_trivial(p):
    norm = normalize(p)
    m = decide_k_trivial(replay(norm))
    if norm.paper_k > 0:
        assert m is None
    else:
        assert m == 1


def test_h_surface():
    c = classify(BlowupProgram(0, None, (), (F1,) * 3))
    assert (c.surface_class, c.k, c.q, c.m, c.k_trivial) == (H, 0, 3, 1, True)
    assert c.hypersurface_model == "xy = p(z), deg p = 3, simple roots"
    assert c.fixed_point_free_action


def test_affine_plane():
    c = classify(BlowupProgram(2, None, (), (F1,)))
    assert c.surface_class == AFFINE_PLANE
    assert c.cylinder_label == AFFINE_PLANE


def test_outside_h():
    c = classify(BlowupProgram(1, ON_D, (Between("E1", "E0"),), ("E2", "E0")))
    assert (c.surface_class, c.k_trivial, c.m) == (A_MINUS_H, False, None)
    assert (c.k, c.steps_taken) == (2, 1)
    assert not c.fixed_point_free_action
    assert c.as_dict()["fixed_point_free_action"] == "no"


def test_non_minimal_program_classified_after_normalizing():
    # E1 never touched again: contracting it undoes step 1
    c = classify(BlowupProgram(1, ON_D, (), ("E0", "E0")))
    assert c.surface_class == H
    assert c.normalized == BlowupProgram(1, None, (), (F1, F1))


@settings(max_examples=100, deadline=None)
@given(programs)
def test_classify_invariant_under_normalize(p):
    assert classify(p) == classify(normalize(p))


@settings(max_examples=100, deadline=None)
@given(programs)
def test_class_rules(p):
    c = classify(p)
    assert c.cylinder_label == c.surface_class
    assert (c.surface_class == H) == (c.k == 0 and c.q >= 2)
    assert (c.surface_class == AFFINE_PLANE) == (c.k == 0 and c.q == 1)
    assert c.k_trivial == (c.m is not None)


def test_pictograph():
    g = replay(BlowupProgram(1, ON_D, (Between("E1", "E0"),), ("E2", "E0")))
    assert pictograph(g) == "f(0) - d(0) - e1(-2) - e2(-2)* - e0(-3)*"
