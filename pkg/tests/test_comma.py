"""Comma categories from functors and bifunctors, and the comma-category
formulation of an adjunction."""

import pytest

from hetcat import (GuardExceeded, build_het, check_category, check_functor,
                    comma_of_bifunctor, comma_of_functors, constant_functor,
                    half_lawvere_iso_check, hom_comma_equivalence,
                    identity_functor, lawvere_iso_check)
from hetcat.het import LeftRepresentation, find_left_representation


def test_identity_comma_on_terminal(terminal_cat):
    cc = comma_of_functors(identity_functor(terminal_cat),
                           identity_functor(terminal_cat))
    assert cc.base.n_objects == 1
    assert cc.base.n_morphisms == 1
    assert check_category(cc.base).ok


def test_galois_comma_object_count(galois, galois_lower_adj):
    # objects of (F, 1_A) are triples (x, a, g: Fx -> a)
    adj = galois_lower_adj
    cc = comma_of_functors(adj.F, identity_functor(galois.cod_poset))
    expected = sum(
        len(galois.cod_poset.hom(adj.F.on_obj(x), a))
        for x in galois.dom_poset.objects for a in galois.cod_poset.objects)
    assert cc.base.n_objects == expected
    assert check_category(cc.base).ok
    assert check_functor(cc.pi0).ok and check_functor(cc.pi1).ok


def test_slice_construction_matches_enumeration(skeleton2, terminal_cat):
    # (1_C, constant at c) has the morphisms into c as objects
    const = constant_functor(terminal_cat, skeleton2, "2")
    cc = comma_of_functors(identity_functor(skeleton2), const)
    expected = sorted(
        m.id for m in skeleton2.morphisms if m.cod == "2")
    got = sorted(datum for (_, _, datum) in cc.objects_data.values())
    assert got == expected
    assert check_category(cc.base).ok


def test_comma_of_hom_bifunctor_matches_identity_comma(chain2, skeleton1, powerset2):
    for cat in (chain2, skeleton1, powerset2):
        assert hom_comma_equivalence(cat).ok


def test_comma_of_cone_bifunctor_objects_are_cones(limits_pp1):
    cc = comma_of_bifunctor(limits_pp1.het)
    assert check_category(cc.base).ok
    total = sum(len(v) for v in limits_pp1.het.cells.values())
    assert cc.base.n_objects == total


def test_comma_of_empty_het(chain2, terminal_cat):
    empty = build_het("all-empty", chain2, terminal_cat,
                      cell_fn=lambda x, a: (),
                      act_left_fn=lambda h, c: c,
                      act_right_fn=lambda k, c: c)
    cc = comma_of_bifunctor(empty)
    assert cc.base.n_objects == 0
    assert cc.base.n_morphisms == 0
    assert check_category(cc.base).ok


def test_lawvere_iso_ur(ur_chain2):
    assert lawvere_iso_check(ur_chain2).ok


def test_lawvere_iso_galois(galois_lower_adj, galois_upper_adj):
    assert lawvere_iso_check(galois_lower_adj).ok
    assert lawvere_iso_check(galois_upper_adj).ok


def test_half_lawvere_on_pointed(pointed2):
    rep = find_left_representation(pointed2.het)
    assert isinstance(rep, LeftRepresentation)
    assert half_lawvere_iso_check(pointed2.het, rep).ok


def test_comma_guard(galois_lower_adj):
    with pytest.raises(GuardExceeded):
        comma_of_bifunctor(galois_lower_adj.het, guard=3)
