"""Negative controls: single-entry corruptions of passing fixtures must be
caught by the corresponding checker, either as a law violation with a concrete
witness or as a structural error.

The named pool below stays above twenty fixtures; the exhaustive sweeps then
corrupt every composition entry and every functor image of the two-element
skeleton in all type-correct ways.
"""

import pytest

from hetcat import (FinCategory, FinFunctor, HetBifunctor, NatTrans,
                    StructuralError, check_bifunctor, check_category,
                    check_functor, check_nat_trans, hom_bifunctor,
                    identity_functor, identity_nat_trans)
from hetcat.instances import finset_skeleton
from hetcat.instances.galois import powerset_poset

SKEL = finset_skeleton(2)
POSET = powerset_poset("P2", ("0", "1"))
HOM = hom_bifunctor(SKEL)


def _cat(comp=None, identity=None, name="mutant"):
    return FinCategory(name, SKEL.objects, SKEL.morphisms,
                       dict(identity or SKEL.identity), dict(comp or SKEL.comp))


def _mutate_comp(pair, value):
    comp = dict(SKEL.comp)
    comp[pair] = value
    return _cat(comp=comp)


def _mutate_identity(obj, value):
    ident = dict(SKEL.identity)
    ident[obj] = value
    return _cat(identity=ident)


def _drop_comp(pair):
    comp = dict(SKEL.comp)
    del comp[pair]
    return _cat(comp=comp)


def _add_noncomposable():
    comp = dict(SKEL.comp)
    comp[("1>2:0", "1>2:1")] = "1>2:0"      # cod 2 != dom 1: not composable
    return _cat(comp=comp)


def _poset_wrong_cod():
    comp = dict(POSET.comp)
    comp[("{}<={0}", "{0}<={0,1}")] = "{}<={0}"
    return FinCategory("mutant", POSET.objects, POSET.morphisms,
                       dict(POSET.identity), comp)


def _functor(mor_map=None, obj_map=None):
    base = identity_functor(SKEL)
    return FinFunctor("mutant", SKEL, SKEL,
                      dict(obj_map or base.obj_map),
                      dict(mor_map or base.mor_map))


def _functor_redirect(mid, value):
    base = identity_functor(SKEL)
    mor_map = dict(base.mor_map)
    mor_map[mid] = value
    return _functor(mor_map=mor_map)


def _functor_stale_objects():
    base = identity_functor(SKEL)
    obj_map = dict(base.obj_map)
    obj_map["1"] = "2"
    return _functor(obj_map=obj_map)


def _functor_missing_entry():
    base = identity_functor(SKEL)
    mor_map = dict(base.mor_map)
    del mor_map["2>2:1,0"]
    return _functor(mor_map=mor_map)


def _nat_trans_bad_component():
    ident = identity_functor(SKEL)
    components = {x: SKEL.id_of(x) for x in SKEL.objects}
    components["2"] = "2>2:1,0"
    return NatTrans("mutant", ident, ident, components)


def _het_mutate(side, mor, elem, value):
    act_left = {h: dict(t) for h, t in HOM.act_left.items()}
    act_right = {k: dict(t) for k, t in HOM.act_right.items()}
    (act_left if side == "L" else act_right)[mor][elem] = value
    return HetBifunctor("mutant", HOM.x_cat, HOM.a_cat, dict(HOM.cells),
                        act_left, act_right)


def _het_drop_action_entry():
    act_left = {h: dict(t) for h, t in HOM.act_left.items()}
    del act_left["2>2:1,0"]["2>2:0,1"]
    return HetBifunctor("mutant", HOM.x_cat, HOM.a_cat, dict(HOM.cells),
                        act_left, dict(HOM.act_right))


def _het_duplicate_element():
    cells = dict(HOM.cells)
    cells[("0", "1")] = ("1>1:0",)          # id already lives in cell (1, 1)
    return HetBifunctor("mutant", HOM.x_cat, HOM.a_cat, cells,
                        dict(HOM.act_left), dict(HOM.act_right))


# every fixture: (name, builder, checker); "structural" means the checker
# (or the construction itself) must raise StructuralError
FIXTURES = [
    ("comp-rewired-within-hom",
     lambda: _mutate_comp(("1>2:0", "2>2:1,1"), "1>2:0"), check_category),
    ("comp-wrong-codomain",
     lambda: _mutate_comp(("1>2:0", "2>1:0,0"), "1>2:1"), check_category),
    ("comp-identity-pair-rewired",
     lambda: _mutate_comp(("2>2:0,1", "2>2:0,1"), "2>2:1,0"), check_category),
    ("comp-entry-dropped",
     lambda: _drop_comp(("1>2:0", "2>2:1,0")), check_category),
    ("comp-noncomposable-added", _add_noncomposable, check_category),
    ("identity-wrong-shape",
     lambda: _mutate_identity("1", "1>2:0"), check_category),
    ("identity-nonidentity-endo",
     lambda: _mutate_identity("2", "2>2:1,0"), check_category),
    ("poset-comp-wrong-codomain", _poset_wrong_cod, check_category),
    ("functor-image-redirected",
     lambda: _functor_redirect("2>2:0,1", "2>2:1,0"), check_functor),
    ("functor-image-wrong-shape",
     lambda: _functor_redirect("1>2:0", "2>1:0,0"), check_functor),
    ("functor-stale-object-map", _functor_stale_objects, check_functor),
    ("functor-identity-image",
     lambda: _functor_redirect("1>1:0", "1>2:0"), check_functor),
    ("functor-missing-entry", _functor_missing_entry, check_functor),
    ("nat-trans-noncommuting-component", _nat_trans_bad_component,
     check_nat_trans),
    ("het-left-action-rerouted",
     lambda: _het_mutate("L", "2>2:1,0", "2>2:0,1", "2>2:0,0"), check_bifunctor),
    ("het-right-action-rerouted",
     lambda: _het_mutate("R", "2>2:1,0", "2>2:0,1", "2>2:0,0"), check_bifunctor),
    ("het-left-identity-action-rerouted",
     lambda: _het_mutate("L", "2>2:0,1", "2>2:0,1", "2>2:1,0"), check_bifunctor),
    ("het-right-identity-action-rerouted",
     lambda: _het_mutate("R", "1>1:0", "1>1:0", "0>1:"), check_bifunctor),
    ("het-action-outside-cell",
     lambda: _het_mutate("L", "2>2:1,0", "2>2:0,1", "1>2:0"), check_bifunctor),
    ("het-action-entry-dropped", _het_drop_action_entry, check_bifunctor),
    ("het-element-in-two-cells", _het_duplicate_element, check_bifunctor),
    ("category-unresolved-id",
     lambda: FinCategory("mutant", ("x",), (), {"x": "ghost"}, {}),
     check_category),
]


@pytest.mark.parametrize("name,builder,checker",
                         FIXTURES, ids=[f[0] for f in FIXTURES])
def test_single_mutation_is_detected(name, builder, checker):
    try:
        value = builder()
        report = checker(value)
    except StructuralError:
        return                          # structural detection counts
    assert not report.ok, f"{name}: mutation not detected"
    assert report.violations[0].witness, f"{name}: no concrete witness"


def test_fixture_pool_is_large_enough():
    assert len(FIXTURES) >= 20


def mutation_pool_all_detected() -> tuple[int, int]:
    """Run the pool and return (detected, total); used by the acceptance suite."""
    detected = 0
    for _, builder, checker in FIXTURES:
        try:
            report = checker(builder())
            if not report.ok:
                detected += 1
        except StructuralError:
            detected += 1
    return detected, len(FIXTURES)


def test_exhaustive_composition_rewiring_detected():
    """Every type-correct single rewrite of a skeleton composition entry
    breaks some law."""
    for (f, g), h in SKEL.comp.items():
        target = SKEL.morphism(h)
        for alt in SKEL.hom(target.dom, target.cod):
            if alt == h:
                continue
            mutant = _mutate_comp((f, g), alt)
            assert not check_category(mutant).ok, (f, g, alt)


def test_exhaustive_functor_image_rewiring_detected():
    """Every type-correct single rewrite of an identity-functor image breaks
    some functor law."""
    base = identity_functor(SKEL)
    for m in SKEL.morphisms:
        for alt in SKEL.hom(m.dom, m.cod):
            if alt == m.id:
                continue
            mutant = _functor_redirect(m.id, alt)
            assert not check_functor(mutant).ok, (m.id, alt)


def test_exhaustive_nat_trans_component_rewiring_detected():
    nt = identity_nat_trans(identity_functor(SKEL))
    for x in SKEL.objects:
        for alt in SKEL.hom(x, x):
            if alt == SKEL.id_of(x):
                continue
            components = dict(nt.components)
            components[x] = alt
            mutant = NatTrans("mutant", nt.source, nt.target, components)
            assert not check_nat_trans(mutant).ok, (x, alt)
