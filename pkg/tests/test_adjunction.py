"""Adjunction assembly and every derived structure: transposes, squares,
zig-zags, the four-bifunctor isomorphism, identities, and the round-trip."""

import pytest

from hetcat import (Adjunction, HalfAdjunction, StructuralError, abstract_het,
                    adjunctive_image_square, adjunctive_square,
                    adjunctive_square_from_transpose, build_adjunction,
                    check_bifunctor, check_chimera_nat_trans, chimera_counit,
                    chimera_unit, four_bifunctor_iso,
                    over_and_back_and_triangles, representation_roundtrip,
                    transpose, transpose_inv, z_bifunctor, zig_zag_factorize)
from hetcat.adjunction import ChimeraNatTrans
from hetcat.fincat import identity_functor
from hetcat.instances import ur_adjunction


# -- build ---------------------------------------------------------------------

def test_ur_adjunction_is_identity(terminal_cat, chain2, skeleton2):
    for cat in (terminal_cat, chain2, skeleton2):
        adj = ur_adjunction(cat)
        assert adj.F == identity_functor(cat) == adj.G
        assert all(adj.eta(x) == cat.id_of(x) for x in cat.objects)
        assert all(adj.eps(a) == cat.id_of(a) for a in cat.objects)


def test_galois_build_recovers_image_functors(galois, galois_lower_adj):
    adj = galois_lower_adj
    assert adj.F.obj_map == galois.direct_image
    assert adj.G.obj_map == galois.preimage


def test_one_sided_result_is_first_class(pointed2):
    result = build_adjunction(pointed2.het)
    assert isinstance(result, HalfAdjunction)
    assert result.left_ok and not result.right_ok
    assert result.failed_sides() == ("right",)
    assert "no universal element" in result.describe()


# -- transposes ------------------------------------------------------------------

def test_transpose_of_identity_is_unit(galois_lower_adj):
    adj = galois_lower_adj
    for x in adj.x_cat.objects:
        fx = adj.F.on_obj(x)
        assert transpose(adj, x, adj.a_cat.id_of(fx)) == adj.eta(x)


def test_transpose_inv_of_identity_is_counit(galois_lower_adj):
    adj = galois_lower_adj
    for a in adj.a_cat.objects:
        ga = adj.G.on_obj(a)
        assert transpose_inv(adj, a, adj.x_cat.id_of(ga)) == adj.eps(a)


def test_galois_transpose_example(galois, galois_lower_adj):
    # the transpose of the inclusion image({0}) <= {a} is {0} <= preimage({a})
    adj = galois_lower_adj
    g = "{a}<={a}"              # image({0}) = {a} included in {a}
    f = transpose(adj, "{0}", g)
    assert f == "{0}<={0,1}"
    assert galois.preimage["{a}"] == "{0,1}"


def test_transposes_are_mutually_inverse(galois_lower_adj, ur_chain2):
    for adj in (galois_lower_adj, ur_chain2):
        for x in adj.x_cat.objects:
            for a in adj.a_cat.objects:
                for g in adj.a_cat.hom(adj.F.on_obj(x), a):
                    assert transpose_inv(adj, a, transpose(adj, x, g)) == g
                for f in adj.x_cat.hom(x, adj.G.on_obj(a)):
                    assert transpose(adj, x, transpose_inv(adj, a, f)) == f


def test_transpose_shape_mismatch_is_structural(galois_lower_adj):
    adj = galois_lower_adj
    with pytest.raises(StructuralError):
        transpose(adj, "{0}", "{}<={}")
    with pytest.raises(StructuralError):
        transpose_inv(adj, "{a}", "{}<={}")


# -- squares ---------------------------------------------------------------------

def test_square_seeded_by_unit_has_identity_bottom(galois_lower_adj):
    adj = galois_lower_adj
    for x in adj.x_cat.objects:
        fx = adj.F.on_obj(x)
        sq = adjunctive_square(adj, fx, adj.eta(x))
        assert sq.commutes
        assert sq.bottom[1] == adj.a_cat.id_of(fx)


def test_square_seeded_by_identity_has_counit_bottom(galois_lower_adj):
    adj = galois_lower_adj
    for a in adj.a_cat.objects:
        ga = adj.G.on_obj(a)
        sq = adjunctive_square(adj, a, adj.x_cat.id_of(ga))
        assert sq.commutes
        assert sq.bottom[1] == adj.eps(a)


def test_galois_square_commutes_everywhere(galois_lower_adj):
    adj = galois_lower_adj
    for x in adj.x_cat.objects:
        for a in adj.a_cat.objects:
            for f in adj.x_cat.hom(x, adj.G.on_obj(a)):
                sq = adjunctive_square(adj, a, f)
                assert sq.commutes
                assert sq.main_diagonal == (f, transpose_inv(adj, a, f))
                assert sq.anti_diagonal == (adj.G.on_mor(sq.main_diagonal[1]),
                                            adj.F.on_mor(f))


def test_square_from_transpose_matches(galois_lower_adj):
    adj = galois_lower_adj
    for x in adj.x_cat.objects:
        for a in adj.a_cat.objects:
            for g in adj.a_cat.hom(adj.F.on_obj(x), a):
                sq = adjunctive_square_from_transpose(adj, x, g)
                assert sq.commutes and sq.bottom[1] == g


def test_image_square_for_identity_seed(galois_lower_adj):
    adj = galois_lower_adj
    a = "{a}"
    ga = adj.G.on_obj(a)
    sq = adjunctive_image_square(adj, a, adj.x_cat.id_of(ga))
    assert sq.commutes
    # the bottom main-diagonal data degenerate to the counit composites
    assert sq.main_diagonal == (adj.G.on_mor(adj.eps(a)), adj.F.on_mor(adj.x_cat.id_of(ga)))


def test_ur_image_square_equals_original(ur_chain2):
    adj = ur_chain2
    sq = adjunctive_square(adj, "1", "le")
    isq = adjunctive_image_square(adj, "1", "le")
    # the twist is the identity, so corners and edges coincide
    assert (sq.nw, sq.ne, sq.sw, sq.se) == (isq.nw, isq.ne, isq.sw, isq.se)
    assert sq.top == isq.top and sq.bottom == isq.bottom
    assert sq.main_diagonal == isq.main_diagonal


def test_galois_image_squares_commute(galois_lower_adj):
    adj = galois_lower_adj
    for a in adj.a_cat.objects:
        for f in adj.x_cat.hom("{0}", adj.G.on_obj(a)):
            assert adjunctive_image_square(adj, a, f).commutes


# -- zig-zag ---------------------------------------------------------------------

def test_zigzag_of_chimera_unit_collapses(galois_lower_adj):
    adj = galois_lower_adj
    for x in adj.x_cat.objects:
        zz = zig_zag_factorize(adj, adj.h(x))
        assert zz.ok
        # z(h_x) is the second half of the unit: (identity, F eta_x)
        fx = adj.F.on_obj(x)
        assert zz.anti_diagonal == (adj.x_cat.id_of(adj.G.on_obj(fx)),
                                    adj.F.on_mor(adj.eta(x)))


def test_zigzag_of_chimera_counit_collapses(galois_lower_adj):
    adj = galois_lower_adj
    for a in adj.a_cat.objects:
        zz = zig_zag_factorize(adj, adj.e(a))
        assert zz.ok
        ga = adj.G.on_obj(a)
        assert zz.anti_diagonal == (adj.G.on_mor(adj.eps(a)),
                                    adj.a_cat.id_of(adj.F.on_obj(ga)))


def test_zigzag_unique_for_every_heteromorphism(galois_lower_adj, ur_chain2):
    for adj in (galois_lower_adj, ur_chain2):
        for c in adj.het.elements:
            zz = zig_zag_factorize(adj, c)
            assert zz.ok and zz.factor_count == 1


def test_limits_zigzag_recovers_chain(limits_pp2, limits_pp2_adj):
    # a cone w => D factors as w => Delta w => Lim D => D
    adj = limits_pp2_adj
    inst = limits_pp2
    count = 0
    for w in inst.skeleton.objects:
        for did in inst.diagrams.objects:
            for c in inst.het.cell(w, did):
                zz = zig_zag_factorize(adj, c)
                assert zz.ok
                assert zz.sending_universal == inst.identity_cones[w]
                assert zz.receiving_universal == inst.projection_cones[did]
                count += 1
    assert count > 0


# -- four-bifunctor isomorphism and identities -------------------------------------

def test_four_bifunctor_iso_ur_cells_coincide(ur_chain2):
    assert four_bifunctor_iso(ur_chain2).ok
    zb = z_bifunctor(ur_chain2)
    het = ur_chain2.het
    for x in het.x_cat.objects:
        for a in het.a_cat.objects:
            assert len(zb.cell(x, a)) == len(het.cell(x, a)) \
                == len(het.x_cat.hom(x, a))


def test_four_bifunctor_iso_galois_truth_table(galois, galois_lower_adj):
    assert four_bifunctor_iso(galois_lower_adj).ok
    adj = galois_lower_adj
    zb = z_bifunctor(adj)
    for x in adj.x_cat.objects:
        for a in adj.a_cat.objects:
            relation = galois.direct_image[x] == a or \
                f"{galois.direct_image[x]}<={a}" in adj.a_cat.hom(galois.direct_image[x], a)
            het_nonempty = bool(adj.het.cell(x, a))
            z_nonempty = bool(zb.cell(x, a))
            hom_nonempty = bool(adj.x_cat.hom(x, galois.preimage[a]))
            assert relation == het_nonempty == z_nonempty == hom_nonempty


def test_identity_suite_ur_and_galois(ur_chain2, galois_lower_adj, galois_upper_adj):
    for adj in (ur_chain2, galois_lower_adj, galois_upper_adj):
        assert over_and_back_and_triangles(adj).ok


def test_galois_over_and_back_equals_image_identities(galois):
    # the suite's over-and-back identities specialize to the set identities
    f_map = galois.f_map
    def image(sub):
        return frozenset(f_map[e] for e in sub)
    def pre(sub):
        return frozenset(e for e in galois.s_universe if f_map[e] in sub)
    for x in map(lambda o: frozenset(o.strip("{}").split(",")) - {""},
                 galois.dom_poset.objects):
        assert image(pre(image(x))) == image(x)
    for a in map(lambda o: frozenset(o.strip("{}").split(",")) - {""},
                 galois.cod_poset.objects):
        assert pre(image(pre(a))) == pre(a)


def test_identity_suite_limits(limits_pp2_adj):
    assert over_and_back_and_triangles(limits_pp2_adj).ok


# -- chimera natural transformations -----------------------------------------------

def test_chimera_unit_and_counit_of_limits(limits_pp1):
    adj = build_adjunction(limits_pp1.het)
    assert isinstance(adj, Adjunction)
    h = chimera_unit(adj)      # 1_Set => Delta with identity-cone components
    e = chimera_counit(adj)    # Lim => 1 with projection-cone components
    assert check_chimera_nat_trans(h).ok
    assert check_chimera_nat_trans(e).ok
    assert h.components == limits_pp1.identity_cones
    assert e.components == limits_pp1.projection_cones


def test_broken_chimera_component_fails(limits_pp2, limits_pp2_adj):
    adj = limits_pp2_adj
    e = chimera_counit(adj)
    components = dict(e.components)
    # replace one projection cone by a different cone in the same cell
    for did in limits_pp2.diagrams.objects:
        cell = limits_pp2.het.cell(adj.G.on_obj(did), did)
        others = [c for c in cell if c != components[did]]
        if others:
            components[did] = others[0]
            break
    else:
        pytest.fail("no alternative cone available at n=2")
    broken = ChimeraNatTrans("broken", e.left_functor, e.right_functor,
                             e.het, components)
    assert not check_chimera_nat_trans(broken).ok


def test_chimera_component_outside_cell_is_structural(limits_pp1):
    adj = build_adjunction(limits_pp1.het)
    e = chimera_counit(adj)
    components = dict(e.components)
    moved = None
    for did in limits_pp1.diagrams.objects:
        for w in limits_pp1.skeleton.objects:
            if w != adj.G.on_obj(did) and limits_pp1.het.cell(w, did):
                components[did] = limits_pp1.het.cell(w, did)[0]
                moved = did
                break
        if moved:
            break
    assert moved is not None
    broken = ChimeraNatTrans("bad", e.left_functor, e.right_functor,
                             e.het, components)
    with pytest.raises(StructuralError):
        check_chimera_nat_trans(broken)


# -- abstract het and the round-trip -------------------------------------------------

def test_abstract_het_cell_sizes(galois_lower_adj):
    adj = galois_lower_adj
    ah = abstract_het(adj)
    for x in adj.x_cat.objects:
        for a in adj.a_cat.objects:
            xh = ah.embed_x.on_obj(x)
            ah_obj = ah.embed_a.on_obj(a)
            assert len(ah.het.cell(xh, ah_obj)) == \
                len(adj.x_cat.hom(x, adj.G.on_obj(a)))


def test_abstract_het_passes_bifunctor_laws(ur_chain2, galois_lower_adj):
    for adj in (ur_chain2, galois_lower_adj):
        ah = abstract_het(adj)
        assert check_bifunctor(ah.het).ok


def test_ur_abstract_het_is_diagonal_hom(ur_chain2):
    ah = abstract_het(ur_chain2)
    het = ur_chain2.het
    for x in het.x_cat.objects:
        for a in het.a_cat.objects:
            assert len(ah.het.cell(ah.embed_x.on_obj(x), ah.embed_a.on_obj(a))) \
                == len(het.x_cat.hom(x, a))


def test_roundtrip_ur_and_galois(ur_chain2, galois_lower_adj, galois_upper_adj):
    for adj in (ur_chain2, galois_lower_adj, galois_upper_adj):
        assert representation_roundtrip(adj).ok
