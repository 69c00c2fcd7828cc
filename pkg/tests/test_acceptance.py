"""Acceptance criteria, one test per criterion (split where a criterion mixes
attainable and provably unattainable demands).

Each test prints a PASS/FAIL line. Criteria 2, 3, 4, and 5 contain sub-cases
that no finite presentation can satisfy: an adjunction between finite
categories forces the two functors to be total, and the product, coproduct,
free-pointed, and product-exponential functors strictly grow cardinalities,
so their orbits leave every finite bound. Those sub-cases are asserted
exactly as demanded and fail honestly, with the argument spelled out in each
test's docstring; the machinery instead returns the forced half-representation
with a concrete witness, which the companion green tests verify.
"""

import time

import pytest

from hetcat import (Adjunction, HalfAdjunction, build_adjunction,
                    compare_left_representation, four_bifunctor_iso,
                    hom_comma_equivalence, lawvere_iso_check,
                    over_and_back_and_triangles, representation_roundtrip,
                    zig_zag_factorize)
from hetcat.cli import main as cli_main
from hetcat.instances import (all_functions, colimits_adjunction,
                              diagram_shape, finset_skeleton,
                              galois_connections, limits_adjunction,
                              preorder_adjunction_chain, product_exponential,
                              skeleton_functor_to_diagram, limit_of,
                              colimit_of, ur_adjunction)
from test_instances import colimit_oracle, limit_oracle
from test_mutations import mutation_pool_all_detected

GALOIS_S = ("0", "1", "2")
GALOIS_T = ("a", "b")


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status}" + (f" ({detail})" if detail else ""))


# -- criterion 1: the Galois suite ---------------------------------------------

def test_criterion_1_galois_suite():
    """Both connections recovered for all eight functions, with formula
    oracles and image identities, in under a second."""
    started = time.perf_counter()
    for f_map in all_functions(GALOIS_S, GALOIS_T):
        gi = galois_connections(f_map, GALOIS_S, GALOIS_T)
        lower = build_adjunction(gi.lower_het)
        upper = build_adjunction(gi.upper_het)
        assert isinstance(lower, Adjunction), f_map
        assert isinstance(upper, Adjunction), f_map
        assert lower.F.obj_map == gi.direct_image
        assert lower.G.obj_map == gi.preimage
        assert upper.F.obj_map == gi.preimage
        assert upper.G.obj_map == gi.f_star
        for a in gi.cod_poset.objects:
            assert lower.G.obj_map[a] == gi.sup_formula_right_adjoint("lower", a)
            assert upper.F.obj_map[a] == gi.preimage[a]
        for x in gi.dom_poset.objects:
            assert lower.F.obj_map[x] == gi.inf_formula_left_adjoint("lower", x)
            assert upper.G.obj_map[x] == gi.sup_formula_right_adjoint("upper", x)
        # image identities, for every subset
        def image(sub):
            return frozenset(f_map[e] for e in sub)
        def pre(sub):
            return frozenset(e for e in GALOIS_S if f_map[e] in sub)
        import itertools
        for r in range(4):
            for xs in itertools.combinations(GALOIS_S, r):
                x = frozenset(xs)
                assert image(pre(image(x))) == image(x)
        for r in range(3):
            for as_ in itertools.combinations(GALOIS_T, r):
                a = frozenset(as_)
                assert pre(image(pre(a))) == pre(a)
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"galois suite took {elapsed:.2f}s"
    _report("1 (galois suite)", True, f"8 functions in {elapsed:.2f}s")


# -- criterion 2: limits and colimits -------------------------------------------

SHAPES = ("terminal", "discrete-2", "parallel-pair", "span")
LIM_CLOSED = {"terminal", "parallel-pair", "span"}
COLIM_CLOSED = {"terminal", "parallel-pair"}


@pytest.fixture(scope="module")
def shape_suite():
    """All eight instance builds with their adjunction results and timing."""
    started = time.perf_counter()
    out = {}
    for shape in SHAPES:
        li = limits_adjunction(shape, 2)
        ci = colimits_adjunction(shape, 2)
        out[shape] = (li, build_adjunction(li.het), ci, build_adjunction(ci.het))
    out["elapsed"] = time.perf_counter() - started
    return out


def test_criterion_2_closed_shapes_and_oracles(shape_suite):
    """Full recovery wherever the adjoint stays inside the skeleton, the
    forced half otherwise; direct computations match the universal-property
    oracle on every diagram; cardinality laws exact; under 30 s."""
    started = time.perf_counter()
    for shape in SHAPES:
        li, ladj, ci, cadj = shape_suite[shape]
        if shape in LIM_CLOSED:
            assert isinstance(ladj, Adjunction), shape
            assert ladj.F == li.delta and ladj.G == li.lim
        else:
            assert isinstance(ladj, HalfAdjunction) and \
                ladj.failed_sides() == ("right",), shape
            assert compare_left_representation(
                ladj.left, li.delta, li.identity_cones).ok
        if shape in COLIM_CLOSED:
            assert isinstance(cadj, Adjunction), shape
            assert cadj.F == ci.colim and cadj.G == ci.delta
        else:
            assert isinstance(cadj, HalfAdjunction) and \
                cadj.failed_sides() == ("right",), shape
            assert compare_left_representation(
                cadj.left, ci.colim, ci.injection_cocones).ok
    # oracle agreement on every diagram of every shape
    skel = finset_skeleton(2)
    for shape in SHAPES:
        li = shape_suite[shape][0]
        for did, fun in li.diagrams.functors.items():
            diag = skeleton_functor_to_diagram(diagram_shape(shape), skel,
                                               fun.obj_map, fun.mor_map)
            lim = limit_of(diag).apex.size
            colim = colimit_of(diag).apex.size
            assert limit_oracle(diag, max(lim + 1, 3)) == {lim}, (shape, did)
            assert colimit_oracle(diag, max(colim + 1, 3)) == {colim}, (shape, did)
            if shape == "discrete-2":
                sizes = [diag.values[o].size for o in diag.shape.objects]
                assert lim == sizes[0] * sizes[1]
                assert colim == sizes[0] + sizes[1]
    elapsed = shape_suite["elapsed"] + (time.perf_counter() - started)
    assert elapsed < 30.0, f"limits/colimits suite took {elapsed:.1f}s"
    _report("2 (limits/colimits, attainable part)", True, f"{elapsed:.1f}s")


def test_criterion_2_full_recovery_all_shapes_UNATTAINABLE(shape_suite):
    """The criterion as stated: Delta -| Lim and Colim -| Delta recovered in
    full for ALL four shapes at n = 2.

    Unattainable: representing Het(-, D) needs a set the size of Lim D, and
    the discrete product (2, 2) has 4 > 2 elements; dually coproducts and
    pushouts reach 2n. Enlarging one side breaks totality of the other
    functor (the constant diagram at the new sizes does not exist), and the
    growth recurses, so no finite bound closes. The kernel instead returns
    the forced half-representations with exact witnesses, verified green in
    the companion test.
    """
    failures = []
    for shape in SHAPES:
        _, ladj, _, cadj = shape_suite[shape]
        if not isinstance(ladj, Adjunction):
            failures.append(f"{shape} limits: {', '.join(ladj.failed_sides())} "
                            f"side not representable")
        if not isinstance(cadj, Adjunction):
            failures.append(f"{shape} colimits: {', '.join(cadj.failed_sides())} "
                            f"side not representable")
    ok = not failures
    _report("2 (full recovery for all shapes)", ok, "; ".join(failures))
    assert ok, "finitely unattainable sub-cases: " + "; ".join(failures)


# -- criterion 3: representation theorem round-trip --------------------------------

@pytest.fixture(scope="module")
def full_adjunction_instances(shape_suite):
    """Every built-in that yields a full adjunction at acceptance scale."""
    gi = galois_connections({"0": "a", "1": "a", "2": "b"}, GALOIS_S, GALOIS_T)
    pre = preorder_adjunction_chain(2)
    pe1 = product_exponential(2, 1)
    out = {
        "ur (skeleton n=2)": ur_adjunction(finset_skeleton(2)),
        "galois lower": build_adjunction(gi.lower_het),
        "galois upper": build_adjunction(gi.upper_het),
        "limits parallel-pair": shape_suite["parallel-pair"][1],
        "colimits parallel-pair": shape_suite["parallel-pair"][3],
        "preorder discrete -| underlying": build_adjunction(pre.lower_het),
        "preorder underlying -| indiscrete": build_adjunction(pre.upper_het),
        "prodexp |A|=1": build_adjunction(pe1.coreflective_het),
    }
    for name, adj in out.items():
        assert isinstance(adj, Adjunction), name
    return out


def test_criterion_3_roundtrip_attainable(full_adjunction_instances):
    for name, adj in full_adjunction_instances.items():
        report = representation_roundtrip(adj)
        assert report.ok, f"{name}: {report.summary()}"
    _report("3 (round-trip, attainable instances)", True,
            f"{len(full_adjunction_instances)} instances")


def test_criterion_3_roundtrip_prodexp_pointed_UNATTAINABLE(pointed2, prodexp22):
    """The criterion as stated includes prodexp at n=2, |A|=2 and pointed at
    n=2. Both are finitely unattainable: the exponential squares
    cardinalities (2 -> 4 -> 16 -> ...) and adjoining a basepoint adds one
    (k -> k+1), so no finite grid supports both total functors, and without
    a full adjunction there is no abstract het to round-trip. The halves are
    exact and verified elsewhere.
    """
    failures = []
    for name, het in (("prodexp n=2 |A|=2 (coreflective)",
                       prodexp22.coreflective_het),
                      ("prodexp n=2 |A|=2 (reflective)",
                       prodexp22.reflective_het),
                      ("pointed n=2", pointed2.het)):
        result = build_adjunction(het)
        if isinstance(result, Adjunction):
            report = representation_roundtrip(result)
            if not report.ok:
                failures.append(f"{name}: round-trip violations")
        else:
            failures.append(f"{name}: {', '.join(result.failed_sides())} side "
                            f"not representable")
    ok = not failures
    _report("3 (round-trip, prodexp/pointed)", ok, "; ".join(failures))
    assert ok, "finitely unattainable sub-cases: " + "; ".join(failures)


def test_instances_invariant_four_bifunctor_iso(full_adjunction_instances):
    """Instances invariant: the four-bifunctor isomorphism holds on every
    built-in instance carrying a full adjunction."""
    for name, adj in full_adjunction_instances.items():
        report = four_bifunctor_iso(adj)
        assert report.ok, f"{name}: {report.summary()}"


# -- criterion 4: identity suites ----------------------------------------------

def test_criterion_4_identity_suites(full_adjunction_instances):
    """Triangles, over-and-back identities, all four over-across-and-back
    equations, and exhaustive zig-zag uniqueness, for every morphism and het
    element of every instance carrying a full adjunction."""
    count = 0
    for name, adj in full_adjunction_instances.items():
        report = over_and_back_and_triangles(adj)
        assert report.ok, f"{name}: {report.summary()}"
        for c in adj.het.elements:
            zz = zig_zag_factorize(adj, c)
            assert zz.ok and zz.factor_count == 1, (name, c)
            count += 1
    _report("4 (identity suites)", True, f"{count} zig-zags, all unique")


def test_criterion_4_identity_suites_prodexp_pointed_UNATTAINABLE(pointed2,
                                                                  prodexp22):
    """The criterion says every built-in instance; prodexp at |A|=2 and
    pointed have no full adjunction (see criterion 3), and triangular
    identities require both a unit and a counit to state. Their one-sided
    laws are verified green elsewhere."""
    failures = []
    for name, het in (("prodexp n=2 |A|=2", prodexp22.coreflective_het),
                      ("pointed n=2", pointed2.het)):
        result = build_adjunction(het)
        if not isinstance(result, Adjunction):
            failures.append(f"{name}: no unit/counit to check "
                            f"({', '.join(result.failed_sides())} side missing)")
            continue
        if not over_and_back_and_triangles(result).ok:
            failures.append(f"{name}: identity violations")
    ok = not failures
    _report("4 (identity suites, prodexp/pointed)", ok, "; ".join(failures))
    assert ok, "finitely unattainable sub-cases: " + "; ".join(failures)


# -- criterion 5: comma-category equivalence --------------------------------------

def test_criterion_5_lawvere(full_adjunction_instances, chain2, powerset2,
                             terminal_cat, skeleton1):
    # the diagram-category commas run past the default guard; raise it
    for name, adj in full_adjunction_instances.items():
        report = lawvere_iso_check(adj, guard=100_000)
        assert report.ok, f"{name}: {report.summary()}"
    for cat in (terminal_cat, chain2, powerset2, skeleton1):
        assert hom_comma_equivalence(cat).ok
    _report("5 (comma equivalence)", True)


def test_criterion_5_lawvere_prodexp_pointed_UNATTAINABLE(pointed2, prodexp22):
    """lawvere_iso_check needs a full adjunction; prodexp |A|=2 and pointed
    have none (finitely forced). Their one-sided comma equivalences are
    verified green elsewhere."""
    failures = []
    for name, het in (("prodexp n=2 |A|=2", prodexp22.coreflective_het),
                      ("pointed n=2", pointed2.het)):
        result = build_adjunction(het)
        if not isinstance(result, Adjunction):
            failures.append(f"{name}: no adjunction to compare "
                            f"({', '.join(result.failed_sides())} side missing)")
            continue
        if not lawvere_iso_check(result).ok:
            failures.append(f"{name}: equivalence violations")
    ok = not failures
    _report("5 (comma equivalence, prodexp/pointed)", ok, "; ".join(failures))
    assert ok, "finitely unattainable sub-cases: " + "; ".join(failures)


# -- criterion 6: negative controls ------------------------------------------------

def test_criterion_6_mutation_detection():
    detected, total = mutation_pool_all_detected()
    assert total >= 20
    assert detected == total
    _report("6 (negative controls)", True, f"{detected}/{total} detected")


# -- criterion 7: the preorder/poset contrast ----------------------------------------

def test_criterion_7_poset_contrast(preorder2):
    lower = build_adjunction(preorder2.lower_het)
    upper = build_adjunction(preorder2.upper_het)
    assert isinstance(lower, Adjunction) and isinstance(upper, Adjunction)
    poset = build_adjunction(preorder2.poset_het)
    assert isinstance(poset, HalfAdjunction)
    assert poset.failed_sides() == ("right",)
    witness = poset.right
    assert witness.index_object == "2"
    assert witness.failures and all(f.factor_count != 1 for f in witness.failures)
    _report("7 (poset contrast)", True,
            f"witness at the {witness.index_object}-element set with "
            f"{len(witness.failures)} refuted candidates")


# -- criterion 8: the CLI contract ----------------------------------------------------

def test_criterion_8_cli_contract(tmp_path, capsys):
    def run(*argv):
        code = cli_main(list(argv))
        return code, capsys.readouterr().out

    # exit code 0: a green demo; 1: law violation; 2: structural
    bundle = tmp_path / "galois.json"
    code, _ = run("demo", "galois", "--export", str(bundle))
    assert code == 0
    import json
    doc = json.loads(bundle.read_text())
    doc["payload"]["bifunctor"]["x_category"]["composition"][0][2] = \
        doc["payload"]["bifunctor"]["x_category"]["composition"][1][2]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, _ = run("check", str(broken))
    assert code == 1
    junk = tmp_path / "junk.json"
    junk.write_text("not json")
    code, _ = run("check", str(junk))
    assert code == 2

    # export then recheck, for every demo
    demos = [("ur", "--n", "1"), ("galois",),
             ("limits", "--shape", "parallel-pair", "--n", "1"),
             ("colimits", "--shape", "parallel-pair", "--n", "1"),
             ("prodexp", "--n", "1", "--a", "1"),
             ("preorder", "--n", "2"), ("pointed", "--n", "1")]
    for spec in demos:
        path = tmp_path / f"{spec[0]}-bundle.json"
        code, _ = run("demo", *spec, "--export", str(path))
        assert code == 0, spec
        code, _ = run("check", str(path))
        assert code == 0, spec

    # byte-stable JSON reports
    _, first = run("adjoint", str(bundle), "--json")
    _, second = run("adjoint", str(bundle), "--json")
    assert first == second
    _report("8 (CLI contract)", True)
