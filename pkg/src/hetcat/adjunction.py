"""Adjunctions as birepresentations, with every derived structure:

transposes, ordinary and chimera units and counits, adjunctive and
adjunctive-image squares, zig-zag and over-and-back factorizations, the
bifunctor of anti-diagonal maps, the four-bifunctor isomorphism, chimera
natural transformations, and the round-trip through the abstract embedding
into the product of the two categories.

Anti-diagonal cells are stored as twist-image pairs (G g(c), F f(c)) indexed
by their originating cell; they are defined only on functor images, never on
arbitrary object pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import StructuralError
from .fincat import (FinCategory, FinFunctor, Morphism, NatTrans, check_nat_trans,
                     compose_functors, identity_functor, pair_id)
from .het import (HetBifunctor, KernelInvariantError, LeftRepresentation,
                  NonRepresentabilityWitness, RightRepresentation,
                  find_left_representation, find_right_representation)
from .report import LawReport


@dataclass(frozen=True, eq=False)
class Adjunction:
    """A birepresented het-bifunctor: F -| G with all universal data attached."""

    het: HetBifunctor
    left: LeftRepresentation
    right: RightRepresentation
    unit: NatTrans       # 1_X -> GF, components eta_x = phi(h_x)
    counit: NatTrans     # FG -> 1_A, components eps_a = psi^-1(e_a)

    @property
    def F(self) -> FinFunctor:
        return self.left.functor

    @property
    def G(self) -> FinFunctor:
        return self.right.functor

    @property
    def x_cat(self) -> FinCategory:
        return self.het.x_cat

    @property
    def a_cat(self) -> FinCategory:
        return self.het.a_cat

    def eta(self, x: str) -> str:
        return self.unit.at(x)

    def eps(self, a: str) -> str:
        return self.counit.at(a)

    def h(self, x: str) -> str:
        """Chimera unit h_x in cell (x, Fx), the correlate of 1_Fx."""
        return self.left.universal[x]

    def e(self, a: str) -> str:
        """Chimera counit e_a in cell (Ga, a), the correlate of 1_Ga."""
        return self.right.universal[a]

    def f_of(self, c: str) -> str:
        """The sending-side transpose f(c): x -> Ga of a heteromorphism."""
        x, a = self.het.cell_of(c)
        return self.right.phi[(x, a)][c]

    def g_of(self, c: str) -> str:
        """The receiving-side transpose g(c): Fx -> a of a heteromorphism."""
        x, a = self.het.cell_of(c)
        return self.left.psi_inv(x, a, c)

    def z_of(self, c: str) -> tuple[str, str]:
        """Anti-diagonal pair (G g(c), F f(c)), the twist image of (f, g)."""
        return (self.G.on_mor(self.g_of(c)), self.F.on_mor(self.f_of(c)))


@dataclass(frozen=True)
class HalfAdjunction:
    """One-sided representability: success data for one side, witness for the other."""

    het: HetBifunctor
    left: Union[LeftRepresentation, NonRepresentabilityWitness]
    right: Union[RightRepresentation, NonRepresentabilityWitness]

    @property
    def left_ok(self) -> bool:
        return isinstance(self.left, LeftRepresentation)

    @property
    def right_ok(self) -> bool:
        return isinstance(self.right, RightRepresentation)

    def failed_sides(self) -> tuple[str, ...]:
        out = []
        if not self.left_ok:
            out.append("left")
        if not self.right_ok:
            out.append("right")
        return tuple(out)

    def describe(self) -> str:
        lines = [f"het-bifunctor {self.het.name} is not birepresentable"]
        for side, value in (("left", self.left), ("right", self.right)):
            if isinstance(value, NonRepresentabilityWitness):
                lines.append(value.describe())
            else:
                lines.append(f"{side} representation exists "
                             f"(functor {value.functor.name})")
        return "\n".join(lines)


def build_adjunction(het: HetBifunctor) -> Union[Adjunction, HalfAdjunction]:
    """Run both representation searches and assemble the adjunction.

    Requires a het-bifunctor that passes check_bifunctor; the searches verify
    every representation law they rely on. One-sided representability is
    returned as a HalfAdjunction carrying the surviving side and the witness.
    """
    left = find_left_representation(het)
    right = find_right_representation(het)
    if isinstance(left, NonRepresentabilityWitness) or \
            isinstance(right, NonRepresentabilityWitness):
        return HalfAdjunction(het, left, right)
    xc, ac = het.x_cat, het.a_cat
    F, G = left.functor, right.functor
    eta = {x: right.phi[(x, F.on_obj(x))][left.universal[x]] for x in xc.objects}
    eps = {a: left.psi_inv(G.on_obj(a), a, right.universal[a]) for a in ac.objects}
    unit = NatTrans(f"eta[{het.name}]", identity_functor(xc),
                    compose_functors(F, G), eta)
    counit = NatTrans(f"eps[{het.name}]", compose_functors(G, F),
                      identity_functor(ac), eps)
    for nt in (unit, counit):
        problems = check_nat_trans(nt)
        if not problems.ok:
            raise KernelInvariantError(
                f"derived unit/counit not natural:\n{problems.summary()}")
    adj = Adjunction(het, left, right, unit, counit)
    _verify_adjunction(adj)
    return adj


def _verify_adjunction(adj: Adjunction) -> None:
    """Transpose bijections agree with the unit/counit formulas; triangles hold."""
    xc, ac = adj.x_cat, adj.a_cat
    for x in xc.objects:
        for a in ac.objects:
            fx, ga = adj.F.on_obj(x), adj.G.on_obj(a)
            for g in ac.hom(fx, a):
                via_universals = xc.compose(adj.eta(x), adj.G.on_mor(g))
                via_cells = adj.right.phi[(x, a)][adj.left.psi[(x, a)][g]]
                if via_universals != via_cells:
                    raise KernelInvariantError(
                        f"transpose mismatch at ({x}, {a}, {g}): "
                        f"unit route {via_universals}, cell route {via_cells}")
            for f in xc.hom(x, ga):
                back = ac.compose(adj.F.on_mor(f), adj.eps(a))
                round_trip = xc.compose(adj.eta(x), adj.G.on_mor(back))
                if round_trip != f:
                    raise KernelInvariantError(
                        f"transposes not mutually inverse at ({x}, {a}, {f})")
    for a in ac.objects:
        ga = adj.G.on_obj(a)
        if xc.compose(adj.eta(ga), adj.G.on_mor(adj.eps(a))) != xc.id_of(ga):
            raise KernelInvariantError(f"triangular identity fails at {a}")
    for x in xc.objects:
        fx = adj.F.on_obj(x)
        if ac.compose(adj.F.on_mor(adj.eta(x)), adj.eps(fx)) != ac.id_of(fx):
            raise KernelInvariantError(f"triangular identity fails at {x}")


def transpose(adj: Adjunction, x: str, g: str) -> str:
    """Adjoint transpose of g: Fx -> a, namely (eta_x then Gg): x -> Ga.

    The indexing object x is explicit because F need not be injective on
    objects, so g alone does not determine the cell.
    """
    if adj.a_cat.dom(g) != adj.F.on_obj(x):
        raise StructuralError(f"transpose: {g} does not start at F({x})")
    return adj.x_cat.compose(adj.eta(x), adj.G.on_mor(g))


def transpose_inv(adj: Adjunction, a: str, f: str) -> str:
    """Adjoint transpose of f: x -> Ga, namely (Ff then eps_a): Fx -> a."""
    if adj.x_cat.cod(f) != adj.G.on_obj(a):
        raise StructuralError(f"transpose_inv: {f} does not end at G({a})")
    return adj.a_cat.compose(adj.F.on_mor(f), adj.eps(a))


# ---------------------------------------------------------------------------
# adjunctive squares
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdjunctiveSquare:
    """A commutative square in the product of the two categories.

    Corners are (x-object, a-object) pairs; edges and diagonals are
    (x-morphism, a-morphism) pairs. The main diagonal pairs adjoint
    transposes; the anti-diagonal is its twist image.
    """

    kind: str                      # "adjunctive" or "image"
    x: str
    a: str
    nw: tuple[str, str]
    ne: tuple[str, str]
    sw: tuple[str, str]
    se: tuple[str, str]
    top: tuple[str, str]
    bottom: tuple[str, str]
    left_edge: tuple[str, str]
    right_edge: tuple[str, str]
    main_diagonal: tuple[str, str]
    anti_diagonal: tuple[str, str]
    report: LawReport

    @property
    def commutes(self) -> bool:
        return self.report.ok


def adjunctive_square(adj: Adjunction, a: str, f: str) -> AdjunctiveSquare:
    """Complete the adjunctive square determined by f: x -> Ga.

    The bottom is forced to be the transpose g = f*; commutativity is checked
    componentwise, and the anti-diagonal (Gg, Ff) must make both triangles
    commute.
    """
    xc, ac = adj.x_cat, adj.a_cat
    x = xc.dom(f)
    g = transpose_inv(adj, a, f)
    fx, ga = adj.F.on_obj(x), adj.G.on_obj(a)
    Ff, Gg = adj.F.on_mor(f), adj.G.on_mor(g)
    rep = LawReport(f"adjunctive square of {f}")
    if xc.compose(adj.eta(x), Gg) != f:
        rep.add("square-first-component", (f, g),
                "eta_x then Gg differs from f")
    if ac.compose(Ff, adj.eps(a)) != g:
        rep.add("square-second-component", (f, g),
                "Ff then eps_a differs from g")
    return AdjunctiveSquare(
        kind="adjunctive", x=x, a=a,
        nw=(x, fx), ne=(ga, adj.F.on_obj(ga)), sw=(adj.G.on_obj(fx), fx), se=(ga, a),
        top=(f, Ff), bottom=(Gg, g),
        left_edge=(adj.eta(x), ac.id_of(fx)),
        right_edge=(xc.id_of(ga), adj.eps(a)),
        main_diagonal=(f, g), anti_diagonal=(Gg, Ff),
        report=rep.normalize(),
    )


def adjunctive_square_from_transpose(adj: Adjunction, x: str, g: str) -> AdjunctiveSquare:
    """Dual entry point: complete the square from g: Fx -> a."""
    a = adj.a_cat.cod(g)
    return adjunctive_square(adj, a, transpose(adj, x, g))


def adjunctive_image_square(adj: Adjunction, a: str, f: str) -> AdjunctiveSquare:
    """Twist image of the adjunctive square of f: x -> Ga.

    The original anti-diagonal becomes the main diagonal; a new unique
    anti-diagonal (GFf, FGg) makes both triangles commute. Only this first
    image square is constructed; iterating the twist is out of scope.
    """
    xc, ac = adj.x_cat, adj.a_cat
    x = xc.dom(f)
    g = transpose_inv(adj, a, f)
    fx, ga = adj.F.on_obj(x), adj.G.on_obj(a)
    Ff, Gg = adj.F.on_mor(f), adj.G.on_mor(g)
    GFf, FGg = adj.G.on_mor(Ff), adj.F.on_mor(Gg)
    rep = LawReport(f"adjunctive image square of {f}")
    if xc.compose(GFf, adj.G.on_mor(adj.eps(a))) != Gg:
        rep.add("image-square-first-component", (f, g),
                "GFf then G(eps_a) differs from Gg")
    if ac.compose(adj.F.on_mor(adj.eta(x)), FGg) != Ff:
        rep.add("image-square-second-component", (f, g),
                "F(eta_x) then FGg differs from Ff")
    return AdjunctiveSquare(
        kind="image", x=x, a=a,
        nw=(adj.G.on_obj(fx), fx), ne=(adj.G.on_obj(adj.F.on_obj(ga)), adj.F.on_obj(ga)),
        sw=(adj.G.on_obj(fx), adj.F.on_obj(adj.G.on_obj(fx))), se=(ga, adj.F.on_obj(ga)),
        top=(GFf, Ff), bottom=(Gg, FGg),
        left_edge=(xc.id_of(adj.G.on_obj(fx)), adj.F.on_mor(adj.eta(x))),
        right_edge=(adj.G.on_mor(adj.eps(a)), ac.id_of(adj.F.on_obj(ga))),
        main_diagonal=(Gg, Ff), anti_diagonal=(GFf, FGg),
        report=rep.normalize(),
    )


# ---------------------------------------------------------------------------
# the bifunctor of anti-diagonal maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ZBifunctor:
    """Anti-diagonal pairs z(c) = (G g(c), F f(c)), indexed by originating cell.

    Defined only as the twist image of the het cells, never on arbitrary
    object pairs. The index is part of the datum; two entries of one cell are
    equal iff their pair data are equal.
    """

    adjunction: Adjunction
    cells: dict[tuple[str, str], tuple[tuple[str, str], ...]]
    of_het: dict[str, tuple[str, str]]

    def cell(self, x: str, a: str) -> tuple[tuple[str, str], ...]:
        return self.cells[(x, a)]

    def act_l(self, h: str, pair: tuple[str, str]) -> tuple[str, str]:
        """Action of h: x' -> x, the twist image of the het left action."""
        adj = self.adjunction
        u, v = pair
        Fh = adj.F.on_mor(h)
        return (adj.x_cat.compose(adj.G.on_mor(Fh), u), adj.a_cat.compose(Fh, v))

    def act_r(self, k: str, pair: tuple[str, str]) -> tuple[str, str]:
        """Action of k: a -> a', the twist image of the het right action."""
        adj = self.adjunction
        u, v = pair
        Gk = adj.G.on_mor(k)
        return (adj.x_cat.compose(u, Gk), adj.a_cat.compose(v, adj.F.on_mor(Gk)))


def z_bifunctor(adj: Adjunction) -> ZBifunctor:
    cells = {}
    of_het = {}
    for x in adj.x_cat.objects:
        for a in adj.a_cat.objects:
            pairs = []
            for c in adj.het.cell(x, a):
                pair = adj.z_of(c)
                pairs.append(pair)
                of_het[c] = pair
            cells[(x, a)] = tuple(pairs)
    return ZBifunctor(adj, cells, of_het)


@dataclass(frozen=True)
class ZigZagFactorization:
    """c = e_a after z(c) after h_x, with the uniqueness certificate."""

    het_elem: str
    x: str
    a: str
    sending_universal: str          # h_x
    anti_diagonal: tuple[str, str]  # z(c)
    receiving_universal: str        # e_a
    f: str                          # transpose x -> Ga
    g: str                          # transpose Fx -> a
    factor_count: int               # anti-diagonals satisfying both triangles
    report: LawReport

    @property
    def unique(self) -> bool:
        return self.factor_count == 1

    @property
    def ok(self) -> bool:
        return self.report.ok and self.unique


def zig_zag_factorize(adj: Adjunction, c: str) -> ZigZagFactorization:
    """Factor a heteromorphism through both universals by the anti-diagonal.

    Certifies, in the het actions, that c is recovered by composing h_x with
    the anti-diagonal pair and the receiving universal (and dually), and that
    z(c) is the unique anti-diagonal with that property.
    """
    het = adj.het
    x, a = het.cell_of(c)
    f, g = adj.f_of(c), adj.g_of(c)
    u, v = adj.z_of(c)
    hx, ea = adj.h(x), adj.e(a)
    xc, ac = adj.x_cat, adj.a_cat
    rep = LawReport(f"zig-zag factorization of {c}")
    if het.act_r(g, hx) != c:
        rep.add("left-factorization", (c, g), "g(c) . h_x differs from c")
    if het.act_l(f, ea) != c:
        rep.add("right-factorization", (c, f), "e_a . f(c) differs from c")
    # composite through the anti-diagonal, evaluated in the actions:
    # over the top: h_x, then the A-part of z(c), then the counit
    over = het.act_r(adj.eps(a), het.act_r(v, hx))
    if over != c:
        rep.add("zig-zag-action-top", (c,), f"eps_a.((Ff).h_x) = {over}")
    # under the bottom: e_a pulled back along the X-part of z(c) and the unit
    under = het.act_l(adj.eta(x), het.act_l(u, ea))
    if under != c:
        rep.add("zig-zag-action-bottom", (c,), f"(e_a.(Gg)).eta_x = {under}")
    if xc.compose(adj.eta(x), u) != f:
        rep.add("upper-triangle", (c,), "h_x then z(c) differs from f(c)")
    if ac.compose(v, adj.eps(a)) != g:
        rep.add("lower-triangle", (c,), "z(c) then e_a differs from g(c)")
    count = 0
    for other in het.cell(x, a):
        u2, v2 = adj.z_of(other)
        if xc.compose(adj.eta(x), u2) == f and ac.compose(v2, adj.eps(a)) == g:
            count += 1
    return ZigZagFactorization(
        het_elem=c, x=x, a=a, sending_universal=hx, anti_diagonal=(u, v),
        receiving_universal=ea, f=f, g=g, factor_count=count,
        report=rep.normalize(),
    )


# ---------------------------------------------------------------------------
# law suites
# ---------------------------------------------------------------------------

def four_bifunctor_iso(adj: Adjunction) -> LawReport:
    """Cellwise Hom(Fx, a) ~ Het(x, a) ~ Z(Fx, Ga) ~ Hom(x, Ga), naturally.

    Verifies bijectivity of psi, phi, and the twist map z on every cell, and
    naturality of all three against the actions in both variables.
    """
    rep = LawReport(f"four-bifunctor isomorphism of {adj.het.name}")
    het = adj.het
    xc, ac = adj.x_cat, adj.a_cat
    zb = z_bifunctor(adj)
    for x in xc.objects:
        for a in ac.objects:
            cell = het.cell(x, a)
            homs_a = ac.hom(adj.F.on_obj(x), a)
            homs_x = xc.hom(x, adj.G.on_obj(a))
            if len(homs_a) != len(cell):
                rep.add("psi-cardinality", (x, a),
                        f"|Hom(Fx, a)| = {len(homs_a)}, |Het| = {len(cell)}")
            if len(homs_x) != len(cell):
                rep.add("phi-cardinality", (x, a),
                        f"|Hom(x, Ga)| = {len(homs_x)}, |Het| = {len(cell)}")
            psi_values = [adj.left.psi[(x, a)][g] for g in homs_a]
            if sorted(psi_values) != sorted(cell):
                rep.add("psi-bijective", (x, a), "psi is not onto the cell")
            phi_values = [adj.right.phi[(x, a)][c] for c in cell]
            if sorted(phi_values) != sorted(homs_x):
                rep.add("phi-bijective", (x, a), "phi is not onto Hom(x, Ga)")
            pairs = zb.cell(x, a)
            if len(set(pairs)) != len(cell):
                rep.add("z-bijective", (x, a), "twist map is not injective on the cell")
    # naturality of the twist map against both actions
    for h in xc.morphisms:
        for a in ac.objects:
            for c in het.cell(h.cod, a):
                lhs = zb.of_het[het.act_l(h.id, c)]
                rhs = zb.act_l(h.id, zb.of_het[c])
                if lhs != rhs:
                    rep.add("z-naturality-left", (h.id, a, c),
                            f"z(c.h) = {lhs}, twist(h) acting on z(c) = {rhs}")
    for k in ac.morphisms:
        for x in xc.objects:
            for c in het.cell(x, k.dom):
                lhs = zb.of_het[het.act_r(k.id, c)]
                rhs = zb.act_r(k.id, zb.of_het[c])
                if lhs != rhs:
                    rep.add("z-naturality-right", (k.id, x, c),
                            f"z(k.c) = {lhs}, twist(k) acting on z(c) = {rhs}")
    return rep.normalize()


def over_and_back_and_triangles(adj: Adjunction) -> LawReport:
    """Triangular identities, over-and-back identities, and the four
    over-across-and-back factorization equations, exhaustively.
    """
    rep = LawReport(f"identity suite of {adj.het.name}")
    het = adj.het
    xc, ac = adj.x_cat, adj.a_cat
    for a in ac.objects:
        ga = adj.G.on_obj(a)
        if xc.compose(adj.eta(ga), adj.G.on_mor(adj.eps(a))) != xc.id_of(ga):
            rep.add("triangular-identity-G", (a,), "G(eps_a) after eta_Ga is not 1_Ga")
    for x in xc.objects:
        fx = adj.F.on_obj(x)
        if ac.compose(adj.F.on_mor(adj.eta(x)), adj.eps(fx)) != ac.id_of(fx):
            rep.add("triangular-identity-F", (x,), "eps_Fx after F(eta_x) is not 1_Fx")
    # over-and-back identities, short forms of the triangles on functor images:
    # h_{x2} = z(h_x) = (1_GFx, F eta_x) and e_{a1} = z(e_a) = (G eps_a, 1_FGa)
    for x in xc.objects:
        fx = adj.F.on_obj(x)
        u, v = adj.z_of(adj.h(x))
        if u != xc.id_of(adj.G.on_obj(fx)):
            rep.add("h2-form", (x,), f"z(h_x) first component is {u}, expected identity")
        if v != adj.F.on_mor(adj.eta(x)):
            rep.add("h2-form", (x,), f"z(h_x) second component is {v}, expected F(eta_x)")
        if ac.compose(v, adj.eps(fx)) != ac.id_of(fx):
            rep.add("over-and-back-F", (x,), "e_Fx after h_x2 is not 1_Fx")
    for a in ac.objects:
        ga = adj.G.on_obj(a)
        u, v = adj.z_of(adj.e(a))
        if v != ac.id_of(adj.F.on_obj(ga)):
            rep.add("e1-form", (a,), f"z(e_a) second component is {v}, expected identity")
        if u != adj.G.on_mor(adj.eps(a)):
            rep.add("e1-form", (a,), f"z(e_a) first component is {u}, expected G(eps_a)")
        if xc.compose(adj.eta(ga), u) != xc.id_of(ga):
            rep.add("over-and-back-G", (a,), "e_a1 after h_Ga is not 1_Ga")
    # composite chimera identities evaluated in the het actions: the unit and
    # counit factorizations pin the chimera universals against each other
    for x in xc.objects:
        fx = adj.F.on_obj(x)
        if het.act_l(adj.eta(x), adj.e(fx)) != adj.h(x):
            rep.add("chimera-unit-composite", (x,), "e_Fx . eta_x differs from h_x")
    for a in ac.objects:
        ga = adj.G.on_obj(a)
        if het.act_r(adj.eps(a), adj.h(ga)) != adj.e(a):
            rep.add("chimera-counit-composite", (a,), "eps_a . h_Ga differs from e_a")
    # the four over-across-and-back factorizations, for every f: x -> Ga
    for x in xc.objects:
        for a in ac.objects:
            ga = adj.G.on_obj(a)
            for f in xc.hom(x, ga):
                g = transpose_inv(adj, a, f)
                Ff, Gg = adj.F.on_mor(f), adj.G.on_mor(g)
                if xc.compose(adj.eta(x), Gg) != f:
                    rep.add("factorization-unit", (x, a, f),
                            "eta_x then G(f*) differs from f")
                if xc.compose_many(adj.eta(x), adj.G.on_mor(Ff),
                                   adj.G.on_mor(adj.eps(a))) != f:
                    rep.add("factorization-over-across-f", (x, a, f),
                            "eta_x then GFf then G(eps_a) differs from f")
                if ac.compose(Ff, adj.eps(a)) != g:
                    rep.add("factorization-counit", (x, a, f),
                            "Ff then eps_a differs from f*")
                if ac.compose_many(adj.F.on_mor(adj.eta(x)), adj.F.on_mor(Gg),
                                   adj.eps(a)) != g:
                    rep.add("factorization-over-across-g", (x, a, f),
                            "F(eta_x) then FG(f*) then eps_a differs from f*")
    return rep.normalize()


# ---------------------------------------------------------------------------
# chimera natural transformations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ChimeraNatTrans:
    """Components are heteromorphisms between the images of two functors
    that share a source but land in different categories."""

    name: str
    left_functor: FinFunctor     # F: X -> A
    right_functor: FinFunctor    # H: X -> B
    het: HetBifunctor            # over (A, B)
    components: dict[str, str]   # x -> element of cell (Fx, Hx)


def check_chimera_nat_trans(t: ChimeraNatTrans) -> LawReport:
    """Empty report iff every het-naturality square commutes."""
    F, H = t.left_functor, t.right_functor
    if F.source != H.source:
        raise StructuralError(f"{t.name}: functors have different sources")
    if t.het.x_cat != F.target or t.het.a_cat != H.target:
        raise StructuralError(f"{t.name}: het-bifunctor does not match functor targets")
    rep = LawReport(f"chimera natural transformation {t.name}")
    for x in F.source.objects:
        c = t.components.get(x)
        if c is None:
            raise StructuralError(f"{t.name}: no component at {x!r}")
        if t.het.cell_of(c) != (F.on_obj(x), H.on_obj(x)):
            raise StructuralError(
                f"{t.name}: component at {x} lies in cell {t.het.cell_of(c)}, "
                f"expected ({F.on_obj(x)}, {H.on_obj(x)})")
    for j in F.source.morphisms:
        x, x2 = j.dom, j.cod
        lhs = t.het.act_r(H.on_mor(j.id), t.components[x])
        rhs = t.het.act_l(F.on_mor(j.id), t.components[x2])
        if lhs != rhs:
            rep.add("het-naturality", (j.id, x, x2),
                    f"Hj . c_x = {lhs}, c_x' . Fj = {rhs}")
    return rep.normalize()


def chimera_unit(adj: Adjunction) -> ChimeraNatTrans:
    """h: 1_X => F relative to the adjunction's het, components h_x."""
    return ChimeraNatTrans(
        name=f"h[{adj.het.name}]",
        left_functor=identity_functor(adj.x_cat),
        right_functor=adj.F,
        het=adj.het,
        components={x: adj.h(x) for x in adj.x_cat.objects},
    )


def chimera_counit(adj: Adjunction) -> ChimeraNatTrans:
    """e: G => 1_A relative to the adjunction's het, components e_a."""
    return ChimeraNatTrans(
        name=f"e[{adj.het.name}]",
        left_functor=adj.G,
        right_functor=identity_functor(adj.a_cat),
        het=adj.het,
        components={a: adj.e(a) for a in adj.a_cat.objects},
    )


# ---------------------------------------------------------------------------
# the abstract embedding and the round-trip
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AbstractHet:
    """The het-bifunctor of transpose pairs inside the product category,
    between the embedded isomorphic copies of the two categories."""

    het: HetBifunctor            # over (X-hat, A-hat)
    x_hat: FinCategory
    a_hat: FinCategory
    f_hat: FinFunctor            # twist restricted to X-hat
    g_hat: FinFunctor            # twist restricted to A-hat
    embed_x: FinFunctor          # X -> X-hat, x -> (x, Fx)
    embed_a: FinFunctor          # A -> A-hat, a -> (Ga, a)


def abstract_het(adj: Adjunction) -> AbstractHet:
    """Build Het(x-hat, a-hat) = { (f, f*) : (x, Fx) -> (Ga, a) }.

    The cells are the main-diagonal pairs of commutative adjunctive squares;
    the actions are componentwise pre/postcomposition with the embedded
    morphisms, hence closed by the naturality of the transpose.
    """
    xc, ac = adj.x_cat, adj.a_cat
    F, G = adj.F, adj.G

    def hat_x_obj(x: str) -> str:
        return pair_id(x, F.on_obj(x))

    def hat_a_obj(a: str) -> str:
        return pair_id(G.on_obj(a), a)

    x_hat = FinCategory(
        name=f"{xc.name}-hat",
        objects=tuple(hat_x_obj(x) for x in xc.objects),
        morphisms=tuple(
            Morphism(pair_id(j.id, F.on_mor(j.id)), hat_x_obj(j.dom), hat_x_obj(j.cod))
            for j in xc.morphisms),
        identity={hat_x_obj(x): pair_id(xc.id_of(x), F.on_mor(xc.id_of(x)))
                  for x in xc.objects},
        comp={(pair_id(j1, F.on_mor(j1)), pair_id(j2, F.on_mor(j2))):
              pair_id(j12, F.on_mor(j12))
              for (j1, j2), j12 in xc.comp.items()},
    )
    a_hat = FinCategory(
        name=f"{ac.name}-hat",
        objects=tuple(hat_a_obj(a) for a in ac.objects),
        morphisms=tuple(
            Morphism(pair_id(G.on_mor(k.id), k.id), hat_a_obj(k.dom), hat_a_obj(k.cod))
            for k in ac.morphisms),
        identity={hat_a_obj(a): pair_id(G.on_mor(ac.id_of(a)), ac.id_of(a))
                  for a in ac.objects},
        comp={(pair_id(G.on_mor(k1), k1), pair_id(G.on_mor(k2), k2)):
              pair_id(G.on_mor(k12), k12)
              for (k1, k2), k12 in ac.comp.items()},
    )
    # index the hat objects back to their sources; the embeddings are bijective
    x_of_hat = {hat_x_obj(x): x for x in xc.objects}
    a_of_hat = {hat_a_obj(a): a for a in ac.objects}

    def cell_fn(xh: str, ah: str) -> tuple[str, ...]:
        x, a = x_of_hat[xh], a_of_hat[ah]
        return tuple(pair_id(f, transpose_inv(adj, a, f))
                     for f in xc.hom(x, G.on_obj(a)))

    cells = {(xh, ah): cell_fn(xh, ah) for xh in x_hat.objects for ah in a_hat.objects}
    pair_of = {}
    for (xh, ah), elems in cells.items():
        x, a = x_of_hat[xh], a_of_hat[ah]
        for cid, f in zip(elems, xc.hom(x, G.on_obj(a))):
            pair_of[cid] = (x, a, f, transpose_inv(adj, a, f))

    act_left = {}
    for j in xc.morphisms:
        jid = pair_id(j.id, F.on_mor(j.id))
        table = {}
        for ah in a_hat.objects:
            for cid in cells[(hat_x_obj(j.cod), ah)]:
                x, a, f, g = pair_of[cid]
                nf = xc.compose(j.id, f)
                table[cid] = pair_id(nf, transpose_inv(adj, a, nf))
        act_left[jid] = table
    act_right = {}
    for k in ac.morphisms:
        kid = pair_id(G.on_mor(k.id), k.id)
        table = {}
        for xh in x_hat.objects:
            for cid in cells[(xh, hat_a_obj(k.dom))]:
                x, a, f, g = pair_of[cid]
                nf = xc.compose(f, G.on_mor(k.id))
                table[cid] = pair_id(nf, transpose_inv(adj, k.cod, nf))
        act_right[kid] = table
    het = HetBifunctor(f"abstract[{adj.het.name}]", x_hat, a_hat,
                       cells, act_left, act_right)
    f_hat = FinFunctor(
        name="F-hat", source=x_hat, target=a_hat,
        obj_map={hat_x_obj(x): hat_a_obj(F.on_obj(x)) for x in xc.objects},
        mor_map={pair_id(j.id, F.on_mor(j.id)):
                 pair_id(G.on_mor(F.on_mor(j.id)), F.on_mor(j.id))
                 for j in xc.morphisms},
    )
    g_hat = FinFunctor(
        name="G-hat", source=a_hat, target=x_hat,
        obj_map={hat_a_obj(a): hat_x_obj(G.on_obj(a)) for a in ac.objects},
        mor_map={pair_id(G.on_mor(k.id), k.id):
                 pair_id(G.on_mor(k.id), F.on_mor(G.on_mor(k.id)))
                 for k in ac.morphisms},
    )
    embed_x = FinFunctor(
        name="embed-X", source=xc, target=x_hat,
        obj_map={x: hat_x_obj(x) for x in xc.objects},
        mor_map={j.id: pair_id(j.id, F.on_mor(j.id)) for j in xc.morphisms},
    )
    embed_a = FinFunctor(
        name="embed-A", source=ac, target=a_hat,
        obj_map={a: hat_a_obj(a) for a in ac.objects},
        mor_map={k.id: pair_id(G.on_mor(k.id), k.id) for k in ac.morphisms},
    )
    return AbstractHet(het, x_hat, a_hat, f_hat, g_hat, embed_x, embed_a)


def representation_roundtrip(adj: Adjunction) -> LawReport:
    """Rebuild the adjunction from its abstract het-bifunctor and compare.

    The recovered functors must equal the hatted twist functors on the nose,
    and conjugating by the embeddings must recover the original functors.
    """
    rep = LawReport(f"representation round-trip of {adj.het.name}")
    ah = abstract_het(adj)
    rebuilt = build_adjunction(ah.het)
    if not isinstance(rebuilt, Adjunction):
        rep.add("roundtrip-representability", (adj.het.name,),
                rebuilt.describe())
        return rep.normalize()

    def first_divergence(got: FinFunctor, want: FinFunctor) -> tuple[str, ...] | None:
        for o in want.source.objects:
            if got.on_obj(o) != want.on_obj(o):
                return (o, got.on_obj(o), want.on_obj(o))
        for m in want.source.morphisms:
            if got.on_mor(m.id) != want.on_mor(m.id):
                return (m.id, got.on_mor(m.id), want.on_mor(m.id))
        return None

    div = first_divergence(rebuilt.F, ah.f_hat)
    if div:
        rep.add("recovered-left-adjoint", div, "recovered functor differs from F-hat")
    div = first_divergence(rebuilt.G, ah.g_hat)
    if div:
        rep.add("recovered-right-adjoint", div, "recovered functor differs from G-hat")
    # recovered universal elements are the embedded sending/receiving universals
    for x in adj.x_cat.objects:
        want = pair_id(adj.eta(x), adj.a_cat.id_of(adj.F.on_obj(x)))
        got = rebuilt.h(ah.embed_x.on_obj(x))
        if got != want:
            rep.add("recovered-sending-universal", (x, got, want), "")
    for a in adj.a_cat.objects:
        want = pair_id(adj.x_cat.id_of(adj.G.on_obj(a)), adj.eps(a))
        got = rebuilt.e(ah.embed_a.on_obj(a))
        if got != want:
            rep.add("recovered-receiving-universal", (a, got, want), "")
    # comparison isomorphism with the originals: conjugating by the embeddings
    lhs = compose_functors(ah.embed_x, rebuilt.F)
    rhs = compose_functors(adj.F, ah.embed_a)
    div = first_divergence(lhs, rhs)
    if div:
        rep.add("embedding-comparison-F", div,
                "embed then recovered F differs from F then embed")
    lhs = compose_functors(ah.embed_a, rebuilt.G)
    rhs = compose_functors(adj.G, ah.embed_x)
    div = first_divergence(lhs, rhs)
    if div:
        rep.add("embedding-comparison-G", div,
                "embed then recovered G differs from G then embed")
    # the rebuilt unit is the embedded image of the original unit
    for x in adj.x_cat.objects:
        if rebuilt.eta(ah.embed_x.on_obj(x)) != ah.embed_x.on_mor(adj.eta(x)):
            rep.add("recovered-unit", (x,), "rebuilt unit differs from embedded unit")
    for a in adj.a_cat.objects:
        if rebuilt.eps(ah.embed_a.on_obj(a)) != ah.embed_a.on_mor(adj.eps(a)):
            rep.add("recovered-counit", (a,), "rebuilt counit differs from embedded counit")
    return rep.normalize()
