"""Set-valued bifunctors of heteromorphisms and their representability machinery.

A HetBifunctor stores, for every pair (x-object, a-object), a finite cell of
heteromorphism ids, together with a left action (precomposition by morphisms
of the sending category, contravariant) and a right action (postcomposition by
morphisms of the receiving category, covariant). The two actions commute: the
bimodule law (k.c).h = k.(c.h).

Representability on the left means each Het(x, -) has a universal element
(Fx, h_x); the assignment x -> Fx then extends to a functor by a unique
fill-in and the cells become naturally isomorphic to hom-sets out of Fx.
Dually on the right. The searches below decide representability exhaustively
and either return the representation, fully verified, or a concrete witness
that no candidate works.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import StructuralError
from .fincat import FinCategory, FinFunctor, check_functor
from .report import LawReport


@dataclass(frozen=True, eq=False)
class HetBifunctor:
    name: str
    x_cat: FinCategory
    a_cat: FinCategory
    cells: dict[tuple[str, str], tuple[str, ...]]
    act_left: dict[str, dict[str, str]]
    act_right: dict[str, dict[str, str]]

    def __post_init__(self):
        cell_of: dict[str, tuple[str, str]] = {}
        for (x, a), elems in self.cells.items():
            if x not in set(self.x_cat.objects) or a not in set(self.a_cat.objects):
                raise StructuralError(f"{self.name}: cell indexed by unknown objects ({x}, {a})")
            for c in elems:
                if c in cell_of:
                    raise StructuralError(f"{self.name}: element id {c!r} appears in two cells")
                cell_of[c] = (x, a)
        for pair in ((x, a) for x in self.x_cat.objects for a in self.a_cat.objects):
            if pair not in self.cells:
                raise StructuralError(f"{self.name}: missing cell {pair}")
        object.__setattr__(self, "_cell_of", cell_of)

    def cell(self, x: str, a: str) -> tuple[str, ...]:
        return self.cells[(x, a)]

    def cell_of(self, c: str) -> tuple[str, str]:
        try:
            return self._cell_of[c]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown heteromorphism id {c!r}") from None

    def act_l(self, h: str, c: str) -> str:
        """Precompose c: x => a with h: x' -> x, landing in cell (x', a)."""
        try:
            return self.act_left[h][c]
        except KeyError:
            raise StructuralError(
                f"{self.name}: left action of {h!r} undefined at {c!r}") from None

    def act_r(self, k: str, c: str) -> str:
        """Postcompose c: x => a with k: a -> a', landing in cell (x, a')."""
        try:
            return self.act_right[k][c]
        except KeyError:
            raise StructuralError(
                f"{self.name}: right action of {k!r} undefined at {c!r}") from None

    @property
    def elements(self) -> tuple[str, ...]:
        return tuple(self._cell_of)

    def __repr__(self) -> str:
        total = sum(len(v) for v in self.cells.values())
        return f"HetBifunctor({self.name!r}, {total} heteromorphisms)"


def build_het(name: str, x_cat: FinCategory, a_cat: FinCategory,
              cell_fn: Callable[[str, str], tuple[str, ...]],
              act_left_fn: Callable[[str, str], str],
              act_right_fn: Callable[[str, str], str]) -> HetBifunctor:
    """Tabulate a het-bifunctor from callables.

    act_left_fn(h, c) receives h: x' -> x and c in a cell (x, a); dually for
    act_right_fn. Both are tabulated over exactly the composable pairs.
    """
    cells = {(x, a): tuple(cell_fn(x, a)) for x in x_cat.objects for a in a_cat.objects}
    by_x: dict[str, list[str]] = {x: [] for x in x_cat.objects}
    by_a: dict[str, list[str]] = {a: [] for a in a_cat.objects}
    for (x, a), elems in cells.items():
        by_x[x].extend(elems)
        by_a[a].extend(elems)
    act_left = {
        h.id: {c: act_left_fn(h.id, c) for c in by_x[h.cod]}
        for h in x_cat.morphisms
    }
    act_right = {
        k.id: {c: act_right_fn(k.id, c) for c in by_a[k.dom]}
        for k in a_cat.morphisms
    }
    return HetBifunctor(name, x_cat, a_cat, cells, act_left, act_right)


def hom_bifunctor(cat: FinCategory) -> HetBifunctor:
    """The hom-bifunctor of a category, as a het-bifunctor from it to itself."""
    return build_het(
        f"Hom_{cat.name}", cat, cat,
        cell_fn=cat.hom,
        act_left_fn=cat.compose,
        act_right_fn=lambda k, c: cat.compose(c, k),
    )


def check_bifunctor(het: HetBifunctor) -> LawReport:
    """Check identity actions, two-sided functoriality, and the bimodule law.

    Action entries that are missing or land in the wrong cell are structural
    errors and raise; only genuine law violations are reported.
    """
    rep = LawReport(f"bifunctor {het.name}")
    xc, ac = het.x_cat, het.a_cat
    # structural: totality and cell placement of every action entry
    for h in xc.morphisms:
        table = het.act_left.get(h.id)
        if table is None:
            raise StructuralError(f"{het.name}: no left action table for {h.id}")
        for a in ac.objects:
            for c in het.cell(h.cod, a):
                if c not in table:
                    raise StructuralError(
                        f"{het.name}: left action of {h.id} undefined at {c}")
                if het.cell_of(table[c]) != (h.dom, a):
                    raise StructuralError(
                        f"{het.name}: left action of {h.id} sends {c} outside cell ({h.dom}, {a})")
    for k in ac.morphisms:
        table = het.act_right.get(k.id)
        if table is None:
            raise StructuralError(f"{het.name}: no right action table for {k.id}")
        for x in xc.objects:
            for c in het.cell(x, k.dom):
                if c not in table:
                    raise StructuralError(
                        f"{het.name}: right action of {k.id} undefined at {c}")
                if het.cell_of(table[c]) != (x, k.cod):
                    raise StructuralError(
                        f"{het.name}: right action of {k.id} sends {c} outside cell ({x}, {k.cod})")
    # identity actions are identities
    for x in xc.objects:
        ix = xc.id_of(x)
        for c, image in het.act_left[ix].items():
            if image != c:
                rep.add("identity-left-action", (x, c), f"1.{c} = {image}")
    for a in ac.objects:
        ia = ac.id_of(a)
        for c, image in het.act_right[ia].items():
            if image != c:
                rep.add("identity-right-action", (a, c), f"{c}.1 = {image}")
    # contravariant functoriality on the left: act(h' then h) = act(h') after act(h)
    for (h2, h1), h21 in xc.comp.items():
        for c in het.act_left[h21]:
            step = het.act_left[h1].get(c)
            two = het.act_left[h2].get(step) if step is not None else None
            if het.act_left[h21][c] != two:
                rep.add("left-functoriality", (h2, h1, c),
                        f"act({h21})({c}) = {het.act_left[h21][c]}, stepwise = {two}")
    # covariant functoriality on the right
    for (k1, k2), k12 in ac.comp.items():
        for c in het.act_right[k12]:
            step = het.act_right[k1].get(c)
            two = het.act_right[k2].get(step) if step is not None else None
            if het.act_right[k12][c] != two:
                rep.add("right-functoriality", (k1, k2, c),
                        f"act({k12})({c}) = {het.act_right[k12][c]}, stepwise = {two}")
    # bimodule associativity (k.c).h = k.(c.h)
    for h in xc.morphisms:
        for k in ac.morphisms:
            for c in het.cell(h.cod, k.dom):
                lhs = het.act_left[h.id].get(het.act_right[k.id].get(c))
                rhs = het.act_right[k.id].get(het.act_left[h.id].get(c))
                if lhs != rhs or lhs is None:
                    rep.add("bimodule-associativity", (h.id, k.id, c),
                            f"(k.c).h = {lhs}, k.(c.h) = {rhs}")
    return rep.normalize()


# ---------------------------------------------------------------------------
# universal elements and representations
# ---------------------------------------------------------------------------

def universal_element_check(het: HetBifunctor, x: str, b: str,
                            u: str) -> tuple[bool, tuple[str, str, int] | None]:
    """Is (b, u) a universal element for Het(x, -)?

    True iff every c in every cell (x, a) factors as c = u.g for exactly one
    g: b -> a. On failure returns (a, c, factor_count) for the offending c.
    """
    if het.cell_of(u) != (x, b):
        raise StructuralError(f"{het.name}: {u!r} is not in cell ({x}, {b})")
    for a in het.a_cat.objects:
        for c in het.cell(x, a):
            n = sum(1 for g in het.a_cat.hom(b, a) if het.act_r(g, u) == c)
            if n != 1:
                return False, (a, c, n)
    return True, None


def co_universal_element_check(het: HetBifunctor, a: str, b: str,
                               u: str) -> tuple[bool, tuple[str, str, int] | None]:
    """Dual check: is (b, u) universal for Het(-, a)?

    True iff every c in every cell (x, a) factors as c = u.f for exactly one
    f: x -> b in the sending category.
    """
    if het.cell_of(u) != (b, a):
        raise StructuralError(f"{het.name}: {u!r} is not in cell ({b}, {a})")
    for x in het.x_cat.objects:
        for c in het.cell(x, a):
            n = sum(1 for f in het.x_cat.hom(x, b) if het.act_l(f, u) == c)
            if n != 1:
                return False, (x, c, n)
    return True, None


@dataclass(frozen=True)
class CandidateFailure:
    candidate_object: str
    candidate_element: str
    offending_index: str
    offending_element: str
    factor_count: int


@dataclass(frozen=True)
class NonRepresentabilityWitness:
    """Proof that some Het(x, -) (or Het(-, a)) has no universal element."""

    side: str                       # "left" or "right"
    index_object: str               # the x (left) or a (right) that fails
    degenerate: bool                # every cell at this index is empty
    failures: tuple[CandidateFailure, ...]

    def describe(self) -> str:
        kind = "Het(%s, -)" % self.index_object if self.side == "left" \
            else "Het(-, %s)" % self.index_object
        lines = [f"{self.side} representation fails at {self.index_object}: "
                 f"no universal element for {kind}"]
        if self.degenerate:
            lines.append("  (degenerate: every cell at this index is empty)")
        for f in self.failures:
            lines.append(
                f"  candidate ({f.candidate_object}, {f.candidate_element}): element "
                f"{f.offending_element} of cell at {f.offending_index} has "
                f"{f.factor_count} factorizations")
        return "\n".join(lines)


@dataclass(frozen=True, eq=False)
class LeftRepresentation:
    """F: X -> A with universal elements h_x and bijections psi: Hom(Fx, a) ~ Het(x, a)."""

    het: HetBifunctor
    functor: FinFunctor
    universal: dict[str, str]                       # x -> h_x in cell (x, Fx)
    psi: dict[tuple[str, str], dict[str, str]]      # (x, a) -> {g: Fx -> a  ->  het}
    equivalent_universals: dict[str, tuple[tuple[str, str], ...]]

    def psi_inv(self, x: str, a: str, c: str) -> str:
        for g, image in self.psi[(x, a)].items():
            if image == c:
                return g
        raise StructuralError(f"psi not surjective at ({x}, {a}): {c!r} has no preimage")


@dataclass(frozen=True, eq=False)
class RightRepresentation:
    """G: A -> X with universal elements e_a and bijections phi: Het(x, a) ~ Hom(x, Ga)."""

    het: HetBifunctor
    functor: FinFunctor
    universal: dict[str, str]                       # a -> e_a in cell (Ga, a)
    phi: dict[tuple[str, str], dict[str, str]]      # (x, a) -> {het  ->  f: x -> Ga}
    equivalent_universals: dict[str, tuple[tuple[str, str], ...]]

    def phi_inv(self, x: str, a: str, f: str) -> str:
        for c, image in self.phi[(x, a)].items():
            if image == f:
                return c
        raise StructuralError(f"phi not surjective at ({x}, {a}): {f!r} has no preimage")


class KernelInvariantError(AssertionError):
    """An internal consistency check failed; indicates a bug or bad input."""


def _verify_universal_pair_iso(het: HetBifunctor, x: str, first: tuple[str, str],
                               other: tuple[str, str], side: str) -> None:
    """Two universal elements for the same index must have isomorphic carriers."""
    (b0, u0), (b1, u1) = first, other
    if side == "left":
        homs01 = [g for g in het.a_cat.hom(b0, b1) if het.act_r(g, u0) == u1]
        homs10 = [g for g in het.a_cat.hom(b1, b0) if het.act_r(g, u1) == u0]
        cat = het.a_cat
    else:
        homs01 = [f for f in het.x_cat.hom(b1, b0) if het.act_l(f, u0) == u1]
        homs10 = [f for f in het.x_cat.hom(b0, b1) if het.act_l(f, u1) == u0]
        cat = het.x_cat
    if len(homs01) != 1 or len(homs10) != 1:
        raise KernelInvariantError(
            f"universal elements at {x} lack unique mutual factor maps")
    g01, g10 = homs01[0], homs10[0]
    if side == "left":
        back = cat.compose(g01, g10)
        forth = cat.compose(g10, g01)
    else:
        back = cat.compose(g10, g01)
        forth = cat.compose(g01, g10)
    if back != cat.id_of(b0) or forth != cat.id_of(b1):
        raise KernelInvariantError(
            f"factor maps between universal carriers {b0}, {b1} at {x} "
            f"do not compose to identities")


def check_left_representation(rep: LeftRepresentation) -> LawReport:
    """Verify psi bijectivity, naturality in both variables, and functor laws."""
    het = rep.het
    out = LawReport(f"left representation of {het.name}")
    out.extend(check_functor(rep.functor))
    fun = rep.functor
    for x in het.x_cat.objects:
        hx = rep.universal[x]
        if het.cell_of(hx) != (x, fun.on_obj(x)):
            out.add("universal-placement", (x, hx), "h_x not in cell (x, Fx)")
    for x in het.x_cat.objects:
        for a in het.a_cat.objects:
            table = rep.psi[(x, a)]
            homs = het.a_cat.hom(fun.on_obj(x), a)
            if set(table) != set(homs):
                out.add("psi-domain", (x, a), "psi not defined on exactly Hom(Fx, a)")
                continue
            images = list(table.values())
            if sorted(images) != sorted(het.cell(x, a)):
                out.add("psi-bijective", (x, a),
                        f"psi image {sorted(images)} != cell {sorted(het.cell(x, a))}")
            for g, c in table.items():
                if het.act_r(g, rep.universal[x]) != c:
                    out.add("psi-formula", (x, a, g), "psi(g) != u.g")
    # naturality of psi in a: psi(g then k) = k.psi(g)
    for x in het.x_cat.objects:
        for k in het.a_cat.morphisms:
            a, a2 = k.dom, k.cod
            for g, c in rep.psi[(x, a)].items():
                lhs = rep.psi[(x, a2)].get(het.a_cat.compose(g, k.id))
                rhs = het.act_r(k.id, c)
                if lhs != rhs:
                    out.add("psi-naturality-right", (x, k.id, g),
                            f"psi(g;k) = {lhs}, k.psi(g) = {rhs}")
    # naturality of psi in x: psi_{x'}(Fh then g) = psi_x(g).h for h: x' -> x
    for h in het.x_cat.morphisms:
        x2, x = h.dom, h.cod
        for a in het.a_cat.objects:
            for g, c in rep.psi[(x, a)].items():
                lhs = rep.psi[(x2, a)].get(het.a_cat.compose(fun.on_mor(h.id), g))
                rhs = het.act_l(h.id, c)
                if lhs != rhs:
                    out.add("psi-naturality-left", (h.id, a, g),
                            f"psi(Fh;g) = {lhs}, psi(g).h = {rhs}")
    return out.normalize()


def check_right_representation(rep: RightRepresentation) -> LawReport:
    het = rep.het
    out = LawReport(f"right representation of {het.name}")
    out.extend(check_functor(rep.functor))
    fun = rep.functor
    for a in het.a_cat.objects:
        ea = rep.universal[a]
        if het.cell_of(ea) != (fun.on_obj(a), a):
            out.add("universal-placement", (a, ea), "e_a not in cell (Ga, a)")
    for x in het.x_cat.objects:
        for a in het.a_cat.objects:
            table = rep.phi[(x, a)]
            if set(table) != set(het.cell(x, a)):
                out.add("phi-domain", (x, a), "phi not defined on exactly the cell")
                continue
            images = list(table.values())
            if sorted(images) != sorted(het.x_cat.hom(x, fun.on_obj(a))):
                out.add("phi-bijective", (x, a),
                        f"phi image {sorted(images)} != Hom(x, Ga)")
            for c, f in table.items():
                if het.act_l(f, rep.universal[a]) != c:
                    out.add("phi-formula", (x, a, c), "phi^-1(f) != e.f")
    # naturality of phi in x: phi(c.h) = h then phi(c) for h: x' -> x
    for h in het.x_cat.morphisms:
        x2, x = h.dom, h.cod
        for a in het.a_cat.objects:
            for c, f in rep.phi[(x, a)].items():
                lhs = rep.phi[(x2, a)].get(het.act_l(h.id, c))
                rhs = het.x_cat.compose(h.id, f)
                if lhs != rhs:
                    out.add("phi-naturality-left", (h.id, a, c),
                            f"phi(c.h) = {lhs}, h;phi(c) = {rhs}")
    # naturality of phi in a: phi(k.c) = phi(c) then Gk for k: a -> a'
    for k in het.a_cat.morphisms:
        a, a2 = k.dom, k.cod
        for x in het.x_cat.objects:
            for c, f in rep.phi[(x, a)].items():
                lhs = rep.phi[(x, a2)].get(het.act_r(k.id, c))
                rhs = het.x_cat.compose(f, fun.on_mor(k.id))
                if lhs != rhs:
                    out.add("phi-naturality-right", (k.id, x, c),
                            f"phi(k.c) = {lhs}, phi(c);Gk = {rhs}")
    return out.normalize()


def compare_left_representation(rep: LeftRepresentation, functor: FinFunctor,
                                universals: dict[str, str]) -> LawReport:
    """Does the found representation agree with an expected one up to the
    canonical isomorphism?

    For each index object the two universal elements factor through each other
    by unique mediating morphisms; those must be mutually inverse and natural
    against the two functors. Equality on the nose is the special case where
    every mediator is an identity.
    """
    het = rep.het
    out = LawReport(f"left representation of {het.name} vs {functor.name}")
    mediators: dict[str, str] = {}
    for x in het.x_cat.objects:
        b_rec, u_rec = rep.functor.on_obj(x), rep.universal[x]
        b_exp, u_exp = functor.on_obj(x), universals[x]
        if het.cell_of(u_exp) != (x, b_exp):
            out.add("expected-universal-placement", (x, u_exp),
                    "expected universal not in cell (x, Fx)")
            continue
        forward = [g for g in het.a_cat.hom(b_rec, b_exp)
                   if het.act_r(g, u_rec) == u_exp]
        backward = [g for g in het.a_cat.hom(b_exp, b_rec)
                    if het.act_r(g, u_exp) == u_rec]
        if len(forward) != 1 or len(backward) != 1:
            out.add("comparison-mediator", (x,),
                    f"{len(forward)} forward and {len(backward)} backward mediators")
            continue
        if het.a_cat.compose(forward[0], backward[0]) != het.a_cat.id_of(b_rec) or \
                het.a_cat.compose(backward[0], forward[0]) != het.a_cat.id_of(b_exp):
            out.add("comparison-iso", (x,), "mediators do not compose to identities")
            continue
        mediators[x] = forward[0]
    if not out.ok:
        return out.normalize()
    for j in het.x_cat.morphisms:
        lhs = het.a_cat.compose(rep.functor.on_mor(j.id), mediators[j.cod])
        rhs = het.a_cat.compose(mediators[j.dom], functor.on_mor(j.id))
        if lhs != rhs:
            out.add("comparison-naturality", (j.id,),
                    f"recovered;mediator = {lhs}, mediator;expected = {rhs}")
    return out.normalize()


def compare_right_representation(rep: RightRepresentation, functor: FinFunctor,
                                 universals: dict[str, str]) -> LawReport:
    """Dual comparison for right representations."""
    het = rep.het
    out = LawReport(f"right representation of {het.name} vs {functor.name}")
    mediators: dict[str, str] = {}
    for a in het.a_cat.objects:
        b_rec, u_rec = rep.functor.on_obj(a), rep.universal[a]
        b_exp, u_exp = functor.on_obj(a), universals[a]
        if het.cell_of(u_exp) != (b_exp, a):
            out.add("expected-universal-placement", (a, u_exp),
                    "expected universal not in cell (Ga, a)")
            continue
        forward = [f for f in het.x_cat.hom(b_exp, b_rec)
                   if het.act_l(f, u_rec) == u_exp]
        backward = [f for f in het.x_cat.hom(b_rec, b_exp)
                    if het.act_l(f, u_exp) == u_rec]
        if len(forward) != 1 or len(backward) != 1:
            out.add("comparison-mediator", (a,),
                    f"{len(forward)} forward and {len(backward)} backward mediators")
            continue
        if het.x_cat.compose(forward[0], backward[0]) != het.x_cat.id_of(b_exp) or \
                het.x_cat.compose(backward[0], forward[0]) != het.x_cat.id_of(b_rec):
            out.add("comparison-iso", (a,), "mediators do not compose to identities")
            continue
        mediators[a] = forward[0]
    if not out.ok:
        return out.normalize()
    for k in het.a_cat.morphisms:
        lhs = het.x_cat.compose(mediators[k.dom], rep.functor.on_mor(k.id))
        rhs = het.x_cat.compose(functor.on_mor(k.id), mediators[k.cod])
        if lhs != rhs:
            out.add("comparison-naturality", (k.id,),
                    f"mediator;recovered = {lhs}, expected;mediator = {rhs}")
    return out.normalize()


def find_left_representation(
        het: HetBifunctor) -> Union[LeftRepresentation, NonRepresentabilityWitness]:
    """Search every (object, element) candidate for universal elements.

    Objects and elements are scanned in id order; the first universal element
    found is taken, but the scan continues so that representation uniqueness
    up to isomorphism can be checked against every other winner. On failure
    the witness lists, for every candidate, a concrete element that factors
    non-uniquely or not at all.
    """
    chosen: dict[str, tuple[str, str]] = {}
    equivalents: dict[str, tuple[tuple[str, str], ...]] = {}
    for x in het.x_cat.objects:
        winners: list[tuple[str, str]] = []
        for b in het.a_cat.objects:
            for u in het.cell(x, b):
                ok, _ = universal_element_check(het, x, b, u)
                if ok:
                    winners.append((b, u))
        if not winners:
            degenerate = all(not het.cell(x, a) for a in het.a_cat.objects)
            failures = []
            for b in het.a_cat.objects:
                for u in het.cell(x, b):
                    ok, info = universal_element_check(het, x, b, u)
                    assert not ok and info is not None
                    failures.append(CandidateFailure(b, u, info[0], info[1], info[2]))
            return NonRepresentabilityWitness("left", x, degenerate, tuple(failures))
        for other in winners[1:]:
            _verify_universal_pair_iso(het, x, winners[0], other, "left")
        chosen[x] = winners[0]
        equivalents[x] = tuple(winners)
    # unique fill-in for the morphism part: Fj is the unique g with h_x . g = j . h_x'
    obj_map = {x: chosen[x][0] for x in het.x_cat.objects}
    mor_map: dict[str, str] = {}
    for j in het.x_cat.morphisms:
        x, x2 = j.dom, j.cod
        target = het.act_l(j.id, chosen[x2][1])
        gs = [g for g in het.a_cat.hom(obj_map[x], obj_map[x2])
              if het.act_r(g, chosen[x][1]) == target]
        if len(gs) != 1:
            raise KernelInvariantError(
                f"morphism fill-in for {j.id} is not unique ({len(gs)} candidates)")
        mor_map[j.id] = gs[0]
    fun = FinFunctor(f"F[{het.name}]", het.x_cat, het.a_cat, obj_map, mor_map)
    psi = {
        (x, a): {g: het.act_r(g, chosen[x][1]) for g in het.a_cat.hom(obj_map[x], a)}
        for x in het.x_cat.objects for a in het.a_cat.objects
    }
    rep = LeftRepresentation(het, fun, {x: u for x, (_, u) in chosen.items()},
                             psi, equivalents)
    problems = check_left_representation(rep)
    if not problems.ok:
        raise KernelInvariantError(
            f"constructed left representation fails its own laws:\n{problems.summary()}")
    return rep


def find_right_representation(
        het: HetBifunctor) -> Union[RightRepresentation, NonRepresentabilityWitness]:
    """Dual search; the universal element e_a satisfies phi^-1(1_Ga) = e_a."""
    chosen: dict[str, tuple[str, str]] = {}
    equivalents: dict[str, tuple[tuple[str, str], ...]] = {}
    for a in het.a_cat.objects:
        winners: list[tuple[str, str]] = []
        for b in het.x_cat.objects:
            for u in het.cell(b, a):
                ok, _ = co_universal_element_check(het, a, b, u)
                if ok:
                    winners.append((b, u))
        if not winners:
            degenerate = all(not het.cell(x, a) for x in het.x_cat.objects)
            failures = []
            for b in het.x_cat.objects:
                for u in het.cell(b, a):
                    ok, info = co_universal_element_check(het, a, b, u)
                    assert not ok and info is not None
                    failures.append(CandidateFailure(b, u, info[0], info[1], info[2]))
            return NonRepresentabilityWitness("right", a, degenerate, tuple(failures))
        for other in winners[1:]:
            _verify_universal_pair_iso(het, a, winners[0], other, "right")
        chosen[a] = winners[0]
        equivalents[a] = tuple(winners)
    obj_map = {a: chosen[a][0] for a in het.a_cat.objects}
    mor_map: dict[str, str] = {}
    # Gk is the unique f with e_a . f = k . e_a' for k: a' -> a
    for k in het.a_cat.morphisms:
        a2, a = k.dom, k.cod
        target = het.act_r(k.id, chosen[a2][1])
        fs = [f for f in het.x_cat.hom(obj_map[a2], obj_map[a])
              if het.act_l(f, chosen[a][1]) == target]
        if len(fs) != 1:
            raise KernelInvariantError(
                f"morphism fill-in for {k.id} is not unique ({len(fs)} candidates)")
        mor_map[k.id] = fs[0]
    fun = FinFunctor(f"G[{het.name}]", het.a_cat, het.x_cat, obj_map, mor_map)
    phi: dict[tuple[str, str], dict[str, str]] = {}
    for x in het.x_cat.objects:
        for a in het.a_cat.objects:
            inverse = {f: het.act_l(f, chosen[a][1])
                       for f in het.x_cat.hom(x, obj_map[a])}
            phi[(x, a)] = {c: f for f, c in inverse.items()}
    rep = RightRepresentation(het, fun, {a: u for a, (_, u) in chosen.items()},
                              phi, equivalents)
    problems = check_right_representation(rep)
    if not problems.ok:
        raise KernelInvariantError(
            f"constructed right representation fails its own laws:\n{problems.summary()}")
    return rep
