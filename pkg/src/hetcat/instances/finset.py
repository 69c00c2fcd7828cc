"""Finite-set scaffolding: the skeleton category of small finite sets, diagram
shapes, explicit set-valued diagrams, and direct limit/colimit computation.

Skeleton objects are cardinalities named "0", "1", ...; a morphism k -> m is a
function stored as the tuple of images of 0..k-1. Limits are the compatible
tuples (global sections) of a diagram; colimits are the blocks of the finest
equivalence generated by relating each element to its images, computed by
union-find with the minimal member as the canonical representative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import GuardExceeded, StructuralError
from ..fincat import FinCategory, Morphism


def fn_id(k: int, m: int, images: tuple[int, ...]) -> str:
    return f"{k}>{m}:" + ",".join(str(i) for i in images)


def fn_images(mid: str) -> tuple[int, ...]:
    """Recover the image tuple from a skeleton morphism id."""
    _, _, imgs = mid.partition(":")
    return tuple(int(s) for s in imgs.split(",")) if imgs else ()


def finset_skeleton(n: int, guard: int = 8) -> FinCategory:
    """Objects 0..n as cardinalities, morphisms all functions between them."""
    if n > guard:
        raise GuardExceeded(f"finset skeleton bound {n} exceeds guard {guard}", n)
    objects = tuple(str(k) for k in range(n + 1))
    morphisms = []
    by_sig: dict[tuple[int, int, tuple[int, ...]], str] = {}
    for k in range(n + 1):
        for m in range(n + 1):
            for images in itertools.product(range(m), repeat=k):
                mid = fn_id(k, m, images)
                morphisms.append(Morphism(mid, str(k), str(m)))
                by_sig[(k, m, images)] = mid
    identity = {str(k): fn_id(k, k, tuple(range(k))) for k in range(n + 1)}
    comp = {}
    for f in morphisms:
        k = int(f.dom)
        fi = fn_images(f.id)
        for g in morphisms:
            if g.dom != f.cod:
                continue
            gi = fn_images(g.id)
            comp[(f.id, g.id)] = by_sig[(k, int(g.cod), tuple(gi[i] for i in fi))]
    return FinCategory(
        name=f"FinSet<={n}",
        objects=objects,
        morphisms=tuple(morphisms),
        identity=identity,
        comp=comp,
    )


def skeleton_card(obj: str) -> int:
    return int(obj)


# ---------------------------------------------------------------------------
# diagram shapes
# ---------------------------------------------------------------------------

SHAPE_NAMES = ("terminal", "discrete-2", "parallel-pair", "span")


def diagram_shape(name: str) -> FinCategory:
    """The built-in diagram categories."""
    if name == "terminal":
        return FinCategory("terminal", ("t",), (Morphism("1t", "t", "t"),),
                           {"t": "1t"}, {("1t", "1t"): "1t"})
    if name == "discrete-2":
        return FinCategory(
            "discrete-2", ("i", "j"),
            (Morphism("1i", "i", "i"), Morphism("1j", "j", "j")),
            {"i": "1i", "j": "1j"},
            {("1i", "1i"): "1i", ("1j", "1j"): "1j"})
    if name == "parallel-pair":
        mors = (Morphism("1s", "s", "s"), Morphism("1t", "t", "t"),
                Morphism("alpha", "s", "t"), Morphism("beta", "s", "t"))
        comp = {("1s", "1s"): "1s", ("1t", "1t"): "1t",
                ("1s", "alpha"): "alpha", ("alpha", "1t"): "alpha",
                ("1s", "beta"): "beta", ("beta", "1t"): "beta"}
        return FinCategory("parallel-pair", ("s", "t"), mors, {"s": "1s", "t": "1t"}, comp)
    if name == "span":
        mors = (Morphism("1m", "m", "m"), Morphism("1l", "l", "l"),
                Morphism("1r", "r", "r"), Morphism("f", "m", "l"),
                Morphism("g", "m", "r"))
        comp = {("1m", "1m"): "1m", ("1l", "1l"): "1l", ("1r", "1r"): "1r",
                ("1m", "f"): "f", ("f", "1l"): "f",
                ("1m", "g"): "g", ("g", "1r"): "g"}
        return FinCategory("span", ("m", "l", "r"), mors,
                           {"m": "1m", "l": "1l", "r": "1r"}, comp)
    raise StructuralError(f"unknown diagram shape {name!r}; "
                          f"choose one of {', '.join(SHAPE_NAMES)}")


def shape_is_connected(shape: FinCategory) -> bool:
    """Connectivity of the underlying undirected graph of the shape."""
    if not shape.objects:
        return True
    adj: dict[str, set[str]] = {o: set() for o in shape.objects}
    for m in shape.morphisms:
        adj[m.dom].add(m.cod)
        adj[m.cod].add(m.dom)
    seen = {shape.objects[0]}
    stack = [shape.objects[0]]
    while stack:
        for nxt in adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(shape.objects)


# ---------------------------------------------------------------------------
# explicit set-valued diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FinSetObject:
    elements: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise StructuralError("finite set has repeated element symbols")

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True, eq=False)
class SetDiagram:
    """A functor from a diagram shape into explicit finite sets.

    `values` assigns a FinSetObject to each shape object; `arrows` assigns to
    each shape morphism a mapping dict between the corresponding element sets.
    Functor laws are validated at construction.
    """

    shape: FinCategory
    values: dict[str, FinSetObject]
    arrows: dict[str, dict[str, str]]

    def __post_init__(self):
        for o in self.shape.objects:
            if o not in self.values:
                raise StructuralError(f"diagram missing value at {o!r}")
        for m in self.shape.morphisms:
            table = self.arrows.get(m.id)
            if table is None:
                raise StructuralError(f"diagram missing arrow at {m.id!r}")
            dom, cod = self.values[m.dom], self.values[m.cod]
            if set(table) != set(dom.elements) or not set(table.values()) <= set(cod.elements):
                raise StructuralError(f"diagram arrow {m.id!r} is not a function "
                                      f"between its endpoint sets")
        for o in self.shape.objects:
            i = self.shape.id_of(o)
            if any(self.arrows[i][e] != e for e in self.values[o].elements):
                raise StructuralError(f"diagram does not send the identity at {o!r} "
                                      f"to an identity function")
        for (f, g), h in self.shape.comp.items():
            for e in self.values[self.shape.dom(f)].elements:
                if self.arrows[g][self.arrows[f][e]] != self.arrows[h][e]:
                    raise StructuralError(f"diagram breaks composition at ({f}, {g})")


def skeleton_functor_to_diagram(shape: FinCategory, skel: FinCategory,
                                obj_map: dict[str, str],
                                mor_map: dict[str, str]) -> SetDiagram:
    """View a functor shape -> skeleton as a diagram over canonical element sets."""
    values = {
        o: FinSetObject(tuple(str(i) for i in range(skeleton_card(obj_map[o]))))
        for o in shape.objects
    }
    arrows = {}
    for m in shape.morphisms:
        images = fn_images(mor_map[m.id])
        arrows[m.id] = {str(i): str(images[i]) for i in range(len(images))}
    return SetDiagram(shape, values, arrows)


@dataclass(frozen=True)
class Cone:
    """A compatible family of functions from an apex set into a diagram."""

    apex: FinSetObject
    diagram: SetDiagram
    legs: dict[str, dict[str, str]]      # shape object -> apex element -> value element

    def check(self) -> None:
        for o in self.diagram.shape.objects:
            table = self.legs.get(o)
            if table is None or set(table) != set(self.apex.elements):
                raise StructuralError(f"cone leg at {o!r} is not total on the apex")
        for m in self.diagram.shape.morphisms:
            for e in self.apex.elements:
                if self.diagram.arrows[m.id][self.legs[m.dom][e]] != self.legs[m.cod][e]:
                    raise StructuralError(f"cone legs do not commute with {m.id!r}")


@dataclass(frozen=True)
class Cocone:
    """A compatible family of functions from a diagram to a target set."""

    diagram: SetDiagram
    target: FinSetObject
    legs: dict[str, dict[str, str]]      # shape object -> value element -> target element

    def check(self) -> None:
        for o in self.diagram.shape.objects:
            table = self.legs.get(o)
            if table is None or set(table) != set(self.diagram.values[o].elements):
                raise StructuralError(f"cocone leg at {o!r} is not total")
        for m in self.diagram.shape.morphisms:
            for e in self.diagram.values[m.dom].elements:
                if self.legs[m.cod][self.diagram.arrows[m.id][e]] != self.legs[m.dom][e]:
                    raise StructuralError(f"cocone legs do not commute with {m.id!r}")


@dataclass(frozen=True)
class LimitResult:
    apex: FinSetObject
    cone: Cone                            # the universal cone of projections
    tuples: tuple[tuple[str, ...], ...]   # one entry per apex element, in object order


@dataclass(frozen=True)
class ColimitResult:
    apex: FinSetObject                    # block representatives
    cocone: Cocone                        # the universal cocone of injections-into-blocks
    blocks: dict[str, tuple[tuple[str, str], ...]]   # block -> (object, element) members


def limit_of(diagram: SetDiagram) -> LimitResult:
    """Compatible tuples, one member per diagram value, stable under all arrows."""
    shape = diagram.shape
    order = shape.objects
    pools = [diagram.values[o].elements for o in order]
    good: list[tuple[str, ...]] = []
    for combo in itertools.product(*pools):
        pick = dict(zip(order, combo))
        if all(diagram.arrows[m.id][pick[m.dom]] == pick[m.cod]
               for m in shape.morphisms):
            good.append(combo)
    names = tuple("(" + ";".join(combo) + ")" for combo in good)
    apex = FinSetObject(names)
    legs = {
        o: {name: combo[i] for name, combo in zip(names, good)}
        for i, o in enumerate(order)
    }
    cone = Cone(apex, diagram, legs)
    cone.check()
    return LimitResult(apex, cone, tuple(good))


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}

    def find(self, i):
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # keep the lexicographically smallest member as the root
            lo, hi = sorted((ri, rj))
            self.parent[hi] = lo


def colimit_of(diagram: SetDiagram) -> ColimitResult:
    """Blocks of the finest equivalence on the disjoint union generated by
    relating each element to its image under every arrow."""
    shape = diagram.shape
    points = [(o, e) for o in shape.objects for e in diagram.values[o].elements]
    uf = _UnionFind(points)
    for m in shape.morphisms:
        for e in diagram.values[m.dom].elements:
            uf.union((m.dom, e), (m.cod, diagram.arrows[m.id][e]))
    blocks: dict[tuple[str, str], list[tuple[str, str]]] = {}
    for p in points:
        blocks.setdefault(uf.find(p), []).append(p)
    reps = sorted(blocks)
    names = {rep: f"[{rep[0]}:{rep[1]}]" for rep in reps}
    apex = FinSetObject(tuple(names[rep] for rep in reps))
    legs = {
        o: {e: names[uf.find((o, e))] for e in diagram.values[o].elements}
        for o in shape.objects
    }
    cocone = Cocone(diagram, apex, legs)
    cocone.check()
    return ColimitResult(apex, cocone,
                         {names[rep]: tuple(sorted(blocks[rep])) for rep in reps})


def compose_cone_cocone(cone: Cone, cocone: Cocone) -> dict[str, str]:
    """Join a cone and a cocone over the same diagram at the open end.

    Licensed only when the shape is connected, or when both leg families are
    constant; in either case the per-object composites provably agree and the
    result is a single function apex -> target. Other cases are rejected
    because the composites can disagree between components.
    """
    if cone.diagram is not cocone.diagram and cone.diagram != cocone.diagram:
        raise StructuralError("cone and cocone are over different diagrams")
    shape = cone.diagram.shape
    cone_tables = list(cone.legs.values())
    cocone_tables = list(cocone.legs.values())
    constant = all(t == cone_tables[0] for t in cone_tables[1:]) and \
        all(t == cocone_tables[0] for t in cocone_tables[1:])
    if not shape_is_connected(shape) and not constant:
        raise StructuralError(
            "open-end composition rejected: it is only well defined over a "
            "connected shape or for constant leg families")
    composites = [
        {e: cocone.legs[o][cone.legs[o][e]] for e in cone.apex.elements}
        for o in shape.objects
    ]
    assert all(t == composites[0] for t in composites[1:])
    return composites[0] if composites else {}
