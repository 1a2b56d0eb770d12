"""
Finite sets, pullbacks and the bicategory of spans.

A finite set is just a size; a function stores its image sequence.  The
pullback of two maps into a common target enumerates the agreeing pairs in
lexicographic order, which fixes a canonical apex for span composition;
universal lifts and projection characterizations remain the primary API so
nothing downstream depends on the enumeration beyond determinism.

Cells between spans are apex maps commuting with both legs; cells with
bijective maps make up the pith.  Adjunction unit/counit cells for a
function's push/pull spans and base-change cells for pullback squares are
constructed explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import (
    BoundaryMismatch,
    LiftEquationFails,
    NotInvertible,
    NotPullbackSquare,
    TargetMismatch,
)


@dataclass(frozen=True)
class FinSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be a natural number")

    def __iter__(self):
        return iter(range(self.size))


@dataclass(frozen=True)
class FinFun:
    src: FinSet
    dst: FinSet
    img: tuple[int, ...]

    def __post_init__(self):
        if len(self.img) != self.src.size:
            raise ValueError(f"image sequence has length {len(self.img)}, expected {self.src.size}")
        for v in self.img:
            if not 0 <= v < self.dst.size:
                raise ValueError(f"value {v} outside target of size {self.dst.size}")

    def __call__(self, i: int) -> int:
        return self.img[i]

    def is_bijective(self) -> bool:
        return self.src.size == self.dst.size and len(set(self.img)) == self.src.size

    def inverse(self) -> "FinFun":
        if not self.is_bijective():
            raise NotInvertible(f"map {self.img} is not bijective")
        inv = [0] * self.src.size
        for i, v in enumerate(self.img):
            inv[v] = i
        return FinFun(self.dst, self.src, tuple(inv))


def identity_fun(x: FinSet) -> FinFun:
    return FinFun(x, x, tuple(range(x.size)))


def fcompose(f: FinFun, g: FinFun) -> FinFun:
    """Diagram-order composite: f first, then g."""
    if f.dst != g.src:
        raise TargetMismatch(f"cannot compose: {f.dst} != {g.src}")
    return FinFun(f.src, g.dst, tuple(g.img[v] for v in f.img))


def fiber(f: FinFun, k: int) -> tuple[int, ...]:
    """The preimage of k, ascending."""
    return tuple(a for a in range(f.src.size) if f.img[a] == k)


@dataclass(frozen=True)
class Pullback:
    """The canonical pullback of f and g over their shared target.

    The apex enumerates pairs (a, b) with f(a) = g(b) in lexicographic
    order; p1 and p2 are the projections.
    """

    apex: FinSet
    p1: FinFun
    p2: FinFun
    pairs: tuple[tuple[int, int], ...]

    @cached_property
    def _index(self) -> dict:
        return {pair: i for i, pair in enumerate(self.pairs)}

    def index(self, a: int, b: int) -> int:
        return self._index[(a, b)]


def pullback(f: FinFun, g: FinFun) -> Pullback:
    """Pairs agreeing under two maps into a common target.

    >>> one = FinSet(1); two = FinSet(2)
    >>> c = FinFun(two, one, (0, 0))
    >>> pullback(c, c).pairs
    ((0, 0), (0, 1), (1, 0), (1, 1))
    """
    if f.dst != g.dst:
        raise TargetMismatch(f"pullback needs a shared target: {f.dst} != {g.dst}")
    pairs = tuple(
        (a, b) for a in range(f.src.size) for b in range(g.src.size) if f.img[a] == g.img[b]
    )
    apex = FinSet(len(pairs))
    p1 = FinFun(apex, f.src, tuple(a for a, _ in pairs))
    p2 = FinFun(apex, g.src, tuple(b for _, b in pairs))
    return Pullback(apex, p1, p2, pairs)


def pullback_lift(pb: Pullback, f: FinFun, g: FinFun, f1: FinFun, f2: FinFun) -> FinFun:
    """The unique map into the pullback apex with p1.lift = f1 and p2.lift = f2."""
    if f1.src != f2.src:
        raise TargetMismatch("cone legs must share a source")
    if fcompose(f1, f).img != fcompose(f2, g).img:
        raise LiftEquationFails("cone does not commute over the shared target")
    return FinFun(f1.src, pb.apex, tuple(pb.index(f1(c), f2(c)) for c in range(f1.src.size)))


@dataclass(frozen=True)
class Span:
    """A pair of maps out of a shared apex; a 1-cell left.dst -> right.dst."""

    left: FinFun
    right: FinFun

    def __post_init__(self):
        if self.left.src != self.right.src:
            raise ValueError("legs must share their apex")

    @property
    def apex(self) -> FinSet:
        return self.left.src

    @property
    def dom(self) -> FinSet:
        return self.left.dst

    @property
    def cod(self) -> FinSet:
        return self.right.dst


@dataclass(frozen=True)
class SpanCell:
    """An apex map commuting with both legs."""

    src: Span
    dst: Span
    map: FinFun

    def __post_init__(self):
        if self.src.dom != self.dst.dom or self.src.cod != self.dst.cod:
            raise BoundaryMismatch("cells need parallel spans")
        if self.map.src != self.src.apex or self.map.dst != self.dst.apex:
            raise BoundaryMismatch("cell map must go between the apices")
        if fcompose(self.map, self.dst.left).img != self.src.left.img:
            raise BoundaryMismatch("cell map does not commute with left legs")
        if fcompose(self.map, self.dst.right).img != self.src.right.img:
            raise BoundaryMismatch("cell map does not commute with right legs")

    def is_pith(self) -> bool:
        return self.map.is_bijective()


def identity_span(x: FinSet) -> Span:
    return Span(identity_fun(x), identity_fun(x))


def span_push(f: FinFun) -> Span:
    """The covariant span of f: identity left leg, f on the right."""
    return Span(identity_fun(f.src), f)


def span_pull(f: FinFun) -> Span:
    """The contravariant span of f: f on the left, identity right leg."""
    return Span(f, identity_fun(f.src))


def transpose_span(s: Span) -> Span:
    return Span(s.right, s.left)


def compose_pullback(s: Span, t: Span) -> Pullback:
    if s.cod != t.dom:
        raise TargetMismatch(f"spans not composable: {s.cod} != {t.dom}")
    return pullback(s.right, t.left)


def compose_span(s: Span, t: Span) -> Span:
    """The total span over the canonical pullback of the inner legs."""
    pb = compose_pullback(s, t)
    return Span(fcompose(pb.p1, s.left), fcompose(pb.p2, t.right))


def compose_lift(s: Span, t: Span, f1: FinFun, f2: FinFun) -> FinFun:
    """Mediating map into the composite's apex, given a commuting cone."""
    pb = compose_pullback(s, t)
    return pullback_lift(pb, s.right, t.left, f1, f2)


def identity_cell(s: Span) -> SpanCell:
    return SpanCell(s, s, identity_fun(s.apex))


def vertical_compose(c1: SpanCell, c2: SpanCell) -> SpanCell:
    if c1.dst != c2.src:
        raise BoundaryMismatch("vertical composition needs matching middle span")
    return SpanCell(c1.src, c2.dst, fcompose(c1.map, c2.map))


def vcomp(*cells: SpanCell) -> SpanCell:
    acc = cells[0]
    for c in cells[1:]:
        acc = vertical_compose(acc, c)
    return acc


def horizontal_compose(c1: SpanCell, c2: SpanCell) -> SpanCell:
    """Composite cell on composite spans, by the universal lift."""
    src = compose_span(c1.src, c2.src)
    dst = compose_span(c1.dst, c2.dst)
    pb = compose_pullback(c1.src, c2.src)
    lift = compose_lift(
        c1.dst, c2.dst, fcompose(pb.p1, c1.map), fcompose(pb.p2, c2.map)
    )
    return SpanCell(src, dst, lift)


def invert_cell(c: SpanCell) -> SpanCell:
    if not c.is_pith():
        raise NotInvertible("only pith cells invert")
    return SpanCell(c.dst, c.src, c.map.inverse())


def assoc_cell(s: Span, t: Span, u: Span) -> SpanCell:
    """(s;t);u => s;(t;u), the lift matching ((a,b),c) with (a,(b,c))."""
    left = compose_span(compose_span(s, t), u)
    outer = compose_pullback(compose_span(s, t), u)
    inner = compose_pullback(s, t)
    to_tu = compose_lift(
        t, u, fcompose(outer.p1, inner.p2), outer.p2
    )
    lift = compose_lift(s, compose_span(t, u), fcompose(outer.p1, inner.p1), to_tu)
    return SpanCell(left, compose_span(s, compose_span(t, u)), lift)


def left_unitor_cell(s: Span) -> SpanCell:
    """id;s => s, projecting the pair (j, a) to a."""
    composite = compose_span(identity_span(s.dom), s)
    pb = compose_pullback(identity_span(s.dom), s)
    return SpanCell(composite, s, pb.p2)


def right_unitor_cell(s: Span) -> SpanCell:
    """s;id => s, projecting the pair (a, k) to a."""
    composite = compose_span(s, identity_span(s.cod))
    pb = compose_pullback(s, identity_span(s.cod))
    return SpanCell(composite, s, pb.p1)


class StructuralCells(NamedTuple):
    assoc: SpanCell
    lunitor: SpanCell
    runitor: SpanCell


def structural_cells(s: Span, t: Span, u: Span) -> StructuralCells:
    """Associator for (s,t,u) plus the unitors of the outer spans."""
    return StructuralCells(assoc_cell(s, t, u), left_unitor_cell(s), right_unitor_cell(u))


class AdjunctionCells(NamedTuple):
    unit: SpanCell
    counit: SpanCell


def adjunction_cells(f: FinFun) -> AdjunctionCells:
    """Unit and counit exhibiting the push span as left adjoint to the pull span.

    The unit is the diagonal a -> (a, a); the counit sends a diagonal pair
    to its common value under f.  Neither is a pith cell in general.
    """
    push, pull = span_push(f), span_pull(f)
    unit_pb = compose_pullback(push, pull)
    unit_map = FinFun(f.src, unit_pb.apex, tuple(unit_pb.index(a, a) for a in f.src))
    unit = SpanCell(identity_span(f.src), compose_span(push, pull), unit_map)

    counit_pb = compose_pullback(pull, push)
    counit_map = FinFun(counit_pb.apex, f.dst, tuple(f(a) for a, _ in counit_pb.pairs))
    counit = SpanCell(compose_span(pull, push), identity_span(f.dst), counit_map)
    return AdjunctionCells(unit, counit)


@dataclass(frozen=True)
class PullbackSquare:
    """A commuting square top/left/right/bottom; pullback-ness checked on demand.

        X --top--> Y
        |          |
      left       right
        |          |
        Z -bottom-> W
    """

    top: FinFun
    left: FinFun
    right: FinFun
    bottom: FinFun

    def __post_init__(self):
        if self.top.src != self.left.src:
            raise BoundaryMismatch("top and left must share their source")
        if self.top.dst != self.right.src or self.left.dst != self.bottom.src:
            raise BoundaryMismatch("square edges do not line up")
        if self.right.dst != self.bottom.dst:
            raise BoundaryMismatch("right and bottom must share their target")
        if fcompose(self.top, self.right).img != fcompose(self.left, self.bottom).img:
            raise BoundaryMismatch("square does not commute")

    def comparison(self) -> FinFun:
        """The canonical map from the corner into the pullback of (bottom, right)."""
        pb = pullback(self.bottom, self.right)
        return FinFun(
            self.top.src,
            pb.apex,
            tuple(pb.index(self.left(x), self.top(x)) for x in self.top.src),
        )

    def is_pullback(self) -> bool:
        return self.comparison().is_bijective()


def vertical_unit_square(f: FinFun) -> PullbackSquare:
    return PullbackSquare(f, identity_fun(f.src), identity_fun(f.dst), f)


def horizontal_unit_square(f: FinFun) -> PullbackSquare:
    return PullbackSquare(identity_fun(f.src), f, f, identity_fun(f.dst))


def square_from_cospan(bottom: FinFun, right: FinFun) -> PullbackSquare:
    """Complete a cospan to its canonical pullback square."""
    pb = pullback(bottom, right)
    return PullbackSquare(pb.p2, pb.p1, right, bottom)


def hpaste(l: PullbackSquare, r: PullbackSquare) -> PullbackSquare:
    """Paste side by side; l's right edge must be r's left edge."""
    if l.right != r.left:
        raise BoundaryMismatch("squares do not share the middle vertical edge")
    return PullbackSquare(
        fcompose(l.top, r.top), l.left, r.right, fcompose(l.bottom, r.bottom)
    )


def vpaste(t: PullbackSquare, b: PullbackSquare) -> PullbackSquare:
    """Paste on top of each other; t's bottom edge must be b's top edge."""
    if t.bottom != b.top:
        raise BoundaryMismatch("squares do not share the middle horizontal edge")
    return PullbackSquare(
        t.top, fcompose(t.left, b.left), fcompose(t.right, b.right), b.bottom
    )


def base_change_1cell(square: PullbackSquare) -> SpanCell:
    """The invertible cell from the pull/push side to the push/pull side.

    For a pullback square with edges t, l, r, b this is the comparison
    bijection from the apex of compose(pull(l), push(t)) onto the apex of
    compose(push(b), pull(r)).
    """
    if not square.is_pullback():
        raise NotPullbackSquare("base change needs a pullback square")
    src = compose_span(span_pull(square.left), span_push(square.top))
    dst = compose_span(span_push(square.bottom), span_pull(square.right))
    src_pb = compose_pullback(span_pull(square.left), span_push(square.top))
    dst_pb = compose_pullback(span_push(square.bottom), span_pull(square.right))
    img = tuple(
        dst_pb.index(square.left(x), square.top(x)) for x, _ in src_pb.pairs
    )
    return SpanCell(src, dst, FinFun(src_pb.apex, dst_pb.apex, img))
