"""
The Kleisli bicategory of symmetric lists over finite sets.

A 1-cell I ~> K is a family of symmetric lists over the labels of K, one
per element of I.  The extension of such a family to all lists is blockwise
concatenation, which makes composition strictly associative and unital:
the associator and unitor cells collapse to identities, and the strict
equalities they would mediate are tested directly.

Duality transposes a family, exchanging row and column multiplicities, and
postcomposition by a lax monoidal functor yields the comparison morphisms of
a lax transformation, built here by the same cons recursion as the
extension itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import BoundaryMismatch, LabelOutOfRange, LaxLawViolation
from .perms import Perm
from .slist import (
    Multiset,
    SList,
    SListHom,
    compose as hom_compose,
    identity_hom,
    invert,
    underlying_multiset,
)
from .spans import FinSet
from .terms import SmcModel, lookup, psi_obj


@dataclass(frozen=True)
class KHom:
    """A family of lists over dst, indexed by src: a 1-cell src ~> dst."""

    src: FinSet
    dst: FinSet
    lists: tuple[SList, ...]

    def __post_init__(self):
        if len(self.lists) != self.src.size:
            raise ValueError(f"family has {len(self.lists)} lists, expected {self.src.size}")
        for l in self.lists:
            for label in l.labels:
                if not isinstance(label, int) or not 0 <= label < self.dst.size:
                    raise LabelOutOfRange(
                        f"label {label!r} outside target of size {self.dst.size}"
                    )


@dataclass(frozen=True)
class KCell:
    """A family of list morphisms between two parallel 1-cells."""

    src: KHom
    dst: KHom
    homs: tuple[SListHom, ...]

    def __post_init__(self):
        if self.src.src != self.dst.src or self.src.dst != self.dst.dst:
            raise BoundaryMismatch("cells need parallel 1-cells")
        if len(self.homs) != self.src.src.size:
            raise BoundaryMismatch(f"cell has {len(self.homs)} components, expected {self.src.src.size}")
        for i, h in enumerate(self.homs):
            if h.src != self.src.lists[i] or h.dst != self.dst.lists[i]:
                raise BoundaryMismatch(f"component {i} has the wrong boundary")


def theta_apply(g: KHom, l: SList) -> SList:
    """Extend the family g to a list: concatenate the blocks g(label).

    >>> from .spans import FinSet
    >>> g = KHom(FinSet(2), FinSet(3), (SList((0, 1)), SList((2,))))
    >>> print(theta_apply(g, SList((0, 1))))
    [0,1,2]
    """
    labels: tuple = ()
    for label in l.labels:
        if not isinstance(label, int) or not 0 <= label < g.src.size:
            raise LabelOutOfRange(f"label {label!r} outside source of size {g.src.size}")
        labels = labels + g.lists[label].labels
    return SList(labels)


def _offsets(sizes: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for s in sizes:
        out.append(acc)
        acc += s
    return out


def theta_apply_hom(g: KHom, f: SListHom) -> SListHom:
    """The block permutation extending g along a list morphism.

    Whole blocks move the way f moves labels; positions inside a block are
    preserved.
    """
    src = theta_apply(g, f.src)
    dst = theta_apply(g, f.dst)
    src_off = _offsets([len(g.lists[label]) for label in f.src.labels])
    dst_off = _offsets([len(g.lists[label]) for label in f.dst.labels])
    phi = [0] * len(dst)
    for i, label in enumerate(f.dst.labels):
        j = f.phi(i)
        for t in range(len(g.lists[label])):
            phi[dst_off[i] + t] = src_off[j] + t
    return SListHom(src, dst, Perm(tuple(phi)))


def k_compose(f: KHom, g: KHom) -> KHom:
    """Composite family: extend g over each list of f."""
    if f.dst != g.src:
        raise BoundaryMismatch(f"cannot compose: {f.dst} != {g.src}")
    return KHom(f.src, g.dst, tuple(theta_apply(g, l) for l in f.lists))


def k_id(i: FinSet) -> KHom:
    """The singleton family; a strict unit for k_compose."""
    return KHom(i, i, tuple(SList((j,)) for j in range(i.size)))


def k_id_cell(f: KHom) -> KCell:
    return KCell(f, f, tuple(identity_hom(l) for l in f.lists))


def k_vcomp(*cells: KCell) -> KCell:
    out = cells[0]
    for c in cells[1:]:
        if out.dst != c.src:
            raise BoundaryMismatch("vertical composition needs matching middle 1-cell")
        out = KCell(out.src, c.dst, tuple(hom_compose(a, b) for a, b in zip(out.homs, c.homs)))
    return out


def invert_kcell(c: KCell) -> KCell:
    return KCell(c.dst, c.src, tuple(invert(h) for h in c.homs))


def theta_whisker(psi: KCell, l: SList) -> SListHom:
    """Block-diagonal morphism with blocks psi at each label of l."""
    src = theta_apply(psi.src, l)
    dst = theta_apply(psi.dst, l)
    src_off = _offsets([len(psi.src.lists[label]) for label in l.labels])
    dst_off = _offsets([len(psi.dst.lists[label]) for label in l.labels])
    phi = [0] * len(dst)
    for t, label in enumerate(l.labels):
        h = psi.homs[label]
        for u in range(len(h.dst)):
            phi[dst_off[t] + u] = src_off[t] + h.phi(u)
    return SListHom(src, dst, Perm(tuple(phi)))


def k_hcomp(phi: KCell, psi: KCell) -> KCell:
    """Horizontal composite: whisker psi along each list, then move blocks.

    phi goes between f, f' : I ~> J and psi between g, g' : J ~> K; the
    result lies over k_compose(f, g) => k_compose(f', g').
    """
    f, f2 = phi.src, phi.dst
    g, g2 = psi.src, psi.dst
    if f.dst != g.src:
        raise BoundaryMismatch("horizontal composition needs composable boundaries")
    homs = tuple(
        hom_compose(theta_whisker(psi, f.lists[i]), theta_apply_hom(g2, phi.homs[i]))
        for i in range(f.src.size)
    )
    return KCell(k_compose(f, g), k_compose(f2, g2), homs)


def k_associator(f: KHom, g: KHom, h: KHom) -> KCell:
    """Identity cell documenting that composition is strictly associative."""
    lhs = k_compose(k_compose(f, g), h)
    rhs = k_compose(f, k_compose(g, h))
    if lhs != rhs:
        raise AssertionError("strict associativity violated; this is a bug")
    return k_id_cell(lhs)


def k_left_unitor(f: KHom) -> KCell:
    lhs = k_compose(k_id(f.src), f)
    if lhs != f:
        raise AssertionError("strict left unit violated; this is a bug")
    return k_id_cell(f)


def k_right_unitor(f: KHom) -> KCell:
    lhs = k_compose(f, k_id(f.dst))
    if lhs != f:
        raise AssertionError("strict right unit violated; this is a bug")
    return k_id_cell(f)


# ---------------------------------------------------------------------------
# multiset formulas and duality


def composite_multiset(f: KHom, g: KHom, j: int) -> Multiset:
    """Matrix-like formula for the multiset of the composite at index j.

    >>> from .spans import FinSet
    >>> f = KHom(FinSet(1), FinSet(1), (SList((0, 0)),))
    >>> g = KHom(FinSet(1), FinSet(1), (SList((0,)),))
    >>> str(composite_multiset(f, g, 0))
    '{0:2}'
    """
    if f.dst != g.src:
        raise BoundaryMismatch(f"cannot compose: {f.dst} != {g.src}")
    top = underlying_multiset(f.lists[j])
    acc = Multiset.empty()
    for k in range(g.src.size):
        c = top.count(k)
        if c:
            acc = acc + underlying_multiset(g.lists[k]).scale(c)
    return acc


def duality(x: KHom) -> KHom:
    """Transpose a family: the multiplicity of j in D(x)(k) is that of k in x(j).

    Occurrences are laid out with source index ascending.

    >>> from .spans import FinSet
    >>> x = KHom(FinSet(2), FinSet(1), (SList((0,)), SList((0,))))
    >>> duality(x).lists
    (SList(labels=(0, 1)),)
    """
    lists = []
    for k in range(x.dst.size):
        labels: tuple = ()
        for j in range(x.src.size):
            labels = labels + (j,) * x.lists[j].labels.count(k)
        lists.append(SList(labels))
    return KHom(x.dst, x.src, tuple(lists))


def duality_cell(eta: KCell) -> KCell:
    """Transpose a cell: occurrence ranks transport through each component.

    The (j, r)-th occurrence of k on the target side maps to (j, r') where
    r' ranks the image position among the k-occurrences of the source list.
    """
    x, y = eta.src, eta.dst
    dx, dy = duality(x), duality(y)
    homs = []
    for k in range(x.dst.size):
        phi = []
        for j in range(y.src.size):
            h = eta.homs[j]
            src_positions = [p for p, lab in enumerate(h.src.labels) if lab == k]
            src_rank = {p: r for r, p in enumerate(src_positions)}
            src_offset = sum(x.lists[q].labels.count(k) for q in range(j))
            for p, lab in enumerate(h.dst.labels):
                if lab == k:
                    phi.append(src_offset + src_rank[h.phi(p)])
        homs.append(SListHom(dx.lists[k], dy.lists[k], Perm(tuple(phi))))
    return KCell(dx, dy, tuple(homs))


# ---------------------------------------------------------------------------
# postcomposition by a monoidal functor


@dataclass(frozen=True)
class MonoidalFunctorData:
    """A lax monoidal functor between two models, braiding-compatible.

    ``unit_cmp`` is a target morphism unit -> obj(unit); ``tensor_cmp(a, b)``
    a target morphism obj(a) (x) obj(b) -> obj(a (x) b), for source objects
    a, b.  ``strong`` records that both comparisons are invertible.
    """

    source: SmcModel
    target: SmcModel
    obj: Callable
    mor: Callable
    unit_cmp: object
    tensor_cmp: Callable
    strong: bool = False


def identity_functor(m: SmcModel) -> MonoidalFunctorData:
    return MonoidalFunctorData(
        source=m,
        target=m,
        obj=lambda a: a,
        mor=lambda f: f,
        unit_cmp=m.identity(m.unit()),
        tensor_cmp=lambda a, b: m.identity(m.tensor_obj(a, b)),
        strong=True,
    )


def check_lax_laws(f: MonoidalFunctorData, objs) -> None:
    """Raise LaxLawViolation unless the comparison data satisfies the lax laws."""
    s, t = f.source, f.target
    eq = t.mor_equal
    failures = []
    for a in objs:
        for b in objs:
            lhs = t.compose(f.tensor_cmp(a, b), f.mor(s.braid(a, b)))
            rhs = t.compose(t.braid(f.obj(a), f.obj(b)), f.tensor_cmp(b, a))
            if not eq(lhs, rhs):
                failures.append(f"braiding at ({a}, {b})")
            for c in objs:
                lhs = t.compose(
                    t.compose(t.tensor_mor(f.tensor_cmp(a, b), t.identity(f.obj(c))),
                              f.tensor_cmp(s.tensor_obj(a, b), c)),
                    f.mor(s.assoc(a, b, c)),
                )
                rhs = t.compose(
                    t.compose(t.assoc(f.obj(a), f.obj(b), f.obj(c)),
                              t.tensor_mor(t.identity(f.obj(a)), f.tensor_cmp(b, c))),
                    f.tensor_cmp(a, s.tensor_obj(b, c)),
                )
                if not eq(lhs, rhs):
                    failures.append(f"associativity at ({a}, {b}, {c})")
        lhs = t.compose(
            t.compose(t.tensor_mor(f.unit_cmp, t.identity(f.obj(a))),
                      f.tensor_cmp(s.unit(), a)),
            f.mor(s.left_unitor(a)),
        )
        if not eq(lhs, t.left_unitor(f.obj(a))):
            failures.append(f"left unit at {a}")
        lhs = t.compose(
            t.compose(t.tensor_mor(t.identity(f.obj(a)), f.unit_cmp),
                      f.tensor_cmp(a, s.unit())),
            f.mor(s.right_unitor(a)),
        )
        if not eq(lhs, t.right_unitor(f.obj(a))):
            failures.append(f"right unit at {a}")
    if failures:
        raise LaxLawViolation("; ".join(failures))


def map_family(f: MonoidalFunctorData, family) -> tuple:
    """Postcompose an indexed family of source objects with the functor."""
    return tuple(f.obj(x) for x in family)


def naturality_cell(f: MonoidalFunctorData, khom: KHom, family) -> tuple:
    """Comparison morphisms of the postcomposition square, one per source index.

    ``family`` assigns a source-model object to each element of khom.dst.
    Component j goes from the target-side fold over khom.lists[j] to the
    image of the source-side fold; built from the lax comparisons by the
    same cons recursion as the fold itself.  Invertible when f is strong.
    """
    s, t = f.source, f.target

    def mu(labels) -> object:
        if not labels:
            return f.unit_cmp
        head, tail = labels[0], labels[1:]
        a = lookup(family, head)
        rest_src = psi_obj(s, family, tail)
        step = t.tensor_mor(t.identity(f.obj(a)), mu(tail))
        return t.compose(step, f.tensor_cmp(a, rest_src))

    return tuple(mu(l.labels) for l in khom.lists)
