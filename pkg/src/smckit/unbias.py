"""
Pith-Beck-Chevalley systems valued in the strict Kleisli target, the
pseudofunctor they generate on spans of finite sets, and the end-to-end
evaluator that realizes unbiased tensor products in any model.

Orientation conventions, fixed once here and used throughout:

* A 1-cell A -> B of the opposite Kleisli bicategory is stored as a
  ``KHom`` with src B and dst A.  "p then q" is stored as
  ``k_compose(stored(q), stored(p))``; the composite is strictly
  associative and unital, so the target associators and unitors below are
  identities and pasting laws are exact cell equalities.
* For a function f : J -> K, ``v(f)`` is the singleton family j -> [f(j)]
  (stored J ~> K, a 1-cell K -> J) and ``u(f)`` the ascending-fiber family
  k -> f^{-1}(k) (stored K ~> J as a 1-cell J -> K).
* A base-change cell for a pullback square (top, left, right, bottom) goes
  from the stored form of "u(right) then v(bottom)" to the stored form of
  "v(top) then u(left)".

A span J <- A -> K maps to "v(left) then u(right)"; its component at k is
the left-leg image of the right fiber at k, in ascending apex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Callable, Sequence

from .errors import NotInvertible, NotPullbackSquare
from .kleisli import (
    KCell,
    KHom,
    invert_kcell,
    k_compose,
    k_hcomp,
    k_id,
    k_id_cell,
    k_vcomp,
    theta_apply,
)
from .slist import SList, is_linear, unique_hom_linear
from .spans import (
    FinFun,
    FinSet,
    PullbackSquare,
    Span,
    SpanCell,
    assoc_cell,
    compose_pullback,
    compose_span,
    fcompose,
    fiber,
    horizontal_compose,
    hpaste,
    identity_cell,
    identity_fun,
    identity_span,
    left_unitor_cell,
    right_unitor_cell,
    square_from_cospan,
    vertical_compose,
    vpaste,
)
from .terms import SmcModel, lookup, psi_hom, psi_monoidal_iso, psi_obj


# ---------------------------------------------------------------------------
# op-level composition and whiskering (strict target)


def op_compose(p: KHom, q: KHom) -> KHom:
    """Stored form of "p then q" in the opposite reading."""
    return k_compose(q, p)


def cell_after(w: KHom, theta: KCell) -> KCell:
    """Whisker: the 1-cell w happens first, then the legs of theta."""
    return k_hcomp(theta, k_id_cell(w))


def cell_before(theta: KCell, w: KHom) -> KCell:
    """Whisker: the legs of theta happen first, then the 1-cell w."""
    return k_hcomp(k_id_cell(w), theta)


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class PbcSystem:
    """Covariant and contravariant 1-cell data plus base-change cells.

    All cells are stated in the stored forms fixed in the module docstring:
    ``u_comp(f, g)`` connects u(g.f) to "u(f) then u(g)", ``v_comp(f, g)``
    connects v(g.f) to "v(g) then v(f)", the identity cells collapse onto
    the strict unit, and ``base_change`` is oriented as documented above.
    The law checker below spells out the pasting and unit-square conditions
    the data must satisfy.
    """

    obj: Callable[[FinSet], FinSet]
    u: Callable[[FinFun], KHom]
    v: Callable[[FinFun], KHom]
    u_id: Callable[[FinSet], KCell]
    v_id: Callable[[FinSet], KCell]
    u_comp: Callable[[FinFun, FinFun], KCell]
    v_comp: Callable[[FinFun, FinFun], KCell]
    base_change: Callable[[PullbackSquare], KCell]


def _linear_cell(src: KHom, dst: KHom) -> KCell:
    return KCell(src, dst, tuple(unique_hom_linear(s, d) for s, d in zip(src.lists, dst.lists)))


def lambda_u(f: FinFun) -> KHom:
    """Ascending fibers of f, one linear list per target element."""
    return KHom(f.dst, f.src, tuple(SList(fiber(f, k)) for k in f.dst))


def lambda_v(f: FinFun) -> KHom:
    """Singleton values of f, one linear list per source element."""
    return KHom(f.src, f.dst, tuple(SList((f(j),)) for j in f.src))


def base_change_unique(square: PullbackSquare) -> KCell:
    """The unique cell between the two fiber readings of a pullback square.

    Both sides are componentwise linear with the same underlying multiset
    (the right fiber over the bottom image), so there is exactly one
    choice; any failure inside signals an implementation bug.
    """
    if not square.is_pullback():
        raise NotPullbackSquare("base change needs a pullback square")
    src = k_compose(lambda_v(square.bottom), lambda_u(square.right))
    dst = k_compose(lambda_u(square.left), lambda_v(square.top))
    return _linear_cell(src, dst)


def lambda_system() -> PbcSystem:
    """The fiber/value system on finite sets; every cell is forced by linearity."""

    def u_comp(f: FinFun, g: FinFun) -> KCell:
        return _linear_cell(lambda_u(fcompose(f, g)), k_compose(lambda_u(g), lambda_u(f)))

    def v_comp(f: FinFun, g: FinFun) -> KCell:
        return _linear_cell(lambda_v(fcompose(f, g)), k_compose(lambda_v(f), lambda_v(g)))

    def u_id(x: FinSet) -> KCell:
        return _linear_cell(lambda_u(identity_fun(x)), k_id(x))

    def v_id(x: FinSet) -> KCell:
        return _linear_cell(lambda_v(identity_fun(x)), k_id(x))

    return PbcSystem(
        obj=lambda x: x,
        u=lambda_u,
        v=lambda_v,
        u_id=u_id,
        v_id=v_id,
        u_comp=u_comp,
        v_comp=v_comp,
        base_change=base_change_unique,
    )


# ---------------------------------------------------------------------------
# the pseudofunctor on spans


def pseudofunctor_on_span(sys: PbcSystem, s: Span) -> KHom:
    """Stored form of "v(left) then u(right)".

    >>> from .spans import FinFun, FinSet, Span
    >>> a, j, k = FinSet(3), FinSet(2), FinSet(2)
    >>> s = Span(FinFun(a, j, (0, 1, 0)), FinFun(a, k, (0, 0, 1)))
    >>> [list(l.labels) for l in pseudofunctor_on_span(lambda_system(), s).lists]
    [[0, 1], [0]]
    """
    return op_compose(sys.v(s.left), sys.u(s.right))


def eta_cell(sys: PbcSystem, phi: FinFun) -> KCell:
    """For an iso phi, the cell from "v(phi) then u(phi)" onto the identity."""
    if not phi.is_bijective():
        raise NotInvertible("eta needs a bijective map")
    square = PullbackSquare(phi, phi, identity_fun(phi.dst), identity_fun(phi.dst))
    bc = sys.base_change(square)
    collapse = k_hcomp(sys.v_id(phi.dst), sys.u_id(phi.dst))
    return k_vcomp(invert_kcell(bc), collapse)


def pseudofunctor_on_cell(sys: PbcSystem, c: SpanCell) -> KCell:
    """Image of a pith cell: split both legs along the apex map, cancel eta."""
    if not c.is_pith():
        raise NotInvertible("only pith cells map forward")
    phi = c.map
    f2, g2 = c.dst.left, c.dst.right
    split = k_hcomp(sys.u_comp(phi, g2), sys.v_comp(phi, f2))
    cancel = k_hcomp(
        k_id_cell(sys.u(g2)),
        k_hcomp(eta_cell(sys, phi), k_id_cell(sys.v(f2))),
    )
    return k_vcomp(split, cancel)


def f_comp_cell(sys: PbcSystem, s: Span, t: Span) -> KCell:
    """Comparison from the image of s;t to "image of s, then image of t"."""
    pb = compose_pullback(s, t)
    split = k_hcomp(sys.u_comp(pb.p2, t.right), sys.v_comp(pb.p1, s.left))
    middle = PullbackSquare(pb.p1, pb.p2, s.right, t.left)
    bc_inv = invert_kcell(sys.base_change(middle))
    rearrange = k_hcomp(
        k_id_cell(sys.u(t.right)),
        k_hcomp(bc_inv, k_id_cell(sys.v(s.left))),
    )
    return k_vcomp(split, rearrange)


def f_id_cell(sys: PbcSystem, x: FinSet) -> KCell:
    """Comparison from the image of the identity span onto the identity 1-cell."""
    return k_hcomp(sys.v_id(x), sys.u_id(x))


# ---------------------------------------------------------------------------
# law suites


@dataclass(frozen=True)
class LawReport:
    name: str
    cases: int
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "ok" if self.ok else f"FAILED ({len(self.violations)})"
        lines = [f"{self.name}: {self.cases} checks, {status}"]
        lines += [f"  - {v}" for v in self.violations[:20]]
        return "\n".join(lines)


def all_functions(a: int, b: int):
    """All maps from a set of size a to one of size b, lexicographically."""
    src, dst = FinSet(a), FinSet(b)
    if a == 0:
        yield FinFun(src, dst, ())
        return
    if b == 0:
        return
    img = [0] * a
    while True:
        yield FinFun(src, dst, tuple(img))
        i = 0
        while i < a:
            img[i] += 1
            if img[i] < b:
                break
            img[i] = 0
            i += 1
        if i == a:
            return


def _random_function(rng: Random, a: int, b: int) -> FinFun | None:
    if b == 0 and a > 0:
        return None
    return FinFun(FinSet(a), FinSet(b), tuple(rng.randrange(b) for _ in range(a)))


def check_pbc_laws(
    sys: PbcSystem,
    max_size: int = 3,
    paste_max_size: int = 2,
    seed: int = 0,
    random_pastes: int = 200,
) -> LawReport:
    """Exercise the defining laws of a system, with exact cell equality.

    Unit squares, single base-change cells and linearity of every produced
    list run exhaustively up to ``max_size``.  Pasting laws run
    exhaustively over generating cospans up to ``paste_max_size`` and on
    seeded random data up to ``max_size``; full exhaustion of pasteable
    pairs at size 3 is combinatorially out of budget.
    """
    violations: list[str] = []
    cases = 0

    def check(cond: bool, msg: str):
        nonlocal cases
        cases += 1
        if not cond:
            violations.append(msg)

    sizes = range(max_size + 1)
    for a in sizes:
        for b in sizes:
            for f in all_functions(a, b):
                check(
                    all(is_linear(l) for l in sys.u(f).lists)
                    and all(is_linear(l) for l in sys.v(f).lists),
                    f"u/v lists not linear at {f.img}",
                )
                hsq = PullbackSquare(identity_fun(f.src), f, f, identity_fun(f.dst))
                lhs = sys.base_change(hsq)
                rhs = k_vcomp(
                    cell_after(sys.u(f), sys.v_id(f.dst)),
                    cell_before(invert_kcell(sys.v_id(f.src)), sys.u(f)),
                )
                check(lhs == rhs, f"horizontal unit square at {f.img}")
                vsq = PullbackSquare(f, identity_fun(f.src), identity_fun(f.dst), f)
                lhs = sys.base_change(vsq)
                rhs = k_vcomp(
                    cell_before(sys.u_id(f.dst), sys.v(f)),
                    cell_after(sys.v(f), invert_kcell(sys.u_id(f.src))),
                )
                check(lhs == rhs, f"vertical unit square at {f.img}")

    for w in sizes:
        for z in sizes:
            for y in sizes:
                for b in all_functions(z, w):
                    for r in all_functions(y, w):
                        sq = square_from_cospan(b, r)
                        cell = sys.base_change(sq)
                        check(
                            all(is_linear(l) for l in cell.src.lists)
                            and all(is_linear(l) for l in cell.dst.lists),
                            f"base-change boundary not linear at {b.img}, {r.img}",
                        )

    def check_hpaste(lsq: PullbackSquare, rsq: PullbackSquare):
        whole = hpaste(lsq, rsq)
        t0, t1 = lsq.top, rsq.top
        v0, v2 = lsq.left, rsq.right
        b0, b1 = lsq.bottom, rsq.bottom
        lhs = k_vcomp(sys.base_change(whole), cell_before(sys.v_comp(t0, t1), sys.u(v0)))
        rhs = k_vcomp(
            cell_after(sys.u(v2), sys.v_comp(b0, b1)),
            cell_before(sys.base_change(rsq), sys.v(b0)),
            cell_after(sys.v(t1), sys.base_change(lsq)),
        )
        check(lhs == rhs, f"horizontal pasting at {b0.img}|{b1.img}|{v2.img}")

    def check_vpaste(tsq: PullbackSquare, bsq: PullbackSquare):
        whole = vpaste(tsq, bsq)
        h0, h2 = tsq.top, bsq.bottom
        l0, l1 = tsq.left, bsq.left
        r0, r1 = tsq.right, bsq.right
        lhs = k_vcomp(sys.base_change(whole), cell_after(sys.v(h0), sys.u_comp(l0, l1)))
        rhs = k_vcomp(
            cell_before(sys.u_comp(r0, r1), sys.v(h2)),
            cell_after(sys.u(r0), sys.base_change(bsq)),
            cell_before(sys.base_change(tsq), sys.u(l1)),
        )
        check(lhs == rhs, f"vertical pasting at {h2.img}/{r1.img}/{r0.img}")

    psizes = range(paste_max_size + 1)
    for d in psizes:
        for e in psizes:
            for f_ in psizes:
                for c in psizes:
                    for b0 in all_functions(d, e):
                        for b1 in all_functions(e, f_):
                            for v2 in all_functions(c, f_):
                                rsq = square_from_cospan(b1, v2)
                                lsq = square_from_cospan(b0, rsq.left)
                                check_hpaste(lsq, rsq)
                    for h2 in all_functions(d, e):
                        for r1 in all_functions(f_, e):
                            bsq = square_from_cospan(h2, r1)
                            for r0 in all_functions(c, f_):
                                tsq = square_from_cospan(bsq.top, r0)
                                check_vpaste(tsq, bsq)

    rng = Random(seed)
    for _ in range(random_pastes):
        d, e, f_, c = (rng.randint(0, max_size) for _ in range(4))
        b0 = _random_function(rng, d, e)
        b1 = _random_function(rng, e, f_)
        v2 = _random_function(rng, c, f_)
        if b0 is None or b1 is None or v2 is None:
            continue
        rsq = square_from_cospan(b1, v2)
        check_hpaste(square_from_cospan(b0, rsq.left), rsq)
        h2 = _random_function(rng, e, f_)
        r1 = _random_function(rng, d, f_)
        r0 = _random_function(rng, c, d)
        if h2 is not None and r1 is not None and r0 is not None:
            bsq = square_from_cospan(h2, r1)
            tsq = square_from_cospan(bsq.top, r0)
            check_vpaste(tsq, bsq)

    return LawReport("pbc-laws", cases, tuple(violations))


def _random_span(rng: Random, max_size: int) -> Span:
    a = rng.randint(0, max_size)
    lo = 0 if a == 0 else 1
    left = _random_function(rng, a, rng.randint(lo, max_size))
    right = _random_function(rng, a, rng.randint(lo, max_size))
    return Span(left, right)


def _random_span_from(rng: Random, dom: FinSet, max_size: int) -> Span:
    a = rng.randint(0, max_size) if dom.size else 0
    left = _random_function(rng, a, dom.size)
    right = _random_function(rng, a, rng.randint(0 if a == 0 else 1, max_size))
    return Span(left, right)


def _random_pith_cell(rng: Random, s: Span) -> SpanCell:
    perm = list(range(s.apex.size))
    rng.shuffle(perm)
    phi = FinFun(s.apex, s.apex, tuple(perm))
    inv = phi.inverse()
    dst = Span(fcompose(inv, s.left), fcompose(inv, s.right))
    return SpanCell(s, dst, phi)


def pseudofunctor_laws(
    sys: PbcSystem, max_size: int = 3, seed: int = 0, samples: int = 100
) -> LawReport:
    """Check the generated pseudofunctor on seeded random spans and cells.

    Covers functoriality on cells, naturality of the composition comparison
    in both arguments, the associativity transport identity and both unit
    coherences, all as exact cell equalities in the strict target.
    """
    rng = Random(seed)
    violations: list[str] = []
    cases = 0

    def check(cond: bool, msg: str):
        nonlocal cases
        cases += 1
        if not cond:
            violations.append(msg)

    def fs(s: Span) -> KHom:
        return pseudofunctor_on_span(sys, s)

    for _ in range(samples):
        s = _random_span(rng, max_size)
        t = _random_span_from(rng, s.cod, max_size)
        u = _random_span_from(rng, t.cod, max_size)

        c1 = _random_pith_cell(rng, s)
        c2 = _random_pith_cell(rng, c1.dst)
        lhs = pseudofunctor_on_cell(sys, vertical_compose(c1, c2))
        rhs = k_vcomp(pseudofunctor_on_cell(sys, c1), pseudofunctor_on_cell(sys, c2))
        check(lhs == rhs, "functoriality on vertical composites")
        check(
            pseudofunctor_on_cell(sys, identity_cell(s)) == k_id_cell(fs(s)),
            "identity cells map to identity cells",
        )

        d1 = _random_pith_cell(rng, s)
        d2 = _random_pith_cell(rng, t)
        hcell = horizontal_compose(d1, d2)
        lhs = k_vcomp(pseudofunctor_on_cell(sys, hcell), f_comp_cell(sys, d1.dst, d2.dst))
        rhs = k_vcomp(
            f_comp_cell(sys, s, t),
            k_hcomp(pseudofunctor_on_cell(sys, d2), pseudofunctor_on_cell(sys, d1)),
        )
        check(lhs == rhs, "naturality of the composition comparison")

        lhs = k_vcomp(
            pseudofunctor_on_cell(sys, assoc_cell(s, t, u)),
            f_comp_cell(sys, s, compose_span(t, u)),
            cell_after(fs(s), f_comp_cell(sys, t, u)),
        )
        rhs = k_vcomp(
            f_comp_cell(sys, compose_span(s, t), u),
            cell_before(f_comp_cell(sys, s, t), fs(u)),
        )
        check(lhs == rhs, "associativity transport")

        lhs = pseudofunctor_on_cell(sys, right_unitor_cell(s))
        rhs = k_vcomp(
            f_comp_cell(sys, s, identity_span(s.cod)),
            cell_after(fs(s), f_id_cell(sys, s.cod)),
        )
        check(lhs == rhs, "right unit coherence")

        lhs = pseudofunctor_on_cell(sys, left_unitor_cell(s))
        rhs = k_vcomp(
            f_comp_cell(sys, identity_span(s.dom), s),
            cell_before(f_id_cell(sys, s.dom), fs(s)),
        )
        check(lhs == rhs, "left unit coherence")

    return LawReport("pseudofunctor-laws", cases, tuple(violations))


# ---------------------------------------------------------------------------
# the end-to-end evaluator


@dataclass(frozen=True)
class UnbiasResult:
    """Per-target-index unbiased tensors for a span, in a chosen model."""

    span: Span
    family: KHom
    objects: tuple


def unbias_eval(s: Span, m: SmcModel, assignment) -> UnbiasResult:
    """Objects of the unbiased tensor: fold each pulled-back fiber list.

    ``assignment`` gives an object of ``m`` for each element of the span's
    left foot.

    >>> from .models import FreeTermModel
    >>> from .spans import FinFun, FinSet, Span
    >>> from .terms import Gen
    >>> pt = FinSet(1); two = FinSet(2)
    >>> s = Span(FinFun(two, pt, (0, 0)), FinFun(two, pt, (0, 0)))
    >>> r = unbias_eval(s, FreeTermModel(), {0: Gen("A")})
    >>> print(r.objects[0])
    (A*(A*I))
    """
    fam = pseudofunctor_on_span(lambda_system(), s)
    objects = tuple(psi_obj(m, assignment, l.labels) for l in fam.lists)
    return UnbiasResult(s, fam, objects)


def unbias_cell(c: SpanCell, m: SmcModel, assignment) -> tuple:
    """Model morphisms of a pith cell, one per target index."""
    kcell = pseudofunctor_on_cell(lambda_system(), c)
    return tuple(psi_hom(m, assignment, h) for h in kcell.homs)


def psi_theta_iso(g: KHom, l: SList, assignment, m: SmcModel):
    """From the fold of a concatenated extension to the iterated fold.

    Sends the value at Theta_g(l) to the fold over l of the per-label
    values; built from the binary monoidal comparison by cons recursion,
    with no braidings.
    """
    if len(l) == 0:
        return m.identity(m.unit())
    head, tail = l.labels[0], SList(l.labels[1:])
    block = g.lists[head]
    rest = theta_apply(g, tail)
    unpack = psi_monoidal_iso(block, rest, assignment, m)
    inner = psi_theta_iso(g, tail, assignment, m)
    step = m.tensor_mor(m.identity(psi_obj(m, assignment, block.labels)), inner)
    return m.compose(unpack, step)


def unbias_comp_iso(s: Span, t: Span, m: SmcModel, assignment) -> tuple:
    """Composition comparison of the evaluated pseudofunctor, per index.

    Component l goes from the object of the composite span to the object
    obtained by folding t's fibers over the family of s's objects.
    """
    sys = lambda_system()
    fam_s, fam_t = pseudofunctor_on_span(sys, s), pseudofunctor_on_span(sys, t)
    kcell = f_comp_cell(sys, s, t)
    out = []
    for l in range(fam_t.src.size):
        move = psi_hom(m, assignment, kcell.homs[l])
        unpack = psi_theta_iso(fam_s, fam_t.lists[l], assignment, m)
        out.append(m.compose(move, unpack))
    return tuple(out)


def unbias_unit_iso(x: FinSet, m: SmcModel, assignment) -> tuple:
    """Unit comparison: collapse each singleton fold onto its object."""
    return tuple(m.right_unitor(lookup(assignment, j)) for j in x)


def psi_family_map(m: SmcModel, homs: Sequence, l: SList):
    """Fold a family of morphisms along a list: the action of a fold on maps."""
    if len(l) == 0:
        return m.identity(m.unit())
    head, tail = l.labels[0], SList(l.labels[1:])
    return m.tensor_mor(homs[head], psi_family_map(m, homs, tail))


def unbias_coherence_failures(
    m: SmcModel,
    assignment_for: Callable[[FinSet], object],
    triples: Sequence[tuple[Span, Span, Span]],
    rng: Random | None = None,
) -> list[str]:
    """End-to-end pseudofunctor laws for triples of composable spans.

    Each law compares two model morphisms under the model's equality; with
    the free term model every comparison runs the coherence decision
    procedure.
    """
    failures: list[str] = []
    for s, t, u in triples:
        x = assignment_for(s.dom)
        sys = lambda_system()
        fam_s = pseudofunctor_on_span(sys, s)
        fam_t = pseudofunctor_on_span(sys, t)
        fam_u = pseudofunctor_on_span(sys, u)
        y = {k: psi_obj(m, x, l.labels) for k, l in enumerate(fam_s.lists)}

        st = compose_span(s, t)
        comp_st = unbias_comp_iso(s, t, m, x)

        # associativity transport
        alpha = unbias_cell(assoc_cell(s, t, u), m, x)
        comp_s_tu = unbias_comp_iso(s, compose_span(t, u), m, x)
        comp_tu_at_y = unbias_comp_iso(t, u, m, y)
        comp_st_u = unbias_comp_iso(st, u, m, x)
        for l in range(fam_u.src.size):
            lhs = m.compose(m.compose(alpha[l], comp_s_tu[l]), comp_tu_at_y[l])
            rhs = m.compose(comp_st_u[l], psi_family_map(m, comp_st, fam_u.lists[l]))
            if not m.mor_equal(lhs, rhs):
                failures.append(f"associativity at index {l} of {u.cod.size}")

        # unit coherences
        run = unbias_cell(right_unitor_cell(s), m, x)
        comp_rid = unbias_comp_iso(s, identity_span(s.cod), m, x)
        unit_y = unbias_unit_iso(s.cod, m, y)
        for k in range(s.cod.size):
            if not m.mor_equal(run[k], m.compose(comp_rid[k], unit_y[k])):
                failures.append(f"right unit at index {k}")
        lun = unbias_cell(left_unitor_cell(s), m, x)
        comp_lid = unbias_comp_iso(identity_span(s.dom), s, m, x)
        unit_x = unbias_unit_iso(s.dom, m, x)
        for k in range(s.cod.size):
            rhs = m.compose(comp_lid[k], psi_family_map(m, unit_x, fam_s.lists[k]))
            if not m.mor_equal(lun[k], rhs):
                failures.append(f"left unit at index {k}")

        # naturality of the comparison in the first argument
        if rng is not None and s.apex.size:
            c = _random_pith_cell(rng, s)
            hcell = horizontal_compose(c, identity_cell(t))
            moved = unbias_cell(hcell, m, x)
            comp_2 = unbias_comp_iso(c.dst, t, m, x)
            cs = unbias_cell(c, m, x)
            for l in range(fam_t.src.size):
                lhs = m.compose(moved[l], comp_2[l])
                rhs = m.compose(comp_st[l], psi_family_map(m, cs, fam_t.lists[l]))
                if not m.mor_equal(lhs, rhs):
                    failures.append(f"comparison naturality at index {l}")
    return failures
