"""Free SMC terms: evaluation, normalization, the decision procedure, folds."""

from random import Random

import pytest

from smckit.errors import BoundaryMismatch, IllTyped, UnassignedLabel
from smckit.models import FinBijModel, FreeTermModel, SListModel, smc_law_failures
from smckit.laws import random_walk_term
from smckit.slist import SList, SListHom, hom_equal, identity_hom
from smckit.perms import Perm
from smckit.terms import (
    Assoc,
    Braid,
    Comp,
    Gen,
    Id,
    Inv,
    LeftUnitor,
    Par,
    RightUnitor,
    Tensor,
    Unit,
    canonical_term,
    decide_equal,
    eval_mor,
    eval_obj,
    mor_src,
    mor_tgt,
    normalize,
    normalize_obj,
    psi_extend,
    psi_monoidal_iso,
    typecheck,
)

a, b, c, d = Gen("a"), Gen("b"), Gen("c"), Gen("d")
slist_model = SListModel()
term_model = FreeTermModel()


def singletons(label):
    return SList((label,))


def test_eval_obj():
    assert eval_obj(Unit(), slist_model, singletons) == SList(())
    assert eval_obj(a, slist_model, singletons) == SList(("a",))
    assert eval_obj(Tensor(a, Unit()), slist_model, singletons) == SList(("a",))
    with pytest.raises(UnassignedLabel):
        eval_obj(a, slist_model, {})


def test_eval_mor_examples():
    h = eval_mor(Braid(a, b), slist_model, singletons)
    assert h.phi.img == (1, 0)
    h = eval_mor(Assoc(a, b, c), slist_model, singletons)
    assert h == identity_hom(SList(("a", "b", "c")))
    f = Braid(a, b)
    assert eval_mor(Comp(f, Inv(f)), slist_model, singletons) == identity_hom(SList(("a", "b")))


def test_eval_requires_well_typed():
    bad = Comp(Braid(a, b), Braid(a, b))
    with pytest.raises(IllTyped):
        eval_mor(bad, slist_model, singletons)
    with pytest.raises(IllTyped):
        decide_equal(bad, bad)


def test_normalize_pentagon_and_hexagon():
    w, x, y, z = a, b, c, d
    # pentagon legs on four generators evaluate to the identity
    leg1 = Comp(
        Comp(Par(Assoc(w, x, y), Id(z)), Assoc(w, Tensor(x, y), z)),
        Par(Id(w), Assoc(x, y, z)),
    )
    leg2 = Comp(Assoc(Tensor(w, x), y, z), Assoc(w, x, Tensor(y, z)))
    n1, n2 = normalize(leg1), normalize(leg2)
    assert n1.phi.is_identity() and hom_equal(n1, n2)
    # hexagon legs share the rotation permutation
    h1 = Comp(Comp(Assoc(a, b, c), Braid(a, Tensor(b, c))), Assoc(b, c, a))
    h2 = Comp(Comp(Par(Braid(a, b), Id(c)), Assoc(b, a, c)), Par(Id(b), Braid(a, c)))
    assert normalize(h1).phi.img == (1, 2, 0)
    assert hom_equal(normalize(h1), normalize(h2))
    assert normalize(Id(a)) == identity_hom(SList(("a",)))


def test_decide_equal_examples():
    triangle_l = Par(RightUnitor(a), Id(b))
    triangle_r = Comp(Assoc(a, Unit(), b), Par(Id(a), LeftUnitor(b)))
    assert decide_equal(triangle_l, triangle_r)
    assert not decide_equal(Braid(a, a), Id(Tensor(a, a)))
    t = Braid(a, b)
    assert decide_equal(t, t)
    with pytest.raises(BoundaryMismatch):
        decide_equal(Braid(a, b), Id(Tensor(a, b)))


def test_canonical_term_round_trip():
    ident = identity_hom(SList(("a", "b")))
    assert hom_equal(normalize(canonical_term(ident)), ident)
    f = SListHom(SList(("a", "b")), SList(("b", "a")), Perm((1, 0)))
    assert normalize(canonical_term(f)) == f
    g = SListHom(SList(("a", "b", "c")), SList(("c", "b", "a")), Perm((2, 1, 0)))
    assert normalize(canonical_term(g)) == g


def test_canonical_term_round_trip_random():
    rng = Random(11)
    for _ in range(200):
        labels = tuple(rng.choice("aabc") for _ in range(rng.randint(0, 6)))
        img = list(range(len(labels)))
        rng.shuffle(img)
        src = SList(labels)
        dst = SList(tuple(labels[i] for i in img))
        f = SListHom(src, dst, Perm(tuple(img)))
        assert normalize(canonical_term(f)) == f


def test_psi_extend():
    obj_fn, hom_fn = psi_extend(lambda l: Gen(l), term_model)
    assert obj_fn(SList(())) == Unit()
    assert obj_fn(SList(("k", "k"))) == Tensor(Gen("k"), Tensor(Gen("k"), Unit()))
    sw = SListHom(SList(("a", "b")), SList(("b", "a")), Perm((1, 0)))
    assert normalize(hom_fn(sw)).phi.img == (1, 0)
    # functoriality up to the model's equality
    from smckit.slist import compose as hom_compose

    f = SListHom(SList(("a", "b")), SList(("b", "a")), Perm((1, 0)))
    g = SListHom(SList(("b", "a")), SList(("a", "b")), Perm((1, 0)))
    lhs = hom_fn(hom_compose(f, g))
    rhs = Comp(hom_fn(f), hom_fn(g))
    assert term_model.mor_equal(lhs, rhs)


def test_psi_monoidal_iso():
    iso = psi_monoidal_iso(SList(()), SList(("a",)), lambda l: Gen(l), term_model)
    assert mor_src(iso) == Tensor(Gen("a"), Unit())
    assert mor_tgt(iso) == Tensor(Unit(), Tensor(Gen("a"), Unit()))
    iso = psi_monoidal_iso(SList(("a",)), SList(()), lambda l: Gen(l), term_model)
    assert normalize(iso).phi.is_identity()
    rng = Random(12)
    for _ in range(50):
        l1 = SList(tuple(rng.choice("ab") for _ in range(rng.randint(0, 4))))
        l2 = SList(tuple(rng.choice("cd") for _ in range(rng.randint(0, 4))))
        iso = psi_monoidal_iso(l1, l2, lambda l: Gen(l), term_model)
        assert normalize(iso).phi.is_identity()


def test_shipped_models_pass_laws():
    assert not smc_law_failures(
        slist_model, tuple(SList(tuple(w)) for w in ("a", "bc", "", "de"))
    )
    assert not smc_law_failures(term_model, (a, Tensor(b, c), Unit(), d))
    assert not smc_law_failures(FinBijModel(), (2, 1, 0, 3))


def test_eval_in_finbij_model():
    m = FinBijModel()
    sizes = {"a": 1, "b": 2, "c": 1}
    h = eval_mor(Braid(a, b), m, sizes)
    assert h.img == (1, 2, 0)
    h = eval_mor(Comp(Braid(a, b), Braid(b, a)), m, sizes)
    assert h.is_identity()


def test_random_terms_boundaries():
    rng = Random(13)
    for _ in range(100):
        t = random_walk_term(rng, ["a", "b", "c"], rng.randint(0, 5))
        typecheck(t)
        h = normalize(t)
        assert h.src == normalize_obj(mor_src(t))
        assert h.dst == normalize_obj(mor_tgt(t))


def test_normalize_agrees_with_finbij_evaluation():
    # independent route: the unlabeled-bijection model reproduces phi
    m = FinBijModel()
    rng = Random(16)
    for _ in range(200):
        t = random_walk_term(rng, ["a", "b", "c"], rng.randint(0, 6))
        assert eval_mor(t, m, lambda label: 1) == normalize(t).phi


def test_operator_sugar():
    t = Braid(a, b) >> Braid(b, a)
    assert isinstance(t, Comp)
    p = Id(a) @ Id(b)
    assert isinstance(p, Par)


def test_psi_hom_functorial_random():
    from smckit.slist import GenWord, compose as hom_compose, hom_from_word
    from smckit.terms import psi_hom

    rng = Random(15)
    assign = lambda l: Gen(l)
    for _ in range(60):
        labels = tuple(rng.choice("aab") for _ in range(rng.randint(1, 5)))
        start = SList(labels)
        n = len(labels)
        mk = lambda: tuple(rng.randrange(n - 1) for _ in range(rng.randint(0, 4))) if n > 1 else ()
        f = hom_from_word(GenWord(start, mk()))
        g = hom_from_word(GenWord(f.dst, mk()))
        lhs = psi_hom(term_model, assign, hom_compose(f, g))
        rhs = Comp(psi_hom(term_model, assign, f), psi_hom(term_model, assign, g))
        assert decide_equal(lhs, rhs)
        ident = psi_hom(term_model, assign, identity_hom(start))
        assert normalize(ident).phi.is_identity()


def test_psi_monoidal_iso_naturality():
    from smckit.slist import GenWord, hom_from_word
    from smckit.terms import psi_hom

    rng = Random(14)
    assign = lambda l: Gen(l)
    for _ in range(40):
        l1 = SList(tuple(rng.choice("ab") for _ in range(rng.randint(0, 3))))
        l2 = SList(tuple(rng.choice("cd") for _ in range(rng.randint(0, 3))))
        w1 = tuple(rng.randrange(len(l1) - 1) for _ in range(rng.randint(0, 3))) if len(l1) > 1 else ()
        w2 = tuple(rng.randrange(len(l2) - 1) for _ in range(rng.randint(0, 3))) if len(l2) > 1 else ()
        f = hom_from_word(GenWord(l1, w1))
        g = hom_from_word(GenWord(l2, w2))
        from smckit.monoidal import tensor_hom

        both = tensor_hom(f, g)
        lhs = Comp(psi_hom(term_model, assign, both), psi_monoidal_iso(f.dst, g.dst, assign, term_model))
        rhs = Comp(
            psi_monoidal_iso(l1, l2, assign, term_model),
            Par(psi_hom(term_model, assign, f), psi_hom(term_model, assign, g)),
        )
        assert decide_equal(lhs, rhs)
