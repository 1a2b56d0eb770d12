"""Monoidal structure on symmetric lists: tensor, braiding, embeddings."""

from random import Random

import pytest

from smckit.errors import IndexOutOfRange
from smckit.monoidal import braiding, braiding_recursive, index_embed, tensor_hom, tensor_obj
from smckit.slist import GenWord, SList, compose, hom_equal, hom_from_word, identity_hom


def rand_hom(rng, labels):
    start = SList(labels)
    n = len(labels)
    positions = tuple(rng.randrange(n - 1) for _ in range(rng.randint(0, 2 * n))) if n > 1 else ()
    return hom_from_word(GenWord(start, positions))


def test_tensor_obj():
    assert tensor_obj(SList(("a",)), SList(("b", "c"))) == SList(("a", "b", "c"))
    assert tensor_obj(SList(()), SList(("x",))) == SList(("x",))
    x, y, z = SList(("a",)), SList(("b",)), SList(("c", "d"))
    assert tensor_obj(tensor_obj(x, y), z) == tensor_obj(x, tensor_obj(y, z))


def test_tensor_hom_examples():
    a, b, c = SList(("a",)), SList(("b",)), SList(("c",))
    ab = tensor_obj(a, b)
    assert tensor_hom(identity_hom(ab), identity_hom(c)) == identity_hom(SList(("a", "b", "c")))
    sw = hom_from_word(GenWord(ab, (0,)))
    assert tensor_hom(sw, identity_hom(c)).phi.img == (1, 0, 2)
    assert tensor_hom(identity_hom(c), sw).phi.img == (0, 2, 1)


def test_braiding_examples():
    assert braiding(SList(("a",)), SList(("b", "c"))).phi.img == (1, 2, 0)
    l = SList(("p", "q"))
    assert braiding(SList(()), l) == identity_hom(l)
    x, y = SList(("a", "b")), SList(("c",))
    assert compose(braiding(x, y), braiding(y, x)) == identity_hom(tensor_obj(x, y))


def test_braiding_recursive_examples():
    a, b = SList(("a",)), SList(("b",))
    h = braiding_recursive(a, b)
    assert h.phi.img == (1, 0)
    assert braiding_recursive(a, SList(("b", "c"))).phi.img == (1, 2, 0)
    assert braiding_recursive(SList(("a", "b")), SList(("c",))).phi.img == (2, 0, 1)


@pytest.mark.parametrize("total", range(0, 9))
def test_braiding_agrees_with_recursive_oracle(total):
    for nx in range(total + 1):
        x = SList(tuple(f"x{i}" for i in range(nx)))
        y = SList(tuple(f"y{i}" for i in range(total - nx)))
        assert braiding(x, y) == braiding_recursive(x, y)


def test_braiding_naturality():
    rng = Random(5)
    for _ in range(200):
        f = rand_hom(rng, tuple(rng.choice("ab") for _ in range(rng.randint(0, 4))))
        g = rand_hom(rng, tuple(rng.choice("cd") for _ in range(rng.randint(0, 4))))
        lhs = compose(tensor_hom(f, g), braiding(f.dst, g.dst))
        rhs = compose(braiding(f.src, g.src), tensor_hom(g, f))
        assert hom_equal(lhs, rhs)


def test_hexagons_strict():
    rng = Random(6)
    for _ in range(100):
        x = SList(tuple(rng.choice("ab") for _ in range(rng.randint(0, 3))))
        y = SList(tuple(rng.choice("cd") for _ in range(rng.randint(0, 3))))
        z = SList(tuple(rng.choice("ef") for _ in range(rng.randint(0, 3))))
        lhs = braiding(tensor_obj(x, y), z)
        rhs = compose(
            tensor_hom(identity_hom(x), braiding(y, z)),
            tensor_hom(braiding(x, z), identity_hom(y)),
        )
        assert hom_equal(lhs, rhs)
        lhs = braiding(x, tensor_obj(y, z))
        rhs = compose(
            tensor_hom(braiding(x, y), identity_hom(z)),
            tensor_hom(identity_hom(y), braiding(x, z)),
        )
        assert hom_equal(lhs, rhs)


def test_interchange():
    rng = Random(7)
    for _ in range(200):
        f = rand_hom(rng, tuple(rng.choice("ab") for _ in range(rng.randint(0, 4))))
        f2 = rand_hom(rng, f.dst.labels)
        g = rand_hom(rng, tuple(rng.choice("cd") for _ in range(rng.randint(0, 4))))
        g2 = rand_hom(rng, g.dst.labels)
        assert compose(tensor_hom(f, g), tensor_hom(f2, g2)) == tensor_hom(
            compose(f, f2), compose(g, g2)
        )


def test_index_embed():
    x, y = SList(("a", "b")), SList(("c", "d", "e"))
    assert index_embed(x, y, "left", 1) == 1
    assert index_embed(x, y, "right", 0) == 2
    lefts = {index_embed(x, y, "left", i) for i in range(len(x))}
    rights = {index_embed(x, y, "right", i) for i in range(len(y))}
    assert lefts | rights == set(range(5)) and not lefts & rights
    with pytest.raises(IndexOutOfRange):
        index_embed(x, y, "left", 2)


def test_whiskering_formula():
    # tensoring with an identity acts on left-embedded indices through phi
    rng = Random(8)
    for _ in range(100):
        f = rand_hom(rng, tuple(rng.choice("ab") for _ in range(rng.randint(1, 4))))
        z = SList(tuple(rng.choice("cd") for _ in range(rng.randint(0, 3))))
        whiskered = tensor_hom(f, identity_hom(z))
        for i in range(len(f.dst)):
            lhs = whiskered.phi(index_embed(f.dst, z, "left", i))
            assert lhs == index_embed(f.src, z, "left", f.phi(i))
