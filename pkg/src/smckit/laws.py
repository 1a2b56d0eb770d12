"""
Law suites: executable checks behind the acceptance criteria.

Every suite returns a LawReport and is deterministic given its seed; the
CLI ``check-laws`` command and the test suite both run these functions.
Exhaustive enumeration is used wherever the instance count stays in the
tens of thousands; beyond that (pasting pairs, span chains) the suites
exhaust all shapes at a smaller size and add seeded random instances at
the stated size.
"""

from __future__ import annotations

import itertools
from random import Random

from .kleisli import KHom, composite_multiset, duality, k_compose, k_id
from .models import FinBijModel, FreeTermModel, SListModel, smc_law_failures
from .monoidal import braiding, braiding_recursive
from .perms import (
    CoxeterMatrixA,
    Perm,
    all_perms,
    exchange_step,
    inversion_length,
    is_reduced,
    reduced_word,
    word_to_perm,
)
from .slist import (
    GenWord,
    Multiset,
    SList,
    compose as hom_compose,
    hom_equal,
    hom_from_word,
    underlying_multiset,
    word_from_hom,
)
from .spans import (
    FinFun,
    FinSet,
    Span,
    adjunction_cells,
    assoc_cell,
    compose_span,
    horizontal_compose,
    identity_cell,
    identity_span,
    invert_cell,
    left_unitor_cell,
    right_unitor_cell,
    span_pull,
    span_push,
    transpose_span,
    vcomp,
)
from .terms import (
    Assoc,
    Braid,
    Comp,
    Gen,
    Id,
    Inv,
    LeftUnitor,
    MorTerm,
    ObjTerm,
    Par,
    RightUnitor,
    Tensor,
    Unit,
    decide_equal,
    mor_src,
    mor_tgt,
    normalize_obj,
)
from .unbias import (
    LawReport,
    _random_pith_cell,
    _random_span,
    _random_span_from,
    all_functions,
    check_pbc_laws,
    lambda_system,
    lambda_v,
    pseudofunctor_laws,
    pseudofunctor_on_span,
    unbias_coherence_failures,
    unbias_eval,
)


class _Check:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.violations: list[str] = []

    def __call__(self, cond: bool, msg: str):
        self.cases += 1
        if not cond:
            self.violations.append(msg)

    def report(self) -> LawReport:
        return LawReport(self.name, self.cases, tuple(self.violations))


# ---------------------------------------------------------------------------
# permutations / Coxeter


def coxeter_suite(max_exhaustive: int = 6, random_n: int = 8, samples: int = 1000, seed: int = 0) -> LawReport:
    check = _Check("coxeter")
    for n in range(1, max_exhaustive + 1):
        matrix = CoxeterMatrixA(max(n - 1, 0))
        for i in range(n - 1):
            for j in range(n - 1):
                word = (i, j) * matrix.entry(i, j)
                check(word_to_perm(word, n).is_identity(), f"relation ({i},{j}) fails in S_{n}")
        for p in all_perms(n):
            w = reduced_word(p)
            check(word_to_perm(w, n) == p, f"round trip fails at {p.img}")
            check(len(w) == inversion_length(p), f"length mismatch at {p.img}")
            for b in range(n - 1):
                lengthened = word_to_perm((b,) + w, n)
                if inversion_length(lengthened) <= len(w):
                    i = exchange_step(w, b, n)
                    erased = w[:i] + w[i + 1 :]
                    check(
                        word_to_perm(erased, n) == lengthened,
                        f"exchange value wrong at {p.img}, b={b}",
                    )
                    check(is_reduced(erased, n), f"erased word not reduced at {p.img}, b={b}")
    rng = Random(seed)
    for _ in range(samples):
        n = rng.randint(1, random_n)
        img = list(range(n))
        rng.shuffle(img)
        p = Perm(tuple(img))
        w = reduced_word(p)
        check(word_to_perm(w, n) == p and len(w) == inversion_length(p), f"random round trip at {p.img}")
        u = tuple(rng.randrange(n - 1) for _ in range(rng.randint(0, 6))) if n > 1 else ()
        v = tuple(rng.randrange(n - 1) for _ in range(rng.randint(0, 6))) if n > 1 else ()
        check(
            word_to_perm(u + v, n) == word_to_perm(u, n) * word_to_perm(v, n),
            f"concatenation/composition mismatch at {u}, {v}",
        )
    return check.report()


def random_reduced_word(rng: Random, n: int) -> tuple[int, ...]:
    """A uniform-ish random reduced word: random descents of a random permutation."""
    img = list(range(n))
    rng.shuffle(img)
    out = []
    while True:
        descents = [i for i in range(n - 1) if img[i] > img[i + 1]]
        if not descents:
            break
        i = rng.choice(descents)
        out.append(i)
        img[i], img[i + 1] = img[i + 1], img[i]
    return tuple(reversed(out))


# ---------------------------------------------------------------------------
# symmetric lists


def faithfulness_suite(max_len: int = 8, samples_per_len: int = 1000, seed: int = 0, alphabet: str = "abc") -> LawReport:
    check = _Check("faithfulness")
    rng = Random(seed)
    for length in range(1, max_len + 1):
        for _ in range(samples_per_len):
            start = SList(tuple(rng.choice(alphabet) for _ in range(length)))
            n_pos = rng.randint(0, 2 * length)
            positions = tuple(rng.randrange(length - 1) for _ in range(n_pos)) if length > 1 else ()
            f = hom_from_word(GenWord(start, positions))
            again = hom_from_word(word_from_hom(f))
            check(again == f, f"round trip fails for {start}, {positions}")
            other = tuple(rng.randrange(length - 1) for _ in range(rng.randint(0, 2 * length))) if length > 1 else ()
            g = hom_from_word(GenWord(start, other))
            same_perm = f.phi == g.phi
            if same_perm:
                check(hom_equal(f, g), f"equal permutations but unequal homs at {start}")
            else:
                check(f.dst != g.dst or not hom_equal(f, g), f"unequal permutations but equal homs at {start}")
    return check.report()


def braiding_suite(max_total: int = 8) -> LawReport:
    check = _Check("braiding")
    for total in range(max_total + 1):
        for nx in range(total + 1):
            ny = total - nx
            x = SList(tuple(f"x{i}" for i in range(nx)))
            y = SList(tuple(f"y{i}" for i in range(ny)))
            check(
                braiding(x, y) == braiding_recursive(x, y),
                f"braiding oracle mismatch at sizes ({nx},{ny})",
            )
            forth = braiding(x, y)
            back = braiding(y, x)
            check(
                hom_compose(forth, back).phi.is_identity(),
                f"braiding not symmetric at sizes ({nx},{ny})",
            )
    return check.report()


# ---------------------------------------------------------------------------
# free SMC terms


def random_obj(rng: Random, labels, max_depth: int = 3) -> ObjTerm:
    if max_depth == 0 or rng.random() < 0.35:
        if rng.random() < 0.15:
            return Unit()
        return Gen(rng.choice(labels))
    return Tensor(random_obj(rng, labels, max_depth - 1), random_obj(rng, labels, max_depth - 1))


def _paths(obj: ObjTerm):
    yield ()
    if isinstance(obj, Tensor):
        for p in _paths(obj.left):
            yield ("L",) + p
        for p in _paths(obj.right):
            yield ("R",) + p


def _subtree(obj: ObjTerm, path) -> ObjTerm:
    for step in path:
        obj = obj.left if step == "L" else obj.right
    return obj


def _node_count(obj: ObjTerm) -> int:
    if isinstance(obj, Tensor):
        return 1 + _node_count(obj.left) + _node_count(obj.right)
    return 1


def _moves_at(sub: ObjTerm, allow_growth: bool) -> list[MorTerm]:
    moves: list[MorTerm] = []
    if isinstance(sub, Tensor):
        moves.append(Braid(sub.left, sub.right))
        if isinstance(sub.left, Tensor):
            moves.append(Assoc(sub.left.left, sub.left.right, sub.right))
        if isinstance(sub.right, Tensor):
            moves.append(Inv(Assoc(sub.left, sub.right.left, sub.right.right)))
        if isinstance(sub.left, Unit):
            moves.append(LeftUnitor(sub.right))
        if isinstance(sub.right, Unit):
            moves.append(RightUnitor(sub.left))
    if allow_growth:
        moves.append(Inv(LeftUnitor(sub)))
        moves.append(Inv(RightUnitor(sub)))
    return moves


def _whisker(obj: ObjTerm, path, move: MorTerm) -> MorTerm:
    if not path:
        return move
    if path[0] == "L":
        return Par(_whisker(obj.left, path[1:], move), Id(obj.right))
    return Par(Id(obj.left), _whisker(obj.right, path[1:], move))


def random_walk_term(rng: Random, labels, steps: int) -> MorTerm:
    """A random well-typed structural morphism, built as a left-nested walk."""
    obj = random_obj(rng, labels)
    term: MorTerm = Id(obj)
    cur = obj
    for _ in range(steps):
        allow_growth = _node_count(cur) < 15
        candidates = []
        for path in _paths(cur):
            for move in _moves_at(_subtree(cur, path), allow_growth):
                candidates.append((path, move))
        if not candidates:
            break
        path, move = rng.choice(candidates)
        whiskered = _whisker(cur, path, move)
        term = Comp(term, whiskered)
        cur = mor_tgt(whiskered)
    return term


def _random_structural_from(rng: Random, obj: ObjTerm) -> MorTerm:
    allow_growth = _node_count(obj) < 15
    candidates = []
    for path in _paths(obj):
        for move in _moves_at(_subtree(obj, path), allow_growth):
            candidates.append((path, move))
    path, move = rng.choice(candidates)
    return _whisker(obj, path, move)


def axiom_rewrite(rng: Random, t: MorTerm, depth: int = 0) -> MorTerm:
    """One boundary-preserving rewrite drawn from the axiom schemas."""
    if depth < 4 and rng.random() < 0.5:
        if isinstance(t, Comp):
            if rng.random() < 0.5:
                return Comp(axiom_rewrite(rng, t.first, depth + 1), t.second)
            return Comp(t.first, axiom_rewrite(rng, t.second, depth + 1))
        if isinstance(t, Par):
            if rng.random() < 0.5:
                return Par(axiom_rewrite(rng, t.left, depth + 1), t.right)
            return Par(t.left, axiom_rewrite(rng, t.right, depth + 1))
        if isinstance(t, Inv):
            return Inv(axiom_rewrite(rng, t.arg, depth + 1))
    src, tgt = mor_src(t), mor_tgt(t)
    options = [
        lambda: Comp(Id(src), t),
        lambda: Comp(t, Id(tgt)),
        lambda: Comp(t, Comp(_m := _random_structural_from(rng, tgt), Inv(_m))),
        lambda: Comp(Comp(Inv(LeftUnitor(src)), Par(Id(Unit()), t)), LeftUnitor(tgt)),
        lambda: Comp(Comp(Inv(RightUnitor(src)), Par(t, Id(Unit()))), RightUnitor(tgt)),
        lambda: Inv(Inv(t)),
    ]
    if isinstance(t, Comp) and isinstance(t.first, Comp):
        options.append(lambda: Comp(t.first.first, Comp(t.first.second, t.second)))
    if isinstance(t, Comp) and isinstance(t.second, Comp):
        options.append(lambda: Comp(Comp(t.first, t.second.first), t.second.second))
    if isinstance(t, Par):
        a, b = t.left, t.right
        options.append(lambda: Comp(Par(a, Id(mor_src(b))), Par(Id(mor_tgt(a)), b)))
        options.append(lambda: Comp(Par(Id(mor_src(a)), b), Par(a, Id(mor_tgt(b)))))
        options.append(
            lambda: Comp(
                Comp(Braid(mor_src(a), mor_src(b)), Par(b, a)),
                Braid(mor_tgt(b), mor_tgt(a)),
            )
        )
    if isinstance(t, Id) and isinstance(t.obj, Tensor):
        options.append(lambda: Par(Id(t.obj.left), Id(t.obj.right)))
    return rng.choice(options)()


def coherence_suite(n_terms: int = 1000, n_labels: int = 5, seed: int = 0) -> LawReport:
    check = _Check("coherence")
    rng = Random(seed)
    labels = [f"x{i}" for i in range(n_labels)]

    for m, objs in (
        (SListModel(), tuple(SList(tuple(w)) for w in ("a", "bc", "d", "ae"))),
        (FreeTermModel(), tuple(Gen(l) for l in "abcd")),
        (FinBijModel(), (1, 2, 3, 2)),
    ):
        fails = smc_law_failures(m, objs)
        check(not fails, f"{type(m).__name__} fails laws: {fails}")

    for _ in range(n_terms):
        term = random_walk_term(rng, labels, rng.randint(0, 6))
        rewritten = term
        for _ in range(rng.randint(1, 3)):
            rewritten = axiom_rewrite(rng, rewritten)
        check(decide_equal(term, rewritten), "axiom rewrite changed the normal form")

    instance_labels = [f"x{i}" for i in range(max(n_labels, 6))]
    for _ in range(200):
        w, x, y, z = (random_obj(rng, instance_labels, 2) for _ in range(4))
        failures = smc_law_failures(FreeTermModel(), (w, x, y, z))
        check(not failures, f"term-model instance fails: {failures}")
        f = _random_structural_from(rng, x)
        g = _random_structural_from(rng, y)
        fx, fy = mor_src(f), mor_src(g)
        tx, ty = mor_tgt(f), mor_tgt(g)
        check(
            decide_equal(Comp(Par(f, g), Braid(tx, ty)), Comp(Braid(fx, fy), Par(g, f))),
            "braid naturality fails",
        )
        check(
            decide_equal(Comp(Par(Id(Unit()), f), LeftUnitor(tx)), Comp(LeftUnitor(fx), f)),
            "left unitor naturality fails",
        )
        check(
            decide_equal(Comp(Par(f, Id(Unit())), RightUnitor(tx)), Comp(RightUnitor(fx), f)),
            "right unitor naturality fails",
        )
        h = _random_structural_from(rng, z)
        check(
            decide_equal(
                Comp(Par(Par(f, g), h), Assoc(tx, ty, mor_tgt(h))),
                Comp(Assoc(fx, fy, mor_src(h)), Par(f, Par(g, h))),
            ),
            "associator naturality fails",
        )

    a = Gen(labels[0])
    check(not decide_equal(Braid(a, a), Id(Tensor(a, a))), "discriminating pair decided equal")
    return check.report()


# ---------------------------------------------------------------------------
# spans


def all_spans(max_size: int):
    for a in range(max_size + 1):
        for j in range(max_size + 1):
            for k in range(max_size + 1):
                for left in all_functions(a, j):
                    for right in all_functions(a, k):
                        yield Span(left, right)


def _pentagon_holds(s, t, u, v) -> bool:
    lhs = vcomp(
        horizontal_compose(assoc_cell(s, t, u), identity_cell(v)),
        assoc_cell(s, compose_span(t, u), v),
        horizontal_compose(identity_cell(s), assoc_cell(t, u, v)),
    )
    rhs = vcomp(assoc_cell(compose_span(s, t), u, v), assoc_cell(s, t, compose_span(u, v)))
    return lhs == rhs


def _triangle_holds(s, t) -> bool:
    lhs = vcomp(
        assoc_cell(s, identity_span(s.cod), t),
        horizontal_compose(identity_cell(s), left_unitor_cell(t)),
    )
    rhs = horizontal_compose(right_unitor_cell(s), identity_cell(t))
    return lhs == rhs


def _adjunction_holds(f: FinFun) -> bool:
    push, pull = span_push(f), span_pull(f)
    unit, counit = adjunction_cells(f)
    tri1 = vcomp(
        invert_cell(left_unitor_cell(push)),
        horizontal_compose(unit, identity_cell(push)),
        assoc_cell(push, pull, push),
        horizontal_compose(identity_cell(push), counit),
        right_unitor_cell(push),
    )
    tri2 = vcomp(
        invert_cell(right_unitor_cell(pull)),
        horizontal_compose(identity_cell(pull), unit),
        invert_cell(assoc_cell(pull, push, pull)),
        horizontal_compose(counit, identity_cell(pull)),
        left_unitor_cell(pull),
    )
    return tri1 == identity_cell(push) and tri2 == identity_cell(pull)


def span_suite(max_size: int = 3, random_size: int = 5, samples: int = 1000, seed: int = 0) -> LawReport:
    check = _Check("span")
    rng = Random(seed)

    spans1 = list(all_spans(1))
    for s in spans1:
        for t in spans1:
            if t.dom != s.cod:
                continue
            for u in spans1:
                if u.dom != t.cod:
                    continue
                for v in spans1:
                    if v.dom != u.cod:
                        continue
                    check(_pentagon_holds(s, t, u, v), "pentagon fails at size 1")

    spans2 = list(all_spans(2))
    for s in spans2:
        for t in spans2:
            if t.dom == s.cod:
                check(_triangle_holds(s, t), "triangle fails at size 2")

    for a in range(max_size + 1):
        for c in range(max_size + 1):
            for f in all_functions(a, c):
                check(_adjunction_holds(f), f"adjunction triangles fail at {f.img}")

    for _ in range(samples):
        size = rng.choice((max_size, random_size))
        s = _random_span(rng, size)
        t = _random_span_from(rng, s.cod, size)
        u = _random_span_from(rng, t.cod, size)
        v = _random_span_from(rng, u.cod, size)
        check(_pentagon_holds(s, t, u, v), f"pentagon fails at random size {size}")
        check(_triangle_holds(s, t), f"triangle fails at random size {size}")
        c1 = _random_pith_cell(rng, s)
        d1 = _random_pith_cell(rng, c1.dst)
        c2 = _random_pith_cell(rng, t)
        d2 = _random_pith_cell(rng, c2.dst)
        lhs = vcomp(horizontal_compose(c1, c2), horizontal_compose(d1, d2))
        rhs = horizontal_compose(vcomp(c1, d1), vcomp(c2, d2))
        check(lhs == rhs, f"interchange fails at random size {size}")
        check(_adjunction_holds(s.left), "adjunction triangles fail on a random leg")
    return check.report()


# ---------------------------------------------------------------------------
# kleisli


def all_lists(size: int, max_len: int):
    for length in range(max_len + 1):
        for labels in itertools.product(range(size), repeat=length):
            yield SList(labels)


def all_khoms(i: int, j: int, max_len: int):
    choices = list(all_lists(j, max_len))
    for lists in itertools.product(choices, repeat=i):
        yield KHom(FinSet(i), FinSet(j), tuple(lists))


def _random_khom(rng: Random, i: int, j: int, max_len: int) -> KHom:
    lists = tuple(
        SList(tuple(rng.randrange(j) for _ in range(rng.randint(0, max_len)))) if j else SList(())
        for _ in range(i)
    )
    return KHom(FinSet(i), FinSet(j), lists)


def _multiset_matches(f: KHom, g: KHom) -> bool:
    comp = k_compose(f, g)
    return all(
        composite_multiset(f, g, j) == underlying_multiset(comp.lists[j])
        for j in range(f.src.size)
    )


def _duality_symmetric(x: KHom) -> bool:
    d = duality(x)
    return all(
        underlying_multiset(d.lists[k]).count(j) == underlying_multiset(x.lists[j]).count(k)
        for j in range(x.src.size)
        for k in range(x.dst.size)
    )


def kleisli_suite(samples: int = 1000, seed: int = 0) -> LawReport:
    check = _Check("kleisli")
    for f in all_khoms(2, 2, 2):
        for g in all_khoms(2, 2, 2):
            check(_multiset_matches(f, g), "composite multiset formula fails at size 2")
    for f in all_khoms(1, 2, 3):
        for g in all_khoms(2, 3, 3):
            check(_multiset_matches(f, g), "composite multiset formula fails at mixed size")
    for x in all_khoms(3, 3, 2):
        check(_duality_symmetric(x), "duality multiplicity symmetry fails at size 3")
    for x in all_khoms(2, 2, 3):
        check(_duality_symmetric(x), "duality multiplicity symmetry fails at size 2")
    rng = Random(seed)
    for _ in range(samples):
        i, j, k = (rng.randint(0, 4) for _ in range(3))
        f = _random_khom(rng, i, j, 5)
        g = _random_khom(rng, j, k, 5)
        check(_multiset_matches(f, g), "composite multiset formula fails at random size")
        check(_duality_symmetric(f), "duality multiplicity symmetry fails at random size")
        check(
            k_compose(k_id(f.src), f) == f and k_compose(f, k_id(f.dst)) == f,
            "strict units fail",
        )
        h = _random_khom(rng, k, rng.randint(0, 4), 4)
        check(
            k_compose(k_compose(f, g), h) == k_compose(f, k_compose(g, h)),
            "strict associativity fails",
        )
    return check.report()


# ---------------------------------------------------------------------------
# the end-to-end evaluator


def _fiber_multiset_oracle(s: Span, k: int):
    out = []
    for a in range(s.apex.size):
        if s.right(a) == k:
            out.append(s.left(a))
    return underlying_multiset(SList(tuple(out)))


def unbias_suite(max_size: int = 3, seed: int = 0, triples_small: int = 40, triples_large: int = 15) -> LawReport:
    check = _Check("unbias")
    sys = lambda_system()
    model = FreeTermModel()

    def assignment_for(dom: FinSet):
        return {j: Gen(f"x{j}") for j in range(dom.size)}

    for s in all_spans(max_size):
        fam = pseudofunctor_on_span(sys, s)
        result = unbias_eval(s, model, assignment_for(s.dom))
        for k in range(s.cod.size):
            oracle = _fiber_multiset_oracle(s, k)
            check(
                underlying_multiset(fam.lists[k]) == oracle,
                f"family multiset differs from the fiber oracle at k={k}",
            )
            flat = normalize_obj(result.objects[k])
            relabeled = Multiset(tuple((f"x{j}", c) for j, c in oracle.items))
            check(
                underlying_multiset(flat) == relabeled,
                f"object normalization differs from the fiber oracle at k={k}",
            )

    # transposition compatibility: the pushforward span transposes onto v
    for a in range(max_size + 1):
        for b in range(max_size + 1):
            for f in all_functions(a, b):
                check(
                    pseudofunctor_on_span(sys, transpose_span(span_push(f))) == lambda_v(f),
                    f"transposition compatibility fails at {f.img}",
                )

    rng = Random(seed)
    triples = []
    for _ in range(triples_small):
        s = _random_span(rng, 2)
        t = _random_span_from(rng, s.cod, 2)
        u = _random_span_from(rng, t.cod, 2)
        triples.append((s, t, u))
    for _ in range(triples_large):
        s = _random_span(rng, max_size)
        t = _random_span_from(rng, s.cod, max_size)
        u = _random_span_from(rng, t.cod, max_size)
        triples.append((s, t, u))
    failures = unbias_coherence_failures(model, assignment_for, triples, rng=Random(seed + 1))
    check.cases += len(triples)
    check.violations.extend(failures)
    return check.report()


def pbc_suite(max_size: int = 3, seed: int = 0) -> LawReport:
    report = check_pbc_laws(lambda_system(), max_size=max_size, seed=seed)
    extra = pseudofunctor_laws(lambda_system(), max_size=max_size, seed=seed)
    return LawReport(
        "pbc",
        report.cases + extra.cases,
        report.violations + extra.violations,
    )


# ---------------------------------------------------------------------------
# registry


_SUITES = {
    "coxeter": lambda max_size, seed: coxeter_suite(
        max_exhaustive=max_size or 6, seed=seed
    ),
    "faithfulness": lambda max_size, seed: faithfulness_suite(
        max_len=max_size or 8, seed=seed
    ),
    "braiding": lambda max_size, seed: braiding_suite(max_total=max_size or 8),
    "coherence": lambda max_size, seed: coherence_suite(seed=seed),
    "span": lambda max_size, seed: span_suite(max_size=max_size or 3, seed=seed),
    "kleisli": lambda max_size, seed: kleisli_suite(seed=seed),
    "pbc": lambda max_size, seed: pbc_suite(max_size=max_size or 3, seed=seed),
    "unbias": lambda max_size, seed: unbias_suite(max_size=max_size or 3, seed=seed),
}


def suite_names() -> tuple[str, ...]:
    return tuple(_SUITES) + ("all",)


def run_suite(name: str, max_size: int | None = None, seed: int = 0) -> list[LawReport]:
    """Run one named suite, or all of them."""
    if name == "all":
        return [fn(max_size, seed) for fn in _SUITES.values()]
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    return [_SUITES[name](max_size, seed)]
