"""Classical radicals and the preradical combinators."""

from __future__ import annotations

import pytest

from lierad.corpus import corpus, corpus_expr, suite_corpus
from lierad.frattini import jacobson_ideal
from lierad.liealg import (
    ContractError,
    bracket_spaces,
    center,
    direct_product,
    ideal_closure,
    is_ideal,
    is_killing_nondegenerate,
    quotient,
    restrict_to_subalgebra,
    stable_derived_term,
)
from lierad.linalg import Subspace, qq, span_sum
from lierad.radicals import (
    DERIVED_MAP,
    PreradicalSpec,
    REGISTRY,
    convolution,
    convolution_closure,
    decompose_semisimple,
    is_absorbing,
    largest_semisimple_ideal,
    levi_radical,
    levi_subalgebra,
    nilradical,
    solvable_radical,
    superposition_closure,
    vasilescu_radical,
)


def span(n, *vectors):
    return Subspace.span(n, [[qq(x) for x in v] for v in vectors])


def test_solvable_radical_fixtures():
    assert solvable_radical(corpus("sl2")).is_zero()
    ut3 = corpus("ut", 3)
    assert solvable_radical(ut3) == ut3.full_space()
    assert solvable_radical(corpus("sl2_v2")) == \
        span(5, (0, 0, 0, 1, 0), (0, 0, 0, 0, 1))


def test_nilradical_fixtures():
    h = corpus("heis3")
    assert nilradical(h) == h.full_space()
    # ut(2) basis (E11, E12, E22): scalars plus the strictly-upper line
    assert nilradical(corpus("ut", 2)) == span(3, (1, 0, 1), (0, 1, 0))
    assert nilradical(corpus("sl2_v2")) == \
        span(5, (0, 0, 0, 1, 0), (0, 0, 0, 0, 1))


def test_levi_fixtures():
    v2 = corpus("sl2_v2")
    levi = levi_subalgebra(v2)
    assert levi.levi == span(5, (1, 0, 0, 0, 0), (0, 1, 0, 0, 0),
                             (0, 0, 1, 0, 0))
    assert levi.radical == span(5, (0, 0, 0, 1, 0), (0, 0, 0, 0, 1))
    assert levi_subalgebra(corpus("ut", 3)).levi.is_zero()
    s = corpus("sl2")
    assert levi_subalgebra(s).levi == s.full_space()


def test_levi_complement_is_conjugate_invariant_certificate():
    # the construction lifts along the derived series of the radical;
    # certificates (subalgebra, nondegenerate, spanning) run inside
    for name, alg in suite_corpus():
        levi = levi_subalgebra(alg)
        assert levi.levi.dim + levi.radical.dim == alg.dim, name


def test_decompose_semisimple_fixtures():
    s = corpus("sl2")
    assert decompose_semisimple(s) == (s.full_space(),)
    parts = decompose_semisimple(corpus("sl2sl2"))
    assert [p.dim for p in parts] == [3, 3]
    with pytest.raises(ContractError):
        decompose_semisimple(corpus("heis3"))


def test_largest_semisimple_ideal_fixtures():
    assert largest_semisimple_ideal(corpus("sl2_v2")).is_zero()
    mixed = corpus_expr("direct(sl2,heis3)")
    expected = span(6, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0),
                    (0, 0, 1, 0, 0, 0))
    assert largest_semisimple_ideal(mixed) == expected
    s = corpus("sl2")
    assert largest_semisimple_ideal(s) == s.full_space()


def test_levi_radical_fixtures():
    for name in ("aff1", "heis3", "ut(2)", "ut(3)", "sut(4)", "abelian(3)"):
        assert levi_radical(corpus_expr(name)).is_zero(), name
    v2 = corpus("sl2_v2")
    assert levi_radical(v2) == v2.full_space()
    mixed = corpus_expr("direct(sl2,abelian(2))")
    assert levi_radical(mixed) == span(5, (1, 0, 0, 0, 0), (0, 1, 0, 0, 0),
                                       (0, 0, 1, 0, 0))


def test_vasilescu_equals_rad():
    for name, alg in suite_corpus():
        assert vasilescu_radical(alg) == solvable_radical(alg), name


def test_superposition_closure_of_derived_map():
    ut3 = corpus("ut", 3)
    fix, index = superposition_closure(DERIVED_MAP, ut3)
    assert fix.is_zero() and index == 3
    s = corpus("sl2")
    fix, index = superposition_closure(DERIVED_MAP, s)
    assert fix == s.full_space() and index == 1
    from lierad.liealg import abelian
    zero_alg = abelian(0)
    fix, index = superposition_closure(DERIVED_MAP, zero_alg)
    assert fix.is_zero() and index == 0


def test_superposition_closure_rejects_non_ideal_evaluators():
    bad = PreradicalSpec("bad", lambda alg: span(
        alg.dim, alg.basis_vector(0)) if alg.dim else alg.zero_space())
    with pytest.raises(ContractError):
        superposition_closure(bad, corpus("sl2"))


def test_convolution_fixtures():
    h = corpus("heis3")
    k = REGISTRY["center"]
    assert convolution(k, k, h) == h.full_space()
    whole = PreradicalSpec("whole", lambda alg: alg.full_space())
    anything = REGISTRY["rad"]
    assert convolution(anything, whole, h) == h.full_space()
    s = corpus("sl2")
    assert convolution(k, k, s).is_zero()


def test_convolution_closure_fixtures():
    k = REGISTRY["center"]
    h = corpus("heis3")
    fix, index = convolution_closure(k, h)
    assert fix == h.full_space() and index == 2
    fix, index = convolution_closure(k, corpus("aff1"))
    assert fix.is_zero() and index == 1
    fix, index = convolution_closure(k, corpus("sl2"))
    assert fix.is_zero() and index == 1


def test_is_absorbing_fixtures():
    h = corpus("heis3")
    z = span(3, (0, 0, 1))
    assert not is_absorbing(REGISTRY["center"], h, z)
    assert is_absorbing(REGISTRY["jacobson"], h, z)
    zero_map = PreradicalSpec("zero", lambda alg: alg.zero_space())
    assert is_absorbing(zero_map, h, h.zero_space())
    with pytest.raises(ContractError):
        is_absorbing(REGISTRY["center"], h, span(3, (1, 0, 0)))


def test_radical_image_of_radical_algebra_is_radical():
    # quotients of levi-radical-radical algebras stay radical
    v2 = corpus("sl2_v2")
    assert levi_radical(v2) == v2.full_space()
    q = quotient(v2, solvable_radical(v2))
    assert levi_radical(q.quotient) == q.quotient.full_space()


def test_jacobson_is_smallest_absorbing_among_probed_ideals():
    spec = REGISTRY["jacobson"]
    for name in ("heis3", "aff1", "ut(2)", "ut(3)"):
        alg = corpus_expr(name)
        k = jacobson_ideal(alg)
        assert is_absorbing(spec, alg, k), name
        probes = [ideal_closure(alg, Subspace.span(alg.dim,
                                                   [alg.basis_vector(i)]))
                  for i in range(alg.dim)]
        probes.append(alg.full_space())
        probes.append(alg.zero_space())
        for ideal in probes:
            if is_ideal(alg, ideal) and is_absorbing(spec, alg, ideal):
                assert ideal.contains(k), name


def test_rad_semisimplicity_criterion():
    # rad(L) = 0 iff the Killing form is nondegenerate, corpus-wide
    for name, alg in suite_corpus():
        assert solvable_radical(alg).is_zero() == \
            is_killing_nondegenerate(alg), name


def test_direct_product_splitting_of_radicals():
    pairs = [("sl2", "heis3"), ("aff1", "abelian(2)"), ("ut(2)", "sl2")]
    for left, right in pairs:
        a, b = corpus_expr(left), corpus_expr(right)
        product = direct_product([a, b])
        total = product.dim

        def embed(space, offset):
            vecs = []
            for v in space.vectors():
                out = [qq(0)] * total
                for j, x in enumerate(v):
                    out[offset + j] = x
                vecs.append(out)
            return Subspace.span(total, vecs)

        for fn in (solvable_radical, nilradical, center, levi_radical):
            assert fn(product) == span_sum(embed(fn(a), 0),
                                           embed(fn(b), a.dim))


def test_registry_names_are_total_on_the_corpus():
    for name, alg in suite_corpus():
        for rname, spec in REGISTRY.items():
            value = spec.evaluate(alg)
            assert is_ideal(alg, value), (name, rname)


def test_restriction_roundtrip_inside_superposition():
    # restricting to the stable derived term and recomputing is stable
    mixed = corpus_expr("direct(sl2,abelian(2))")
    stable = stable_derived_term(mixed)
    sub, basis = restrict_to_subalgebra(mixed, stable)
    assert stable_derived_term(sub) == sub.full_space()
    assert bracket_spaces(sub, sub.full_space(), sub.full_space()) == \
        sub.full_space()
