"""Lie-algebra core: brackets, closures, series, forms, quotients, products."""

from __future__ import annotations

import pytest

from lierad.corpus import corpus, corpus_expr, suite_corpus
from lierad.liealg import (
    ContractError,
    LieAlgebra,
    abelian,
    ad_matrix,
    bracket,
    bracket_spaces,
    center,
    centralizer,
    derivation_algebra,
    derived_series,
    direct_product,
    ideal_closure,
    ideal_closure_series,
    is_characteristic,
    is_ideal,
    is_subalgebra,
    killing_form,
    lower_central_series,
    nilpotency_index,
    operator_semidirect,
    quotient,
    semidirect_product,
    solvability_index,
    stable_derived_term,
    stable_lower_central_term,
    subalgebra_closure,
    validate,
)
from lierad.linalg import Matrix, Subspace, qq, span_sum


def span(n, *vectors):
    return Subspace.span(n, [[qq(x) for x in v] for v in vectors])


E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def test_validate_corpus_fixtures():
    assert validate(corpus("heis3")).ok
    assert validate(abelian(4)).ok


def test_validate_reports_antisymmetry_violation():
    z = [0, 0]
    bad = LieAlgebra(2, ["a", "b"], [[z, [1, 0]], [[1, 0], z]])
    report = validate(bad)
    assert not report.ok
    assert (0, 1) in report.antisymmetry_violations


def test_validate_reports_jacobi_violation():
    # [b1,b2] = b2, [b1,b3] = b3, [b2,b3] = b1 breaks Jacobi on (0,1,2)
    z = [0, 0, 0]
    c = [[z, [0, 1, 0], [0, 0, 1]],
         [[0, -1, 0], z, [1, 0, 0]],
         [[0, 0, -1], [-1, 0, 0], z]]
    report = validate(LieAlgebra(3, ["a", "b", "c"], c))
    assert not report.ok
    assert (0, 1, 2) in report.jacobi_violations


def test_bracket_heis3():
    h = corpus("heis3")
    assert bracket(h, E1, E2) == (qq(0), qq(0), qq(1))
    assert bracket(h, E1, E1) == (qq(0),) * 3


def test_bracket_spaces_sl2_is_perfect():
    s = corpus("sl2")
    assert bracket_spaces(s, s.full_space(), s.full_space()) == s.full_space()


def test_subalgebra_closure_heis3():
    h = corpus("heis3")
    assert subalgebra_closure(h, span(3, E1, E2)) == h.full_space()
    assert subalgebra_closure(h, Subspace.zero(3)).is_zero()


def test_ideal_closure_heis3_line():
    h = corpus("heis3")
    assert ideal_closure(h, span(3, E1)) == span(3, E1, E3)


def test_center_fixtures():
    assert center(corpus("heis3")) == span(3, E3)
    assert center(abelian(4)) == Subspace.full(4)
    assert center(corpus("sl2")).is_zero()


def test_centralizer_equals_center_on_full_space():
    h = corpus("heis3")
    assert centralizer(h, h.full_space()) == center(h)


def test_derived_series_fixtures():
    h = corpus("heis3")
    series = derived_series(h)
    assert [t.dim for t in series.terms] == [3, 1, 0]
    assert solvability_index(h) == 2
    assert solvability_index(corpus("sl2")) is None
    assert solvability_index(corpus("ut", 3)) == 3


def test_lower_central_series_fixtures():
    h = corpus("heis3")
    assert nilpotency_index(h) == 3  # heis3, <z>, 0 in the paper's numbering
    assert nilpotency_index(corpus("aff1")) is None


def test_stable_terms():
    assert stable_derived_term(corpus("heis3")).is_zero()
    assert stable_lower_central_term(corpus("heis3")).is_zero()
    ut3 = corpus("ut", 3)
    sut_part = span(6, (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0))
    assert stable_lower_central_term(ut3) == sut_part
    v2 = corpus("sl2_v2")
    assert stable_derived_term(v2) == v2.full_space()


def test_killing_form_fixtures():
    s = corpus("sl2")  # basis (e, f, h)
    kappa = killing_form(s)
    assert kappa.entry(2, 2) == qq(8)
    assert kappa.entry(0, 1) == qq(4)
    from lierad.liealg import is_killing_nondegenerate
    assert is_killing_nondegenerate(s)
    assert killing_form(abelian(3)).is_zero()
    assert killing_form(corpus("heis3")).is_zero()


def test_derivation_algebra_fixtures():
    s = corpus("sl2")
    ders = derivation_algebra(s)
    assert ders.dim == 3
    ad_span = Subspace.span(9, [ad_matrix(s, s.basis_vector(i)).flatten()
                                for i in range(3)])
    assert ders == ad_span
    assert derivation_algebra(abelian(3)) == Subspace.full(9)
    assert derivation_algebra(corpus("heis3")).dim == 6


def test_is_characteristic_fixtures():
    h = corpus("heis3")
    assert is_characteristic(h, span(3, E3))
    assert is_characteristic(h, h.full_space())
    with pytest.raises(ContractError):
        is_characteristic(h, span(3, E1))  # not an ideal
    # span{y, z} is an ideal, but the derivation exchanging x and y moves it
    assert is_ideal(h, span(3, E2, E3))
    assert not is_characteristic(h, span(3, E2, E3))


def test_subalgebra_and_ideal_predicates():
    h = corpus("heis3")
    assert is_ideal(h, span(3, E1, E3))
    s = corpus("sl2")
    e_line = span(3, E1)
    assert is_subalgebra(s, e_line)
    assert not is_ideal(s, e_line)
    assert is_subalgebra(h, Subspace.zero(3))
    assert is_ideal(h, Subspace.zero(3))


def test_quotient_heis3_by_center():
    h = corpus("heis3")
    q = quotient(h, span(3, E3))
    assert q.quotient.dim == 2
    from lierad.liealg import is_abelian
    assert is_abelian(q.quotient)
    # projection o section = identity
    assert q.projection.mul(q.section) == Matrix.identity(2)


def test_quotient_by_zero_is_isomorphic_copy():
    h = corpus("heis3")
    q = quotient(h, Subspace.zero(3))
    assert q.quotient.dim == 3
    assert q.quotient.c == h.c


def test_quotient_is_homomorphism_on_basis_pairs():
    ut3 = corpus("ut", 3)
    ideal = bracket_spaces(ut3, ut3.full_space(), ut3.full_space())
    q = quotient(ut3, ideal)
    for i in range(ut3.dim):
        for j in range(ut3.dim):
            lhs = q.projection.apply(bracket(ut3, ut3.basis_vector(i),
                                             ut3.basis_vector(j)))
            rhs = bracket(q.quotient, q.projection.apply(ut3.basis_vector(i)),
                          q.projection.apply(ut3.basis_vector(j)))
            assert lhs == rhs


def test_quotient_ut2_by_nilradical():
    ut2 = corpus("ut", 2)  # basis E11, E12, E22
    nil = span(3, (1, 0, 1), (0, 1, 0))
    q = quotient(ut2, nil)
    assert q.quotient.dim == 1
    from lierad.liealg import is_abelian
    assert is_abelian(q.quotient)


def test_quotient_requires_an_ideal():
    s = corpus("sl2")
    with pytest.raises(ContractError):
        quotient(s, span(3, E1))


def test_operator_semidirect_builds_sl2_v2():
    v2 = corpus("sl2_v2")
    assert v2.dim == 5
    assert validate(v2).ok
    # [h, e] = 2e inside the operator part
    assert bracket(v2, (0, 0, 1, 0, 0), (1, 0, 0, 0, 0)) == \
        (qq(2), qq(0), qq(0), qq(0), qq(0))


def test_direct_product_of_sl2s():
    ss = corpus("sl2sl2")
    assert ss.dim == 6
    assert center(ss).is_zero()
    assert validate(ss).ok


def test_semidirect_with_zero_action_is_direct():
    s = corpus("sl2")
    a2 = abelian(2)
    zero_ops = [Matrix.zeros(2, 2)] * 3
    semi = semidirect_product(s, a2, zero_ops)
    assert semi.c == direct_product([s, a2]).c


def test_semidirect_rejects_bad_action():
    s = corpus("sl2")
    bad = [Matrix.identity(2)] * 3  # not a homomorphism of sl2
    with pytest.raises(ContractError):
        semidirect_product(s, abelian(2), bad)


def test_ideal_closure_series_heis3_depths():
    h = corpus("heis3")
    terms, depth = ideal_closure_series(h, span(3, E1))
    assert depth == 2
    assert [t.dim for t in terms] == [3, 2, 1]
    ideal = span(3, E1, E3)
    _, depth = ideal_closure_series(h, ideal)
    assert depth == 1
    _, full_depth = ideal_closure_series(h, h.full_space())
    assert full_depth == 0


def test_ideal_closure_series_detects_non_subideals():
    s = corpus("sl2")
    terms, depth = ideal_closure_series(s, span(3, E1))
    assert depth is None
    assert terms[-1] == s.full_space()


def test_diagonal_sl2_in_sl2sl2_is_not_a_subideal():
    # semisimple subideals are ideals; the diagonal is semisimple and not an
    # ideal, so the closure series must stall at the whole algebra
    ss = corpus("sl2sl2")
    diag = span(6, (1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), (0, 0, 1, 0, 0, 1))
    assert is_subalgebra(ss, diag)
    assert not is_ideal(ss, diag)
    _, depth = ideal_closure_series(ss, diag)
    assert depth is None
    factor = span(6, E1 + (0, 0, 0), E2 + (0, 0, 0), E3 + (0, 0, 0))
    assert is_ideal(ss, factor)
    _, depth = ideal_closure_series(ss, factor)
    assert depth == 1


def test_corpus_wide_core_invariants():
    for name, alg in suite_corpus():
        assert validate(alg).ok, name
        ders = derivation_algebra(alg)
        for i in range(alg.dim):
            assert ders.contains_vector(
                ad_matrix(alg, alg.basis_vector(i)).flatten()), name
        z = center(alg)
        assert is_characteristic(alg, z), name
        assert stable_lower_central_term(alg).contains(
            stable_derived_term(alg)), name


def test_perfect_ideals_are_characteristic():
    # [J,J] = J for an ideal J forces invariance under all derivations
    for expr in ("sl2sl2", "direct(sl2,abelian(2))", "direct(sl2,heis3)"):
        alg = corpus_expr(expr)
        probes = []
        for i in range(alg.dim):
            probes.append(ideal_closure(alg, span_sum(
                Subspace.zero(alg.dim),
                Subspace.span(alg.dim, [alg.basis_vector(i)]))))
        for ideal in probes:
            if bracket_spaces(alg, ideal, ideal) == ideal and not ideal.is_zero():
                assert is_characteristic(alg, ideal), expr


def test_projected_derived_series_matches_quotient_series():
    for name in ("heis3", "ut(3)"):
        alg = corpus_expr(name)
        ideal = center(alg)
        if ideal.is_zero():
            continue
        q = quotient(alg, ideal)
        pushed = [q.push(t) for t in derived_series(alg).terms]
        quotient_terms = list(derived_series(q.quotient).terms)
        for k, term in enumerate(quotient_terms):
            assert pushed[min(k, len(pushed) - 1)] == term, name
