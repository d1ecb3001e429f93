"""The analyses are coordinate-free: results transport along isomorphisms.

These sweeps rewrite corpus fixtures in random unimodular bases, which
forces the splitting solvers (Levi lifting, abelian-ideal complements,
equivariant projections) onto genuinely non-axis-aligned inputs.
"""

from __future__ import annotations

import random

from lierad.corpus import corpus, corpus_expr
from lierad.frattini import (
    classify_subsimple,
    frattini_ideal,
    frattini_index,
    index_class,
    is_frattini_free,
    jacobson_ideal,
    jacobson_index,
    subdirect_components,
    assemble_subdirect_embedding,
    verify_subdirect,
)
from lierad.liealg import change_basis, validate
from lierad.linalg import Matrix, Subspace, qq, rref
from lierad.radicals import levi_subalgebra, nilradical, solvable_radical

SEED = 20260810


def unimodular(rng: random.Random, n: int) -> Matrix:
    rows = [[qq(1) if i == j else qq(0) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = qq(rng.randint(-2, 2))
        for t in range(n):
            rows[j][t] += c * rows[i][t]
    return Matrix(rows)


def transport(space: Subspace, t: Matrix) -> Subspace:
    """Old-coordinate image of a subspace given in the new basis."""
    return Subspace.span(t.rows, [t.apply(v) for v in space.vectors()])


def test_invariants_transport_under_isomorphism():
    rng = random.Random(SEED)
    for expr in ("heis3", "aff1", "ut(2)", "sl2", "sl2_v2", "d1_v2",
                 "direct(sl2,heis3)"):
        original = corpus_expr(expr)
        t = unimodular(rng, original.dim)
        twisted = change_basis(original, t)
        assert validate(twisted).ok, expr
        assert transport(solvable_radical(twisted), t) == \
            solvable_radical(original), expr
        assert transport(nilradical(twisted), t) == nilradical(original), expr
        assert transport(jacobson_ideal(twisted), t) == \
            jacobson_ideal(original), expr
        assert jacobson_index(twisted) == jacobson_index(original), expr
        est_o, est_t = frattini_ideal(original), frattini_ideal(twisted)
        assert est_o.exact == est_t.exact, expr
        assert transport(est_t.lower, t) == est_o.lower, expr
        assert transport(est_t.upper, t) == est_o.upper, expr
        assert frattini_index(twisted) == frattini_index(original), expr
        assert index_class(twisted)[0] == index_class(original)[0], expr
        assert classify_subsimple(twisted).tag == \
            classify_subsimple(original).tag, expr


def test_levi_and_frattini_free_survive_basis_mixing():
    rng = random.Random(SEED + 1)
    for expr in ("sl2_v2", "d1_v2", "ut(2)", "direct(sl2,abelian(2))"):
        original = corpus_expr(expr)
        t = unimodular(rng, original.dim)
        twisted = change_basis(original, t)
        levi = levi_subalgebra(twisted)
        assert levi.levi.dim == levi_subalgebra(original).levi.dim, expr
        res = is_frattini_free(twisted)
        assert res.free, expr
        comps = subdirect_components(twisted)
        algebras, embedding = assemble_subdirect_embedding(comps)
        assert verify_subdirect(algebras, embedding, twisted), expr


def test_change_basis_is_invertible():
    rng = random.Random(SEED + 2)
    h = corpus("heis3")
    t = unimodular(rng, 3)
    red, pivots = rref(t)
    assert pivots == (0, 1, 2)
    back = change_basis(change_basis(h, t), inverse_of(t))
    assert back.c == h.c


def inverse_of(m: Matrix) -> Matrix:
    n = m.rows
    aug = Matrix([list(m.row(i)) + [qq(1) if j == i else qq(0)
                                    for j in range(n)] for i in range(n)])
    red, pivots = rref(aug)
    assert pivots == tuple(range(n))
    return Matrix([red.row(i)[n:] for i in range(n)])
