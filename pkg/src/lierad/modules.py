"""Associative envelopes, invariant-subspace search and module splitting.

The engine behind the Levi construction, the nilradical, decomposability
tests and the Frattini-free decision.  Complete reducibility is decided
operationally: the unital associative envelope of the action must have zero
trace radical (the characteristic-0 Dickson criterion), which needs no
eigenvalue computations and stays inside Q.

A returned submodule is always verified invariant before it is handed back;
completeness of the search ("none found") is only as strong as the
deterministic probe set, which suffices for split modules with rational
eigenvalue separations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .liealg import ContractError, LieAlgebra, bracket, bracket_spaces, is_ideal
from .linalg import (
    Matrix,
    Q0,
    Q1,
    SpanBuilder,
    Subspace,
    matrix_from_flat,
    nullspace_matrix,
    solve,
    span_sum,
)
from .polys import factor_rational_poly, poly_trim


@dataclass(frozen=True)
class Action:
    """Operators on Q^carrier_dim, optionally tied to an acting algebra."""

    carrier_dim: int
    operators: tuple
    source: Optional[LieAlgebra] = None

    def __post_init__(self):
        for op in self.operators:
            if op.rows != self.carrier_dim or op.cols != self.carrier_dim:
                raise ContractError("action operator has wrong shape")
        if self.source is not None:
            if len(self.operators) != self.source.dim:
                raise ContractError("one operator per acting basis element required")
            self._check_bracket_compatibility()

    def _check_bracket_compatibility(self):
        alg = self.source
        ops = self.operators
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                expected = Matrix.zeros(self.carrier_dim, self.carrier_dim)
                for k, coeff in enumerate(alg.c[i][j]):
                    if coeff != 0:
                        expected = expected.add(ops[k].scale(coeff))
                comm = ops[i].mul(ops[j]).sub(ops[j].mul(ops[i]))
                if comm != expected:
                    raise ContractError("operators do not respect the source brackets")


@dataclass(frozen=True)
class Envelope:
    """Basis of the unital associative algebra generated by an action."""

    carrier_dim: int
    basis: tuple


def ad_action(algebra: LieAlgebra) -> Action:
    from .liealg import ad_matrix
    ops = tuple(ad_matrix(algebra, algebra.basis_vector(i)) for i in range(algebra.dim))
    return Action(algebra.dim, ops, source=algebra)


def restricted_ad_action(algebra: LieAlgebra, acting_vectors: Sequence,
                         carrier: Subspace) -> Action:
    """ad of given elements restricted to an invariant subspace, in its basis."""
    m = carrier.dim
    ops = []
    for v in acting_vectors:
        cols = []
        for row in carrier.vectors():
            image = bracket(algebra, v, row)
            coords = carrier.coords_of(image)
            if coords is None:
                raise ContractError("carrier is not invariant under the action")
            cols.append(coords)
        ops.append(Matrix([[cols[j][i] for j in range(m)] for i in range(m)]))
    return Action(m, tuple(ops))


def associative_envelope(action: Action) -> Envelope:
    """Unital span closure of the operators under matrix products."""
    n = action.carrier_dim
    nn = n * n
    builder = SpanBuilder(nn)
    mats: list[Matrix] = []
    for cand in (Matrix.identity(n),) + tuple(action.operators):
        if builder.add(cand.flatten()):
            mats.append(cand)
    gens = [m for m in mats]
    frontier = list(mats)
    while frontier:
        m = frontier.pop()
        for g in gens:
            for prod in (m.mul(g), g.mul(m)):
                if builder.add(prod.flatten()):
                    mats.append(prod)
                    frontier.append(prod)
    return Envelope(n, tuple(mats))


def _span_is_nilpotent(mats: Sequence[Matrix], carrier_dim: int) -> bool:
    """Whether the associative span of the matrices is nilpotent."""
    if not mats:
        return True
    nn = carrier_dim * carrier_dim
    current = Subspace.span(nn, [m.flatten() for m in mats])
    for _ in range(carrier_dim + 1):
        if current.is_zero():
            return True
        builder = SpanBuilder(nn)
        for m in mats:
            for flat in current.vectors():
                w = matrix_from_flat(flat, carrier_dim, carrier_dim)
                builder.add(m.mul(w).flatten())
        nxt = builder.subspace()
        if nxt == current:
            return False
        current = nxt
    return current.is_zero()


def trace_radical(envelope: Envelope) -> Subspace:
    """Radical of the envelope as a subspace in envelope coordinates.

    Solves tr(a * b_k) = 0 over the basis; the result is certified to span a
    nilpotent two-sided ideal before being returned.
    """
    k = len(envelope.basis)
    if k == 0:
        return Subspace.zero(0)
    gram = [[Q0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            t = envelope.basis[i].mul(envelope.basis[j]).trace()
            gram[i][j] = t
            gram[j][i] = t
    ker = nullspace_matrix(Matrix(gram))
    radical = Subspace.span(k, ker.data)
    rad_mats = []
    for coords in radical.vectors():
        m = Matrix.zeros(envelope.carrier_dim, envelope.carrier_dim)
        for c, b in zip(coords, envelope.basis):
            if c != 0:
                m = m.add(b.scale(c))
        rad_mats.append(m)
    if not _span_is_nilpotent(rad_mats, envelope.carrier_dim):
        raise AssertionError("trace radical failed its nilpotency certificate")
    return radical


def is_completely_reducible(action: Action) -> bool:
    return trace_radical(associative_envelope(action)).is_zero()


def minimal_polynomial(m: Matrix) -> list:
    """Monic minimal polynomial, constant coefficient first."""
    n = m.rows
    nn = n * n
    powers = [Matrix.identity(n)]
    builder = SpanBuilder(nn)
    builder.add(powers[0].flatten())
    while True:
        nxt = powers[-1].mul(m)
        if builder.contains(nxt.flatten()):
            system = Matrix([[p.flatten()[t] for p in powers] for t in range(nn)])
            coords = solve(system, nxt.flatten())
            coeffs = [-c for c in coords] + [Q1]
            return poly_trim(coeffs) or [Q1]
        builder.add(nxt.flatten())
        powers.append(nxt)


def _poly_of_matrix(p: Sequence, m: Matrix) -> Matrix:
    acc = Matrix.zeros(m.rows, m.cols)
    for c in reversed(list(p)):
        acc = acc.mul(m)
        if c != 0:
            acc = acc.add(Matrix.identity(m.rows).scale(c))
    return acc


def spin(action: Action, seeds: Sequence) -> Subspace:
    """Smallest subspace containing the seeds invariant under the action."""
    n = action.carrier_dim
    builder = SpanBuilder(n)
    frontier = []
    for s in seeds:
        if builder.add(s):
            frontier.append(builder.rows[-1])
    while frontier:
        v = frontier.pop()
        for op in action.operators:
            image = op.apply(v)
            if builder.add(image):
                frontier.append(builder.rows[-1])
    return builder.subspace()


def _is_invariant(action: Action, space: Subspace) -> bool:
    for op in action.operators:
        for v in space.vectors():
            if not space.contains_vector(op.apply(v)):
                return False
    return True


def find_proper_submodule(action: Action) -> Optional[Subspace]:
    """A proper nonzero invariant subspace, or None if the probe finds none.

    Probes: envelope basis elements and small pairwise combinations (minimal
    polynomial kernels, spun), plus the spin of each carrier basis vector.
    Any returned subspace is verified invariant and proper.
    """
    n = action.carrier_dim
    if n <= 1:
        return None
    envelope = associative_envelope(action)
    probes: list[Matrix] = list(envelope.basis)
    limit = min(len(envelope.basis), 8)
    for i in range(limit):
        for j in range(i + 1, limit):
            a, b = envelope.basis[i], envelope.basis[j]
            probes.append(a.add(b))
            probes.append(a.sub(b))
    candidates = []

    def consider(space: Subspace):
        if 0 < space.dim < n:
            if not _is_invariant(action, space):
                raise AssertionError("probe produced a non-invariant subspace")
            candidates.append(space)

    for probe in probes:
        minpoly = minimal_polynomial(probe)
        _, factors = factor_rational_poly(minpoly)
        if len(factors) <= 1 and len(minpoly) - 1 <= 1:
            continue
        for f in factors:
            kernel = nullspace_matrix(_poly_of_matrix(f, probe))
            if 0 < kernel.rows:
                consider(spin(action, kernel.data))
                for vec in kernel.data:
                    consider(spin(action, [vec]))
    for k in range(n):
        seed = tuple(Q1 if t == k else Q0 for t in range(n))
        consider(spin(action, [seed]))
    if not candidates:
        return None
    return min(candidates, key=lambda s: s.sort_key())


def _restrict_action(action: Action, space: Subspace) -> Action:
    m = space.dim
    ops = []
    for op in action.operators:
        cols = []
        for row in space.vectors():
            coords = space.coords_of(op.apply(row))
            if coords is None:
                raise ContractError("subspace is not invariant")
            cols.append(coords)
        ops.append(Matrix([[cols[j][i] for j in range(m)] for i in range(m)]))
    return Action(m, tuple(ops))


def _embed(space_basis: Matrix, inner: Subspace) -> Subspace:
    vecs = []
    for v in inner.vectors():
        out = [Q0] * space_basis.cols
        for c, row in zip(v, space_basis.data):
            if c != 0:
                for j in range(space_basis.cols):
                    out[j] += c * row[j]
        vecs.append(out)
    return Subspace.span(space_basis.cols, vecs)


def _equivariant_complement(action: Action, sub: Subspace) -> Subspace:
    """Invariant complement of an invariant subspace of a semisimple action.

    Solves for an envelope-equivariant projection onto the subspace; its
    kernel is the complement.
    """
    n = action.carrier_dim
    rows = []
    rhs = []
    # P commutes with every operator
    for op in action.operators:
        for i in range(n):
            for j in range(n):
                row = [Q0] * (n * n)
                for t in range(n):
                    if op.entry(i, t) != 0:
                        row[t * n + j] += op.entry(i, t)
                    if op.entry(t, j) != 0:
                        row[i * n + t] -= op.entry(t, j)
                rows.append(row)
                rhs.append(Q0)
    # P fixes the subspace pointwise
    for w in sub.vectors():
        for i in range(n):
            row = [Q0] * (n * n)
            for t in range(n):
                if w[t] != 0:
                    row[i * n + t] = w[t]
            rows.append(row)
            rhs.append(w[i])
    # columns of P lie in the subspace: kill the complement coordinates
    pivot_set = set(sub.pivots)
    for j in range(n):
        col_conditions = []
        basis_rows = sub.vectors()
        for i in range(n):
            if i in pivot_set:
                continue
            row = [Q0] * (n * n)
            row[i * n + j] = Q1
            for r, p in enumerate(sub.pivots):
                if basis_rows[r][i] != 0:
                    row[p * n + j] -= basis_rows[r][i]
            col_conditions.append(row)
        # a column v is in the subspace iff v - sum(v[p_r] * b_r) vanishes
        # off the pivot coordinates; the rows above express exactly that.
        for row in col_conditions:
            rows.append(row)
            rhs.append(Q0)
    sol = solve(Matrix(rows), rhs)
    if sol is None:
        raise ContractError("no equivariant projection: module is not semisimple")
    proj = matrix_from_flat(sol, n, n)
    complement = Subspace.span(n, nullspace_matrix(proj).data)
    if not _is_invariant(action, complement):
        raise AssertionError("equivariant complement failed invariance check")
    return complement


def decompose_module(action: Action) -> tuple:
    """Split a completely reducible action into irreducible summands."""
    if not is_completely_reducible(action):
        raise ContractError("decompose_module requires a completely reducible action")

    def rec(act: Action, embedding: Matrix) -> list:
        if act.carrier_dim == 0:
            return []
        sub = find_proper_submodule(act)
        if sub is None:
            return [Subspace.span(embedding.cols, embedding.data)]
        comp = _equivariant_complement(act, sub)
        out = []
        for part in (sub, comp):
            part_basis = _embed(embedding, part)
            out.extend(rec(_restrict_action(act, part), part_basis.basis))
        return out

    n = action.carrier_dim
    summands = rec(action, Matrix.identity(n))
    return tuple(sorted(summands, key=lambda s: s.sort_key()))


def split_over_abelian_ideal(algebra: LieAlgebra, x: Subspace) -> Optional[Subspace]:
    """Subalgebra complement M with L = M + X, for an abelian ideal X.

    The closure condition on the correcting map gamma: L/X -> X is linear
    precisely because X is abelian; returns None when inconsistent.
    """
    if not is_ideal(algebra, x):
        raise ContractError("split requires an ideal")
    if not bracket_spaces(algebra, x, x).is_zero():
        raise ContractError("split requires an abelian ideal")
    n = algebra.dim
    if x.is_zero():
        return algebra.full_space()
    pivot_set = set(x.pivots)
    free = [j for j in range(n) if j not in pivot_set]
    m = len(free)
    if m == 0:
        return algebra.zero_space()
    d = x.dim
    xbasis = x.vectors()

    def x_and_free_parts(vec) -> tuple[tuple, tuple]:
        v = list(vec)
        xcoords = [Q0] * d
        for r, p in enumerate(x.pivots):
            c = v[p]
            if c != 0:
                xcoords[r] = c
                row = xbasis[r]
                for t in range(n):
                    if row[t] != 0:
                        v[t] -= c * row[t]
        return tuple(xcoords), tuple(v[j] for j in free)

    w = [algebra.basis_vector(j) for j in free]
    # ad of each w_i on X, in X coordinates
    ad_on_x = [[x.coords_of(bracket(algebra, w[i], xbasis[t])) for t in range(d)]
               for i in range(m)]
    rows = []
    rhs = []
    for i in range(m):
        for j in range(i + 1, m):
            br = bracket(algebra, w[i], w[j])
            dij, cij = x_and_free_parts(br)
            for t in range(d):
                row = [Q0] * (m * d)
                # + ad(w_i) gamma(w_j)
                for s in range(d):
                    coeff = ad_on_x[i][s][t]
                    if coeff != 0:
                        row[j * d + s] += coeff
                # - ad(w_j) gamma(w_i)
                for s in range(d):
                    coeff = ad_on_x[j][s][t]
                    if coeff != 0:
                        row[i * d + s] -= coeff
                # - gamma(c_ij)
                for k in range(m):
                    if cij[k] != 0:
                        row[k * d + t] -= cij[k]
                rows.append(row)
                rhs.append(-dij[t])
    if rows:
        sol = solve(Matrix(rows), rhs)
        if sol is None:
            return None
    else:
        sol = tuple([Q0] * (m * d))
    vecs = []
    for i in range(m):
        vec = list(w[i])
        for s in range(d):
            coeff = sol[i * d + s]
            if coeff != 0:
                for t in range(n):
                    vec[t] += coeff * xbasis[s][t]
        vecs.append(vec)
    result = Subspace.span(n, vecs)
    from .liealg import is_subalgebra
    if not is_subalgebra(algebra, result):
        raise AssertionError("split produced a non-subalgebra")
    if not span_sum(result, x).is_full() or result.dim != m:
        raise AssertionError("split complement has wrong dimension")
    return result
