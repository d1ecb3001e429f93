"""Lie algebras over Q as structure-constant tensors.

A ``LieAlgebra`` is a dimension, basis labels and the tensor c with
c[i][j] = coordinates of [b_i, b_j].  All operations are pure functions on
immutable values: brackets, closures, centers, the two canonical series,
the Killing form, derivations, quotients and product constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .linalg import (
    Matrix,
    Q0,
    Q1,
    Subspace,
    matrix_from_flat,
    nullspace_matrix,
    nullspace_sparse,
    qq,
    rank,
    solve,
    span_sum,
)


class ContractError(ValueError):
    """A documented precondition of an operation was violated."""


class LieAlgebra:
    """Structure-constant presentation of a finite-dimensional Lie algebra."""

    __slots__ = ("dim", "labels", "c", "_hash")

    def __init__(self, dim: int, labels: Sequence[str], c):
        if len(labels) != dim:
            raise ValueError("label count does not match dimension")
        tensor = tuple(
            tuple(tuple(qq(x) for x in c[i][j]) for j in range(dim))
            for i in range(dim)
        )
        for i in range(dim):
            if len(c[i]) != dim:
                raise ValueError("structure tensor is not dim x dim")
            for j in range(dim):
                if len(tensor[i][j]) != dim:
                    raise ValueError("bracket coordinate vector has wrong length")
        self.dim = dim
        self.labels = tuple(str(x) for x in labels)
        self.c = tensor
        self._hash = None

    def __eq__(self, other) -> bool:
        return (isinstance(other, LieAlgebra) and self.dim == other.dim
                and self.c == other.c)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, self.c))
        return self._hash

    def __repr__(self) -> str:
        return "LieAlgebra(dim=%d, labels=%r)" % (self.dim, list(self.labels))

    def basis_vector(self, i: int) -> tuple:
        return tuple(Q1 if j == i else Q0 for j in range(self.dim))

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.dim)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    antisymmetry_violations: tuple
    jacobi_violations: tuple


@dataclass(frozen=True)
class QuotientData:
    """Quotient algebra together with the projection and a linear section."""

    quotient: LieAlgebra
    projection: Matrix
    section: Matrix

    def push(self, space: Subspace) -> Subspace:
        vecs = [self.projection.apply(v) for v in space.vectors()]
        return Subspace.span(self.quotient.dim, vecs)

    def pull(self, space: Subspace) -> Subspace:
        """Preimage of a subspace of the quotient."""
        kernel = nullspace_matrix(self.projection)
        vecs = [self.section.apply(v) for v in space.vectors()]
        vecs.extend(kernel.data)
        return Subspace.span(self.projection.cols, vecs)


@dataclass(frozen=True)
class SeriesResult:
    """Decreasing subspace series, listed until its first repetition."""

    terms: tuple
    stable_index: int

    def stable_term(self) -> Subspace:
        return self.terms[self.stable_index]

    def reaches_zero(self) -> bool:
        return self.terms[self.stable_index].is_zero()


def validate(algebra: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity, listing every violation."""
    n = algebra.dim
    c = algebra.c
    anti = []
    for i in range(n):
        for j in range(i, n):
            lhs = c[i][j]
            rhs = c[j][i]
            if any(a != -b for a, b in zip(lhs, rhs)):
                anti.append((i, j))
    jac = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = [Q0] * n
                for (a, b, d) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = c[b][d]
                    for m, coeff in enumerate(inner):
                        if coeff != 0:
                            outer = c[a][m]
                            for t in range(n):
                                if outer[t] != 0:
                                    total[t] += coeff * outer[t]
                if any(x != 0 for x in total):
                    jac.append((i, j, k))
    return ValidationReport(not anti and not jac, tuple(anti), tuple(jac))


def bracket(algebra: LieAlgebra, u: Sequence, v: Sequence) -> tuple:
    n = algebra.dim
    if len(u) != n or len(v) != n:
        raise ValueError("vector length does not match algebra dimension")
    out = [Q0] * n
    c = algebra.c
    for i, a in enumerate(u):
        if a == 0:
            continue
        ci = c[i]
        for j, b in enumerate(v):
            if b == 0:
                continue
            coeffs = ci[j]
            ab = a * b
            for k, x in enumerate(coeffs):
                if x != 0:
                    out[k] += ab * x
    return tuple(out)


def ad_matrix(algebra: LieAlgebra, v: Sequence) -> Matrix:
    """Matrix of ad(v): w -> [v, w] in the defining basis."""
    n = algebra.dim
    cols = [bracket(algebra, v, algebra.basis_vector(j)) for j in range(n)]
    return Matrix([[cols[j][i] for j in range(n)] for i in range(n)])


def bracket_spaces(algebra: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    vecs = []
    for x in u.vectors():
        for y in v.vectors():
            vecs.append(bracket(algebra, x, y))
    return Subspace.span(algebra.dim, vecs)


def subalgebra_closure(algebra: LieAlgebra, seed: Subspace) -> Subspace:
    current = seed
    while True:
        grown = span_sum(current, bracket_spaces(algebra, current, current))
        if grown == current:
            return current
        current = grown


def ideal_closure(algebra: LieAlgebra, seed: Subspace) -> Subspace:
    current = seed
    full = algebra.full_space()
    while True:
        grown = span_sum(current, bracket_spaces(algebra, full, current))
        if grown == current:
            return current
        current = grown


def centralizer(algebra: LieAlgebra, space: Subspace) -> Subspace:
    """{x : [x, U] = 0}, via the stacked linear system."""
    n = algebra.dim
    rows = []
    for u in space.vectors():
        # condition on x: bracket(x, u) = 0; row block M with M[k][i] = [b_i, u]_k
        cols = [bracket(algebra, algebra.basis_vector(i), u) for i in range(n)]
        for k in range(n):
            rows.append([cols[i][k] for i in range(n)])
    if not rows:
        return algebra.full_space()
    ker = nullspace_matrix(Matrix(rows))
    return Subspace.span(n, ker.data)


@lru_cache(maxsize=None)
def center(algebra: LieAlgebra) -> Subspace:
    return centralizer(algebra, algebra.full_space())


def _series(algebra: LieAlgebra, step) -> SeriesResult:
    terms = [algebra.full_space()]
    while True:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return SeriesResult(tuple(terms), len(terms) - 1)
        terms.append(nxt)


@lru_cache(maxsize=None)
def derived_series(algebra: LieAlgebra) -> SeriesResult:
    return _series(algebra, lambda t: bracket_spaces(algebra, t, t))


@lru_cache(maxsize=None)
def lower_central_series(algebra: LieAlgebra) -> SeriesResult:
    full = algebra.full_space()
    return _series(algebra, lambda t: bracket_spaces(algebra, full, t))


def solvability_index(algebra: LieAlgebra) -> Optional[int]:
    """Least n with the n-th derived term zero, None if never reached."""
    series = derived_series(algebra)
    if not series.reaches_zero():
        return None
    return series.stable_index


def nilpotency_index(algebra: LieAlgebra) -> Optional[int]:
    """Least n (1-based, first term = algebra) with n-th lower-central term 0."""
    series = lower_central_series(algebra)
    if not series.reaches_zero():
        return None
    return series.stable_index + 1


def is_solvable(algebra: LieAlgebra) -> bool:
    return solvability_index(algebra) is not None


def is_nilpotent(algebra: LieAlgebra) -> bool:
    return nilpotency_index(algebra) is not None


def is_abelian(algebra: LieAlgebra) -> bool:
    return all(x == 0 for ci in algebra.c for cij in ci for x in cij)


def stable_derived_term(algebra: LieAlgebra) -> Subspace:
    return derived_series(algebra).stable_term()


def stable_lower_central_term(algebra: LieAlgebra) -> Subspace:
    return lower_central_series(algebra).stable_term()


@lru_cache(maxsize=None)
def killing_form(algebra: LieAlgebra) -> Matrix:
    n = algebra.dim
    ads = [ad_matrix(algebra, algebra.basis_vector(i)) for i in range(n)]
    out = [[Q0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = ads[i].mul(ads[j]).trace()
            out[i][j] = t
            out[j][i] = t
    return Matrix(out)


def killing_rank(algebra: LieAlgebra) -> int:
    return rank(killing_form(algebra))


def is_killing_nondegenerate(algebra: LieAlgebra) -> bool:
    return killing_rank(algebra) == algebra.dim


@lru_cache(maxsize=None)
def derivation_algebra(algebra: LieAlgebra) -> Subspace:
    """All derivations, as a subspace of operator space Q^(dim*dim).

    Operators are flattened row-major; the Leibniz rule on every basis pair
    is one block of linear conditions on the unknown matrix.
    """
    n = algebra.dim
    if n == 0:
        return Subspace.zero(0)
    rows = []
    c = algebra.c
    for i in range(n):
        for j in range(i + 1, n):
            # D([bi,bj]) - [D bi, bj] - [bi, D bj] = 0, one row per output k
            for k in range(n):
                row: dict = {}
                # D([bi,bj])_k = sum_m c[i][j][m] * D[k][m]
                for m in range(n):
                    if c[i][j][m] != 0:
                        row[k * n + m] = row.get(k * n + m, Q0) + c[i][j][m]
                # [D bi, bj]_k = sum_m D[m][i] * c[m][j][k]
                for m in range(n):
                    if c[m][j][k] != 0:
                        row[m * n + i] = row.get(m * n + i, Q0) - c[m][j][k]
                # [bi, D bj]_k = sum_m D[m][j] * c[i][m][k]
                for m in range(n):
                    if c[i][m][k] != 0:
                        row[m * n + j] = row.get(m * n + j, Q0) - c[i][m][k]
                if row:
                    rows.append(row)
    if not rows:
        return Subspace.full(n * n)
    ker = nullspace_sparse(rows, n * n)
    return Subspace.span(n * n, ker.data)


def is_subalgebra(algebra: LieAlgebra, space: Subspace) -> bool:
    return space.contains(bracket_spaces(algebra, space, space))


def is_ideal(algebra: LieAlgebra, space: Subspace) -> bool:
    return space.contains(bracket_spaces(algebra, algebra.full_space(), space))


def is_characteristic(algebra: LieAlgebra, ideal: Subspace) -> bool:
    """True iff the ideal is invariant under every derivation."""
    if not is_ideal(algebra, ideal):
        raise ContractError("is_characteristic requires an ideal")
    n = algebra.dim
    for flat in derivation_algebra(algebra).vectors():
        op = matrix_from_flat(flat, n, n)
        for v in ideal.vectors():
            if not ideal.contains_vector(op.apply(v)):
                return False
    return True


def quotient(algebra: LieAlgebra, ideal: Subspace) -> QuotientData:
    """Quotient by an ideal; basis = complement of the ideal's pivot columns."""
    if not is_ideal(algebra, ideal):
        raise ContractError("quotient requires an ideal")
    n = algebra.dim
    pivot_set = set(ideal.pivots)
    free = [j for j in range(n) if j not in pivot_set]
    m = len(free)
    # section: j-th quotient basis vector -> e_{free[j]}
    section = Matrix([[Q1 if free[j] == i else Q0 for j in range(m)] for i in range(n)])

    def project(vec: Sequence) -> tuple:
        v = [qq(x) for x in vec]
        for r, p in enumerate(ideal.pivots):
            coeff = v[p]
            if coeff != 0:
                brow = ideal.basis.row(r)
                for t in range(n):
                    if brow[t] != 0:
                        v[t] -= coeff * brow[t]
        return tuple(v[j] for j in free)

    projection = Matrix([
        [project(algebra.basis_vector(i))[k] for i in range(n)] for k in range(m)
    ]) if m else Matrix.zeros(0, n)
    c = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            br = bracket(algebra, algebra.basis_vector(free[i]),
                         algebra.basis_vector(free[j]))
            c[i][j] = project(br)
    labels = [algebra.labels[j] + "~" for j in free]
    return QuotientData(LieAlgebra(m, labels, c), projection, section)


def restrict_to_subalgebra(algebra: LieAlgebra, space: Subspace) -> tuple[LieAlgebra, Matrix]:
    """The algebra structure on a subalgebra, plus its basis (rows) in L.

    Subspaces of the restriction embed back via the returned basis matrix.
    """
    if not is_subalgebra(algebra, space):
        raise ContractError("restriction requires a subalgebra")
    basis = space.basis
    m = space.dim
    c = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            br = bracket(algebra, basis.row(i), basis.row(j))
            coords = space.coords_of(br)
            if coords is None:
                raise ContractError("bracket left the subspace")
            c[i][j] = coords
    labels = ["s%d" % i for i in range(m)]
    return LieAlgebra(m, labels, c), basis


def embed_subspace(sub_basis: Matrix, space: Subspace) -> Subspace:
    """Map a subspace in restricted coordinates back into the ambient space."""
    vecs = []
    for v in space.vectors():
        out = [Q0] * sub_basis.cols
        for coeff, row in zip(v, sub_basis.data):
            if coeff != 0:
                for j in range(sub_basis.cols):
                    out[j] += coeff * row[j]
        vecs.append(out)
    return Subspace.span(sub_basis.cols, vecs)


def ideal_closure_series(algebra: LieAlgebra, space: Subspace):
    """Descending ideal-closure series J^0 = L, J^{k+1} = Id_{J^k}(S).

    Returns (terms, depth) where depth is the least n with J^n = S when the
    series reaches S, else None (S is not a subideal).
    """
    if not is_subalgebra(algebra, space):
        raise ContractError("subideal test requires a subalgebra")
    terms = [algebra.full_space()]
    current_alg, current_basis = algebra, Matrix.identity(algebra.dim)
    while True:
        if terms[-1] == space:
            return tuple(terms), len(terms) - 1
        # coordinates of the seed inside the current term
        seed_vecs = []
        for v in space.vectors():
            coords = Subspace.span(algebra.dim, current_basis.data).coords_of(v)
            seed_vecs.append(coords)
        seed = Subspace.span(current_alg.dim, seed_vecs)
        closed = ideal_closure(current_alg, seed)
        nxt = embed_subspace(current_basis, closed)
        if nxt == terms[-1]:
            return tuple(terms), None
        terms.append(nxt)
        current_alg, current_basis = restrict_to_subalgebra(algebra, nxt)


def direct_product(algebras: Sequence[LieAlgebra]) -> LieAlgebra:
    dims = [a.dim for a in algebras]
    n = sum(dims)
    offsets = []
    off = 0
    for d in dims:
        offsets.append(off)
        off += d
    c = [[[Q0] * n for _ in range(n)] for _ in range(n)]
    labels = []
    for t, alg in enumerate(algebras):
        o = offsets[t]
        labels.extend("%s%d" % (lab, t + 1) for lab in alg.labels)
        for i in range(alg.dim):
            for j in range(alg.dim):
                for k, x in enumerate(alg.c[i][j]):
                    c[o + i][o + j][o + k] = x
    return LieAlgebra(n, labels, c)


def _is_derivation_of(algebra: LieAlgebra, op: Matrix) -> bool:
    n = algebra.dim
    for i in range(n):
        ei = algebra.basis_vector(i)
        for j in range(i + 1, n):
            ej = algebra.basis_vector(j)
            lhs = op.apply(bracket(algebra, ei, ej))
            rhs1 = bracket(algebra, op.apply(ei), ej)
            rhs2 = bracket(algebra, ei, op.apply(ej))
            if any(a != b + c for a, b, c in zip(lhs, rhs1, rhs2)):
                return False
    return True


def semidirect_product(l1: LieAlgebra, l0: LieAlgebra,
                       phi: Sequence[Matrix]) -> LieAlgebra:
    """Semidirect product along an action of l1 on l0 by derivations.

    phi lists one operator per basis element of l1; the derivation law on l0
    and the homomorphism law on l1 basis pairs are both validated.
    """
    if len(phi) != l1.dim:
        raise ContractError("action must list one operator per acting basis element")
    for op in phi:
        if op.rows != l0.dim or op.cols != l0.dim:
            raise ContractError("action operator has wrong shape")
        if not _is_derivation_of(l0, op):
            raise ContractError("action operator is not a derivation of the base")
    for i in range(l1.dim):
        for j in range(l1.dim):
            expected = Matrix.zeros(l0.dim, l0.dim)
            for k, coeff in enumerate(l1.c[i][j]):
                if coeff != 0:
                    expected = expected.add(phi[k].scale(coeff))
            comm = phi[i].mul(phi[j]).sub(phi[j].mul(phi[i]))
            if comm != expected:
                raise ContractError("action is not a Lie homomorphism")
    n1, n0 = l1.dim, l0.dim
    n = n1 + n0
    c = [[[Q0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            for k, x in enumerate(l1.c[i][j]):
                c[i][j][k] = x
    for i in range(n1):
        for j in range(n0):
            col = phi[i].column(j)
            for k, x in enumerate(col):
                c[i][n1 + j][n1 + k] = x
                c[n1 + j][i][n1 + k] = -x
    for i in range(n0):
        for j in range(n0):
            for k, x in enumerate(l0.c[i][j]):
                c[n1 + i][n1 + j][n1 + k] = x
    labels = list(l1.labels) + list(l0.labels)
    return LieAlgebra(n, labels, c)


def abelian(n: int, prefix: str = "a") -> LieAlgebra:
    c = [[[Q0] * n for _ in range(n)] for _ in range(n)]
    return LieAlgebra(n, ["%s%d" % (prefix, i + 1) for i in range(n)], c)


def change_basis(algebra: LieAlgebra, t: Matrix) -> LieAlgebra:
    """Isomorphic copy in the basis f_i = sum_j t[j][i] e_j (t invertible)."""
    n = algebra.dim
    if t.rows != n or t.cols != n:
        raise ContractError("basis-change matrix has wrong shape")
    cols = [t.column(i) for i in range(n)]
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            coords = solve(t, bracket(algebra, cols[i], cols[j]))
            if coords is None:
                raise ContractError("basis-change matrix is not invertible")
            c[i][j] = coords
    return LieAlgebra(n, ["f%d" % (k + 1) for k in range(n)], c)


def operator_semidirect(operators: Sequence[Matrix],
                        labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """Semidirect product (span of the operators) |x Q^k per [.,.] = ay - bx.

    The operator list is closed under commutators first if needed.
    """
    if not operators:
        raise ContractError("operator list must be non-empty")
    k = operators[0].rows
    for op in operators:
        if op.rows != k or op.cols != k:
            raise ContractError("operators must be square of equal size")
    flat = Subspace.span(k * k, [op.flatten() for op in operators])
    while True:
        mats = [matrix_from_flat(v, k, k) for v in flat.vectors()]
        extra = []
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                comm = mats[i].mul(mats[j]).sub(mats[j].mul(mats[i]))
                if not flat.contains_vector(comm.flatten()):
                    extra.append(comm.flatten())
        if not extra:
            break
        flat = span_sum(flat, Subspace.span(k * k, extra))
    original = Subspace.span(k * k, [op.flatten() for op in operators])
    use_given = (original == flat and len(operators) == flat.dim)
    mats = list(operators) if use_given else \
        [matrix_from_flat(v, k, k) for v in flat.vectors()]
    m = len(mats)
    # coordinates in the basis `mats` itself (columns = flattened operators)
    coord_system = Matrix([[op.flatten()[t] for op in mats] for t in range(k * k)])
    c = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            comm = mats[i].mul(mats[j]).sub(mats[j].mul(mats[i]))
            coords = solve(coord_system, comm.flatten())
            if coords is None:
                raise ContractError("commutator escaped the operator span")
            c[i][j] = coords
    if labels is None:
        labels = ["m%d" % (i + 1) for i in range(m)]
    l1 = LieAlgebra(m, labels, c)
    l0 = abelian(k, prefix="v")
    return semidirect_product(l1, l0, mats)
