"""Jacobson and Frattini ideals, indices, and Frattini-free structure theory.

The Jacobson ideal is exact: [L, rad(L)].  The Frattini ideal is an honest
estimate type: structural rules (commutative, semisimple, nilpotent,
Frattini-free, ideal direct sums) give exact values, and everything else
gets the interval  [L,L] cap Z(L)  <=  P  <=  [L, rad(L)]  rather than an
invented exact answer.

The Frattini-free decision reduces the C + S + J structure theorem to four
machine-checkable conditions: abelian nilradical, a subalgebra complement,
reductivity of the complement, and complete reducibility of its action on
the nilradical.  Subsimple classification certifies Simple / ClassI / ClassII
tags with witnesses; ClassI isomorphism is only claimed outright when an
explicit witness verifies, otherwise invariant screening flags the result
as unverified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Optional

from .liealg import (
    ContractError,
    LieAlgebra,
    QuotientData,
    bracket,
    bracket_spaces,
    center,
    centralizer,
    derived_series,
    direct_product,
    embed_subspace,
    is_abelian,
    is_ideal,
    is_killing_nondegenerate,
    is_nilpotent,
    is_subalgebra,
    killing_form,
    quotient,
    restrict_to_subalgebra,
    solvability_index,
    subalgebra_closure,
)
from .linalg import (
    Matrix,
    Q0,
    Q1,
    Subspace,
    matrix_from_flat,
    nullspace_matrix,
    nullspace_sparse,
    rank,
    span_intersect,
    span_sum,
)
from .modules import (
    Action,
    decompose_module,
    find_proper_submodule,
    is_completely_reducible,
    minimal_polynomial,
    restricted_ad_action,
    split_over_abelian_ideal,
)
from .polys import factor_rational_poly, poly_mul
from .radicals import (
    _solvability_index_of,
    levi_subalgebra,
    nilradical,
    solvable_radical,
)


class WitnessInvalidError(ContractError):
    """A supplied isomorphism witness failed verification."""


@dataclass(frozen=True)
class IdealEstimate:
    lower: Subspace
    upper: Subspace

    def __post_init__(self):
        if not self.upper.contains(self.lower):
            raise AssertionError("estimate lower bound exceeds upper bound")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Subspace:
        if not self.exact:
            raise ValueError("estimate is an interval, not exact")
        return self.lower

    @staticmethod
    def exactly(space: Subspace) -> "IdealEstimate":
        return IdealEstimate(space, space)


@dataclass(frozen=True)
class IndexEstimate:
    low: int
    high: int

    def __post_init__(self):
        if self.low > self.high:
            raise AssertionError("index estimate low exceeds high")

    @property
    def exact(self) -> bool:
        return self.low == self.high

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError("index estimate is an interval, not exact")
        return self.low

    def values(self) -> range:
        return range(self.low, self.high + 1)

    @staticmethod
    def exactly(n: int) -> "IndexEstimate":
        return IndexEstimate(n, n)


@dataclass(frozen=True)
class SubsimpleClass:
    tag: str  # OneDim | Simple | ClassI | ClassII | NotSubsimple
    witness: Optional[tuple] = None
    unverified: bool = False


@dataclass(frozen=True)
class FrattiniFreeDecomposition:
    C: Subspace
    S: Subspace
    J: Subspace
    J_summands: tuple


@dataclass(frozen=True)
class FrattiniFreeResult:
    free: bool
    decomposition: Optional[FrattiniFreeDecomposition] = None
    failed_condition: Optional[str] = None

    def __bool__(self) -> bool:
        return self.free


# ---------------------------------------------------------------------------
# centroid and ideal direct-sum decomposition
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def centroid(algebra: LieAlgebra) -> Subspace:
    """{T : T[x,y] = [Tx,y] = [x,Ty]}, as a subspace of operator space."""
    n = algebra.dim
    if n == 0:
        return Subspace.zero(0)
    c = algebra.c
    rows = []
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                # T([bi,bj])_k - [T bi, bj]_k = 0
                row: dict = {}
                for m in range(n):
                    if c[i][j][m] != 0:
                        row[k * n + m] = row.get(k * n + m, Q0) + c[i][j][m]
                for m in range(n):
                    if c[m][j][k] != 0:
                        row[m * n + i] = row.get(m * n + i, Q0) - c[m][j][k]
                if row:
                    rows.append(row)
                if i == j:
                    continue
                # T([bi,bj])_k - [bi, T bj]_k = 0
                row = {}
                for m in range(n):
                    if c[i][j][m] != 0:
                        row[k * n + m] = row.get(k * n + m, Q0) + c[i][j][m]
                for m in range(n):
                    if c[i][m][k] != 0:
                        row[m * n + j] = row.get(m * n + j, Q0) - c[i][m][k]
                if row:
                    rows.append(row)
    if not rows:
        return Subspace.full(n * n)
    return Subspace.span(n * n, nullspace_sparse(rows, n * n).data)


def _poly_power_kernel(p, mult: int, m: Matrix) -> Subspace:
    from .modules import _poly_of_matrix
    power = [Q1]
    for _ in range(mult):
        power = poly_mul(power, list(p))
    return Subspace.span(m.rows, nullspace_matrix(_poly_of_matrix(power, m)).data)


def _find_ideal_split(algebra: LieAlgebra) -> Optional[list]:
    n = algebra.dim
    cent = centroid(algebra)
    mats = [matrix_from_flat(v, n, n) for v in cent.vectors()]
    probes = list(mats)
    limit = min(len(mats), 10)
    for i in range(limit):
        for j in range(i + 1, limit):
            probes.append(mats[i].add(mats[j]))
            probes.append(mats[i].sub(mats[j]))
    for probe in probes:
        minpoly = minimal_polynomial(probe)
        _, factors = factor_rational_poly(minpoly)
        groups: dict = {}
        for f in factors:
            groups[tuple(f)] = groups.get(tuple(f), 0) + 1
        if len(groups) < 2:
            continue
        parts = [_poly_power_kernel(list(f), mult, probe)
                 for f, mult in groups.items()]
        if sum(p.dim for p in parts) != n:
            continue
        if not all(is_ideal(algebra, p) for p in parts):
            continue
        return parts
    return None


@lru_cache(maxsize=None)
def direct_summands(algebra: LieAlgebra) -> tuple:
    """Ideal direct summands found by splitting centroid minimal polynomials.

    Returns (L,) when no split is found; every returned decomposition is
    verified (ideals, pairwise independent, spanning).
    """
    if algebra.dim == 0:
        return ()

    def rec(alg: LieAlgebra, basis: Matrix) -> list:
        split = _find_ideal_split(alg)
        if split is None:
            return [embed_subspace(basis, alg.full_space())]
        out = []
        for part in split:
            part_alg, part_basis = restrict_to_subalgebra(alg, part)
            out.extend(rec(part_alg, part_basis.mul(basis)))
        return out

    parts = sorted(rec(algebra, Matrix.identity(algebra.dim)),
                   key=lambda s: s.sort_key())
    total = algebra.zero_space()
    for p in parts:
        if not span_intersect(total, p).is_zero():
            raise AssertionError("direct summands are not independent")
        total = span_sum(total, p)
    if not total.is_full():
        raise AssertionError("direct summands do not span")
    return tuple(parts)


# ---------------------------------------------------------------------------
# Jacobson ideal and index
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def jacobson_ideal(algebra: LieAlgebra) -> Subspace:
    """[L, rad(L)], the intersection of the maximal finite-codim ideals."""
    return bracket_spaces(algebra, algebra.full_space(), solvable_radical(algebra))


def jacobson_index(algebra: LieAlgebra) -> int:
    """Solvability index of the Jacobson ideal, plus one."""
    if algebra.dim == 0:
        return 0
    k = jacobson_ideal(algebra)
    i_s = _solvability_index_of(algebra, k)
    if i_s is None:
        raise AssertionError("Jacobson ideal is not solvable")
    return i_s + 1


# ---------------------------------------------------------------------------
# Frattini-free decision and decomposition
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def is_frattini_free(algebra: LieAlgebra) -> FrattiniFreeResult:
    """Decide Frattini-freeness via the four-part structure test."""
    nil = nilradical(algebra)
    if not bracket_spaces(algebra, nil, nil).is_zero():
        return FrattiniFreeResult(False, failed_condition="nilradical is not abelian")
    complement = split_over_abelian_ideal(algebra, nil)
    if complement is None:
        return FrattiniFreeResult(
            False, failed_condition="no subalgebra complement to the nilradical")
    comp_alg, comp_basis = restrict_to_subalgebra(algebra, complement)
    if solvable_radical(comp_alg) != center(comp_alg):
        return FrattiniFreeResult(
            False, failed_condition="complement to the nilradical is not reductive")
    action = restricted_ad_action(algebra, complement.vectors(), nil)
    if not is_completely_reducible(action):
        return FrattiniFreeResult(
            False,
            failed_condition="complement acts non-semisimply on the nilradical")
    c_part = embed_subspace(comp_basis, center(comp_alg))
    s_part = embed_subspace(
        comp_basis,
        bracket_spaces(comp_alg, comp_alg.full_space(), comp_alg.full_space()))
    summands = tuple(embed_subspace(nil.basis, s) for s in decompose_module(action))
    decomposition = FrattiniFreeDecomposition(C=c_part, S=s_part, J=nil,
                                              J_summands=summands)
    _check_decomposition(algebra, decomposition)
    return FrattiniFreeResult(True, decomposition=decomposition)


def _check_decomposition(algebra: LieAlgebra, d: FrattiniFreeDecomposition):
    if d.C.dim + d.S.dim + d.J.dim != algebra.dim:
        raise AssertionError("C + S + J dimensions do not add up")
    if not span_sum(span_sum(d.C, d.S), d.J).is_full():
        raise AssertionError("C + S + J do not span")
    if not is_subalgebra(algebra, d.C) or not bracket_spaces(algebra, d.C, d.C).is_zero():
        raise AssertionError("C is not an abelian subalgebra")
    if not is_ideal(algebra, d.J) or not bracket_spaces(algebra, d.J, d.J).is_zero():
        raise AssertionError("J is not an abelian ideal")
    if not bracket_spaces(algebra, d.C, d.S).is_zero():
        raise AssertionError("[C, S] is not zero")
    if not is_subalgebra(algebra, d.S):
        raise AssertionError("S is not a subalgebra")
    if not d.S.is_zero():
        s_alg, _ = restrict_to_subalgebra(algebra, d.S)
        if not is_killing_nondegenerate(s_alg):
            raise AssertionError("S has a degenerate Killing form")
    total = algebra.zero_space()
    for s in d.J_summands:
        total = span_sum(total, s)
    if total != d.J:
        raise AssertionError("J summands do not sum to J")


def frattini_free_decomposition(algebra: LieAlgebra) -> FrattiniFreeDecomposition:
    result = is_frattini_free(algebra)
    if not result:
        raise ContractError("algebra is not Frattini-free: %s"
                            % result.failed_condition)
    return result.decomposition


# ---------------------------------------------------------------------------
# Frattini ideal and index
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def frattini_ideal(algebra: LieAlgebra) -> IdealEstimate:
    """Frattini ideal, exact when a structural rule fires, else an interval."""
    full = algebra.full_space()
    if is_abelian(algebra):
        return IdealEstimate.exactly(algebra.zero_space())
    if is_killing_nondegenerate(algebra):
        return IdealEstimate.exactly(algebra.zero_space())
    if is_nilpotent(algebra):
        return IdealEstimate.exactly(bracket_spaces(algebra, full, full))
    if is_frattini_free(algebra):
        return IdealEstimate.exactly(algebra.zero_space())
    summands = direct_summands(algebra)
    if len(summands) >= 2:
        lower = algebra.zero_space()
        upper = algebra.zero_space()
        for part in summands:
            part_alg, part_basis = restrict_to_subalgebra(algebra, part)
            est = frattini_ideal(part_alg)
            lower = span_sum(lower, embed_subspace(part_basis, est.lower))
            upper = span_sum(upper, embed_subspace(part_basis, est.upper))
        return IdealEstimate(lower, upper)
    derived = bracket_spaces(algebra, full, full)
    lower = span_intersect(derived, center(algebra))
    upper = jacobson_ideal(algebra)
    return IdealEstimate(lower, upper)


def frattini_index(algebra: LieAlgebra) -> IndexEstimate:
    """Exact solvability-index formula when the ideal is exact, else Eq-(10)
    style interval intersected with [jacobson_index - 1, jacobson_index]."""
    if algebra.dim == 0:
        return IndexEstimate.exactly(0)
    estimate = frattini_ideal(algebra)
    if estimate.exact:
        i_s = _solvability_index_of(algebra, estimate.value)
        if i_s is None:
            raise AssertionError("exact Frattini ideal is not solvable")
        return IndexEstimate.exactly(i_s + 1)
    r_j = jacobson_index(algebra)
    n_i = _solvability_index_of(algebra, nilradical(algebra))
    low = max(n_i, r_j - 1, 1)
    return IndexEstimate(low, r_j)


# ---------------------------------------------------------------------------
# Jacobson-free decision
# ---------------------------------------------------------------------------

def is_jacobson_free(algebra: LieAlgebra):
    """K_L = 0 test; on success also the verified levi + center splitting."""
    if not jacobson_ideal(algebra).is_zero():
        return False, None
    levi = levi_subalgebra(algebra).levi
    z = center(algebra)
    if levi.dim + z.dim != algebra.dim or not span_sum(levi, z).is_full():
        raise AssertionError("Jacobson-free algebra failed levi + center split")
    return True, (levi, z)


# ---------------------------------------------------------------------------
# subsimple classification
# ---------------------------------------------------------------------------

def _is_rational_square(q) -> bool:
    if q == 0:
        return True
    if q < 0:
        return False
    num, den = int(q.numerator), int(q.denominator)
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def _killing_discriminants_compatible(a: LieAlgebra, b: LieAlgebra) -> bool:
    """Necessary condition for isomorphism: Killing dets agree up to squares."""
    ka, kb = killing_form(a), killing_form(b)
    da = _determinant(ka)
    db = _determinant(kb)
    if da == 0 or db == 0:
        return da == db
    return _is_rational_square(da / db)


def _determinant(m: Matrix):
    n = m.rows
    rows = [list(r) for r in m.data]
    det = Q1
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if rows[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            return Q0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        pv = rows[c][c]
        det *= pv
        for r in range(c + 1, n):
            f = rows[r][c] / pv
            if f != 0:
                for j in range(c, n):
                    rows[r][j] -= f * rows[c][j]
    return det


def classify_subsimple(algebra: LieAlgebra,
                       iso_witness: Optional[Matrix] = None) -> SubsimpleClass:
    """OneDim / Simple / ClassI / ClassII / NotSubsimple with witnesses."""
    from .radicals import decompose_semisimple
    if algebra.dim == 1:
        return SubsimpleClass("OneDim")
    if is_killing_nondegenerate(algebra):
        components = decompose_semisimple(algebra)
        if len(components) == 1:
            return SubsimpleClass("Simple")
        if len(components) != 2:
            return SubsimpleClass("NotSubsimple")
        first, second = components
        alg1, _ = restrict_to_subalgebra(algebra, first)
        alg2, _ = restrict_to_subalgebra(algebra, second)
        if iso_witness is not None:
            _verify_iso_witness(alg1, alg2, iso_witness)
            return SubsimpleClass("ClassI", witness=(first, second, iso_witness))
        if alg1.dim == alg2.dim and _killing_discriminants_compatible(alg1, alg2):
            return SubsimpleClass("ClassI", witness=(first, second, None),
                                  unverified=True)
        return SubsimpleClass("NotSubsimple")
    x = nilradical(algebra)
    if not bracket_spaces(algebra, x, x).is_zero():
        return SubsimpleClass("NotSubsimple")
    if centralizer(algebra, x) != x:
        return SubsimpleClass("NotSubsimple")
    complement = split_over_abelian_ideal(algebra, x)
    if complement is None:
        return SubsimpleClass("NotSubsimple")
    action = restricted_ad_action(algebra, complement.vectors(), x)
    if find_proper_submodule(action) is not None:
        return SubsimpleClass("NotSubsimple")
    return SubsimpleClass("ClassII", witness=(complement, x))


def _verify_iso_witness(alg1: LieAlgebra, alg2: LieAlgebra, witness: Matrix):
    if witness.rows != alg2.dim or witness.cols != alg1.dim:
        raise WitnessInvalidError("witness has wrong shape")
    if alg1.dim != alg2.dim or rank(witness) != alg1.dim:
        raise WitnessInvalidError("witness is not invertible")
    for i in range(alg1.dim):
        for j in range(i + 1, alg1.dim):
            lhs = witness.apply(bracket(alg1, alg1.basis_vector(i),
                                        alg1.basis_vector(j)))
            rhs = bracket(alg2, witness.apply(alg1.basis_vector(i)),
                          witness.apply(alg1.basis_vector(j)))
            if lhs != rhs:
                raise WitnessInvalidError("witness does not preserve brackets")


# ---------------------------------------------------------------------------
# subdirect products
# ---------------------------------------------------------------------------

def subdirect_components(algebra: LieAlgebra) -> tuple:
    """Quotients onto subsimple algebras with kernels intersecting to zero.

    One quotient per irreducible nilradical summand, one per simple component
    of S that annihilates J, and one per central line of C not acting on J.
    """
    decomposition = frattini_free_decomposition(algebra)
    from .radicals import decompose_semisimple
    c_part, s_part, j_part = decomposition.C, decomposition.S, decomposition.J
    reductive = span_sum(c_part, s_part)
    kernels = []
    for i, summand in enumerate(decomposition.J_summands):
        others = algebra.zero_space()
        for j, other in enumerate(decomposition.J_summands):
            if j != i:
                others = span_sum(others, other)
        annihilator = span_intersect(reductive, centralizer(algebra, summand))
        kernels.append(span_sum(others, annihilator))
    if not s_part.is_zero():
        s_alg, s_basis = restrict_to_subalgebra(algebra, s_part)
        simple_parts = [embed_subspace(s_basis, p)
                        for p in decompose_semisimple(s_alg)]
        for i, part in enumerate(simple_parts):
            if not bracket_spaces(algebra, part, j_part).is_zero():
                continue
            kernel = span_sum(c_part, j_part)
            for j, other in enumerate(simple_parts):
                if j != i:
                    kernel = span_sum(kernel, other)
            kernels.append(kernel)
    central = span_intersect(c_part, centralizer(algebra, j_part))
    if not central.is_zero():
        # extend the inert central part to a basis of C; the extension acts
        acting = algebra.zero_space()
        grown = central
        for vec in c_part.vectors():
            if not grown.contains_vector(vec):
                acting = span_sum(acting, Subspace.span(algebra.dim, [vec]))
                grown = span_sum(grown, Subspace.span(algebra.dim, [vec]))
        base = span_sum(span_sum(s_part, j_part), acting)
        lines = central.vectors()
        for i, _ in enumerate(lines):
            kernel = base
            for j, other_line in enumerate(lines):
                if j != i:
                    kernel = span_sum(kernel,
                                      Subspace.span(algebra.dim, [other_line]))
            kernels.append(kernel)
    components = tuple(quotient(algebra, k) for k in kernels)
    meet = algebra.full_space()
    for k in kernels:
        meet = span_intersect(meet, k)
    if not meet.is_zero():
        raise AssertionError("subdirect kernels do not intersect to zero")
    return components


def assemble_subdirect_embedding(components) -> tuple:
    """Stack component projections into one embedding matrix."""
    algebras = [c.quotient for c in components]
    rows = []
    for comp in components:
        rows.extend(comp.projection.data)
    return algebras, Matrix(rows)


def verify_subdirect(components, embedding: Matrix, algebra: LieAlgebra) -> bool:
    """Injective homomorphism into the product, onto every coordinate."""
    total = sum(c.dim for c in components)
    if embedding.rows != total or embedding.cols != algebra.dim:
        raise ValueError("embedding shape does not match components")
    if rank(embedding) != algebra.dim:
        return False
    product = direct_product(list(components))
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            lhs = embedding.apply(bracket(algebra, algebra.basis_vector(i),
                                          algebra.basis_vector(j)))
            rhs = bracket(product, embedding.apply(algebra.basis_vector(i)),
                          embedding.apply(algebra.basis_vector(j)))
            if lhs != rhs:
                return False
    offset = 0
    for comp in components:
        block = Matrix(embedding.data[offset:offset + comp.dim])
        if rank(block) != comp.dim:
            return False
        offset += comp.dim
    return True


# ---------------------------------------------------------------------------
# index classes
# ---------------------------------------------------------------------------

def index_class(algebra: LieAlgebra) -> tuple:
    """Partition by Frattini/Jacobson index pattern; Undetermined on spanning
    intervals."""
    r_s = frattini_index(algebra)
    r_j = jacobson_index(algebra)
    k_i = _solvability_index_of(algebra, jacobson_ideal(algebra))
    n_i = _solvability_index_of(algebra, nilradical(algebra))

    def class_of(v: int) -> Optional[str]:
        if v == r_j == k_i + 1 == n_i + 1:
            return "C1"
        if v == r_j == k_i + 1 == n_i:
            return "C2"
        if v + 1 == r_j == k_i + 1 == n_i + 1:
            return "C3"
        return None

    tags = {class_of(v) for v in r_s.values()}
    if len(tags) == 1 and None not in tags:
        return tags.pop(), (r_s, r_j)
    return "Undetermined", (r_s, r_j)


# ---------------------------------------------------------------------------
# remaining operations
# ---------------------------------------------------------------------------

def largest_abelian_ideal_frattini_free(algebra: LieAlgebra) -> Subspace:
    """J + (C cap Z(L)) for a Frattini-free algebra."""
    decomposition = frattini_free_decomposition(algebra)
    result = span_sum(decomposition.J,
                      span_intersect(decomposition.C, center(algebra)))
    if not is_ideal(algebra, result):
        raise AssertionError("largest abelian ideal candidate is not an ideal")
    if not bracket_spaces(algebra, result, result).is_zero():
        raise AssertionError("largest abelian ideal candidate is not abelian")
    return result


def banach_radical_stubs(algebra: LieAlgebra) -> dict:
    """The four infinite-dimensional radicals, all zero at finite dimension."""
    zero = algebra.zero_space()
    return {"P_S": zero, "P_J": zero, "F": zero, "F_s": zero}


def nongenerator_check(algebra: LieAlgebra, subalg: Subspace, x) -> bool:
    """Whether adjoining x to a proper subalgebra still generates properly."""
    if not is_subalgebra(algebra, subalg):
        raise ContractError("nongenerator check requires a subalgebra")
    if subalg.is_full():
        raise ContractError("nongenerator check requires a proper subalgebra")
    grown = span_sum(subalg, Subspace.span(algebra.dim, [x]))
    return not subalgebra_closure(algebra, grown).is_full()
