"""Finite families of subspaces: completions, finite-gap predicates, chains.

Families are explicit finite sets (the lattice-theoretic source families can
be infinite even at finite dimension, so this module consumes families
produced by reports or user input).  Completions enumerate the powerset and
are therefore bounded; the default cap of 16 members can be overridden.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .linalg import Subspace, span_intersect, span_sum

DEFAULT_COMPLETION_BOUND = 16


class FamilySizeError(ValueError):
    """Completion requested on a family above the configured bound."""


@dataclass(frozen=True)
class SubspaceFamily:
    ambient_dim: int
    members: tuple

    @staticmethod
    def of(ambient_dim: int, members: Iterable[Subspace]) -> "SubspaceFamily":
        seen = []
        for m in members:
            if m.ambient_dim != ambient_dim:
                raise ValueError("family member has wrong ambient dimension")
            if m not in seen:
                seen.append(m)
        seen.sort(key=lambda s: s.sort_key())
        return SubspaceFamily(ambient_dim, tuple(seen))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, space: Subspace) -> bool:
        return space in self.members

    def __iter__(self):
        return iter(self.members)


def family_meet(family: SubspaceFamily) -> Subspace:
    """Intersection of all members; the full space on the empty family."""
    result = Subspace.full(family.ambient_dim)
    for m in family:
        result = span_intersect(result, m)
    return result


def family_join(family: SubspaceFamily) -> Subspace:
    """Span of all members; zero on the empty family."""
    result = Subspace.zero(family.ambient_dim)
    for m in family:
        result = span_sum(result, m)
    return result


def _check_bound(family: SubspaceFamily, bound: int):
    if len(family) > bound:
        raise FamilySizeError(
            "family of %d members exceeds the completion bound %d"
            % (len(family), bound))


def p_completion(family: SubspaceFamily,
                 bound: int = DEFAULT_COMPLETION_BOUND) -> SubspaceFamily:
    """All meets of nonempty subfamilies, plus the join."""
    _check_bound(family, bound)
    members = list(family.members)
    out = [family_join(family)]
    for size in range(1, len(members) + 1):
        for combo in combinations(members, size):
            meet = combo[0]
            for m in combo[1:]:
                meet = span_intersect(meet, m)
            out.append(meet)
    return SubspaceFamily.of(family.ambient_dim, out)


def s_completion(family: SubspaceFamily,
                 bound: int = DEFAULT_COMPLETION_BOUND) -> SubspaceFamily:
    """All joins of nonempty subfamilies, plus the meet."""
    _check_bound(family, bound)
    members = list(family.members)
    out = [family_meet(family)]
    for size in range(1, len(members) + 1):
        for combo in combinations(members, size):
            join = combo[0]
            for m in combo[1:]:
                join = span_sum(join, m)
            out.append(join)
    return SubspaceFamily.of(family.ambient_dim, out)


def is_lower_finite_gap(family: SubspaceFamily) -> bool:
    """Every member other than the meet has a member properly below it."""
    meet = family_meet(family)
    for z in family:
        if z == meet:
            continue
        if not any(z != y and z.contains(y) for y in family):
            return False
    return True


def is_upper_finite_gap(family: SubspaceFamily) -> bool:
    join = family_join(family)
    for z in family:
        if z == join:
            continue
        if not any(z != y and y.contains(z) for y in family):
            return False
    return True


def is_lower_finite_gap_modulo(family: SubspaceFamily,
                               other: SubspaceFamily) -> bool:
    """Lower finite-gap where witnesses may come from the union family."""
    union = SubspaceFamily.of(family.ambient_dim,
                              list(family.members) + list(other.members))
    meet = family_meet(union)
    for z in family:
        if z == meet:
            continue
        if not any(z != y and z.contains(y) for y in union):
            return False
    return True


def maximal_lower_finite_gap_chain(family: SubspaceFamily, top: Subspace,
                                   reverse_tiebreak: bool = False) -> tuple:
    """A maximal chain in the family descending from `top`.

    Greedy: repeatedly step to a maximal member strictly below the current
    one; this yields an inclusion-maximal chain among those with maximum
    `top`.  Tie-break by the canonical basis key (or its reverse).
    """
    if top not in family:
        raise ValueError("top is not a member of the family")
    chain = [top]
    while True:
        current = chain[-1]
        below = [y for y in family if y != current and current.contains(y)]
        if not below:
            return tuple(chain)
        maximal = [y for y in below
                   if not any(z != y and z.contains(y) for z in below)]
        maximal.sort(key=lambda s: s.sort_key(), reverse=reverse_tiebreak)
        chain.append(maximal[0])


def restrict_family(family: SubspaceFamily, w: Subspace) -> SubspaceFamily:
    """Elementwise intersection with a fixed subspace, deduplicated."""
    if w.ambient_dim != family.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return SubspaceFamily.of(family.ambient_dim,
                             [span_intersect(m, w) for m in family])


def delta(family: SubspaceFamily) -> Subspace:
    """Common bottom of all maximal descending chains from the top.

    Requires the join to be a member; computed as the meet of the members
    reachable by a chain from the top (every member, for an explicit finite
    family) and cross-checked against two differently tie-broken maximal
    chains.
    """
    top = family_join(family)
    if top not in family:
        raise ValueError("the family join is not a member")
    reachable = [y for y in family if top.contains(y)]
    bottom = top
    for y in reachable:
        bottom = span_intersect(bottom, y)
    forward = maximal_lower_finite_gap_chain(family, top)
    backward = maximal_lower_finite_gap_chain(family, top, reverse_tiebreak=True)
    if forward[-1] != bottom or backward[-1] != bottom:
        raise ValueError(
            "maximal chains disagree with the family meet; "
            "the family is not p-complete")
    return bottom


def family_arrows(f: SubspaceFamily, g: SubspaceFamily) -> tuple[bool, bool]:
    """(dir, inv): every f-member below / above some g-member.

    The empty family points into anything by convention.
    """
    if f.ambient_dim != g.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    direct = all(any(z.contains(y) for z in g) for y in f)
    inverse = all(any(y.contains(z) for z in g) for y in f)
    return direct, inverse
