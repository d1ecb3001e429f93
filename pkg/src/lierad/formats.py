"""File formats: algebra files, subspace-family files, JSON helpers.

Rationals are serialized as strings "p/q" (or "p") so no binary-float
ambiguity can enter; bracket tables store only i < j entries and the loader
synthesizes the antisymmetric counterparts.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .chains import SubspaceFamily
from .liealg import LieAlgebra, validate
from .linalg import Matrix, Q0, Subspace, qq


class AlgebraFileError(ValueError):
    """Malformed algebra file; the message names the offending entry."""


class AlgebraValidationError(ValueError):
    """Structure constants violate antisymmetry or the Jacobi identity."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            "validation failed: antisymmetry violations %r, jacobi violations %r"
            % (list(report.antisymmetry_violations), list(report.jacobi_violations)))


def rational_to_str(x) -> str:
    return str(x)


def str_to_rational(text: str):
    try:
        return qq(str(text))
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise AlgebraFileError("bad rational literal %r" % (text,)) from exc


def subspace_to_json(space: Subspace) -> list:
    return [[rational_to_str(x) for x in row] for row in space.vectors()]


def subspace_from_json(ambient_dim: int, rows: Sequence) -> Subspace:
    vecs = [[str_to_rational(x) for x in row] for row in rows]
    return Subspace.span(ambient_dim, vecs)


def matrix_to_json(m: Matrix) -> list:
    return [[rational_to_str(x) for x in row] for row in m.data]


def algebra_to_dict(algebra: LieAlgebra, name: str = "") -> dict:
    brackets = []
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            coeffs = algebra.c[i][j]
            if any(x != 0 for x in coeffs):
                brackets.append({
                    "i": i, "j": j,
                    "c": [rational_to_str(x) for x in coeffs],
                })
    return {
        "name": name or "algebra",
        "dim": algebra.dim,
        "basis": list(algebra.labels),
        "brackets": brackets,
    }


def algebra_from_dict(data: dict) -> LieAlgebra:
    if not isinstance(data, dict):
        raise AlgebraFileError("algebra file must contain a JSON object")
    try:
        dim = int(data["dim"])
    except (KeyError, TypeError, ValueError):
        raise AlgebraFileError("missing or non-integer 'dim' field")
    if dim < 0:
        raise AlgebraFileError("'dim' must be nonnegative")
    basis = data.get("basis") or ["b%d" % (k + 1) for k in range(dim)]
    if len(basis) != dim:
        raise AlgebraFileError("basis label count %d does not match dim %d"
                               % (len(basis), dim))
    c = [[[Q0] * dim for _ in range(dim)] for _ in range(dim)]
    for pos, entry in enumerate(data.get("brackets", [])):
        where = "bracket entry #%d" % pos
        if not isinstance(entry, dict):
            raise AlgebraFileError("%s is not an object" % where)
        try:
            i, j = int(entry["i"]), int(entry["j"])
        except (KeyError, TypeError, ValueError):
            raise AlgebraFileError("%s lacks integer fields 'i', 'j'" % where)
        if not (0 <= i < dim and 0 <= j < dim):
            raise AlgebraFileError("%s has out-of-range index (i=%d, j=%d, dim=%d)"
                                   % (where, i, j, dim))
        if i >= j:
            raise AlgebraFileError("%s must have i < j (antisymmetry is implied)"
                                   % where)
        coeffs = entry.get("c")
        if not isinstance(coeffs, list) or len(coeffs) != dim:
            raise AlgebraFileError("%s coefficient vector must have length %d"
                                   % (where, dim))
        row = [str_to_rational(x) for x in coeffs]
        c[i][j] = row
        c[j][i] = [-x for x in row]
    algebra = LieAlgebra(dim, basis, c)
    report = validate(algebra)
    if not report.ok:
        raise AlgebraValidationError(report)
    return algebra


def load_algebra(path: str) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise AlgebraFileError("not valid JSON (%s)" % exc) from exc
    return algebra_from_dict(data)


def save_algebra(algebra: LieAlgebra, path: str, name: str = ""):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_to_dict(algebra, name), fh, indent=2, sort_keys=True)
        fh.write("\n")


def family_from_dict(data: dict) -> SubspaceFamily:
    if not isinstance(data, dict):
        raise AlgebraFileError("family file must contain a JSON object")
    try:
        ambient = int(data["ambient_dim"])
    except (KeyError, TypeError, ValueError):
        raise AlgebraFileError("missing or non-integer 'ambient_dim' field")
    members = []
    for pos, rows in enumerate(data.get("members", [])):
        if not isinstance(rows, list):
            raise AlgebraFileError("family member #%d is not a matrix" % pos)
        for row in rows:
            if not isinstance(row, list) or len(row) != ambient:
                raise AlgebraFileError(
                    "family member #%d has a row of wrong length" % pos)
        members.append(subspace_from_json(ambient, rows))
    return SubspaceFamily.of(ambient, members)


def load_family(path: str) -> SubspaceFamily:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise AlgebraFileError("not valid JSON (%s)" % exc) from exc
    return family_from_dict(data)


def family_to_dict(family: SubspaceFamily) -> dict:
    return {
        "ambient_dim": family.ambient_dim,
        "members": [subspace_to_json(m) for m in family.members],
    }
