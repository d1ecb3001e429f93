"""Acceptance gate: every criterion at its stated (exact) tolerance.

Each test prints one pass/fail line; `lierad suite` renders the same table
from the command line.
"""

from __future__ import annotations

import pytest

from lierad import acceptance


def _run(number, fn, *args):
    name = acceptance.CRITERIA[number - 1][0]
    try:
        detail = fn(*args)
    except Exception as exc:
        print("[FAIL] criterion %-2d %s: %s" % (number, name, exc))
        raise
    print("[PASS] criterion %-2d %s: %s" % (number, name, detail))


def test_criterion_01_heisenberg_fixture():
    _run(1, acceptance.criterion_1)


def test_criterion_02_triangular_in_sl2_fixture():
    _run(2, acceptance.criterion_2)


def test_criterion_03_upper_triangular_indices():
    _run(3, acceptance.criterion_3)


def test_criterion_04_index_inequality():
    _run(4, acceptance.criterion_4)


def test_criterion_05_class_partition_fixtures():
    _run(5, acceptance.criterion_5)


def test_criterion_06_subsimple_classifier():
    _run(6, acceptance.criterion_6)


def test_criterion_07_frattini_free_structure():
    _run(7, acceptance.criterion_7)


def test_criterion_08_radical_identity_suite():
    _run(8, acceptance.criterion_8)


def test_criterion_09_certificate_suite():
    _run(9, acceptance.criterion_9, acceptance.DEFAULT_SEED)


def test_criterion_10_product_laws():
    _run(10, acceptance.criterion_10)


def test_criterion_11_chains_suite():
    _run(11, acceptance.criterion_11, acceptance.DEFAULT_SEED)


def test_criterion_12_solvable_jacobson_structure():
    _run(12, acceptance.criterion_12)
