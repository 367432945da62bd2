"""The acceptance gate: every criterion at its stated tolerance.

One test per criterion; each prints a PASS/FAIL line per contained check so
a full run reads as a verification report.
"""

import pytest

from ccg25 import acceptance


def _run(group: str):
    checks = acceptance.GROUPS[group](200)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.check_name}: {c.computed}")
    failing = [c.check_name for c in checks if not c.passed]
    assert not failing, f"failing checks: {failing}"


def test_criterion_01_standard_curve():
    _run("standard_curve")


def test_criterion_02_rmk_curve():
    _run("rmk_curve")


def test_criterion_03_f_identity_firewall():
    _run("f_identity")


def test_criterion_04_gradient():
    _run("gradient")


def test_criterion_05_involution():
    _run("involution")


def test_criterion_06_w_functional():
    _run("w_functional")


def test_criterion_07_eg_exact():
    _run("eg_exact")


def test_criterion_08_eg_exact1():
    _run("eg_exact1")


def test_criterion_09_eg_cusp():
    _run("eg_cusp")


def test_criterion_10_level_set():
    _run("level_set")


def test_criterion_11_family33():
    _run("family33")


def test_criterion_12_ramification_dichotomy():
    _run("ramification")


def test_criterion_13_representation_suite():
    _run("representation")


def test_criterion_14_genericity():
    _run("genericity")


def test_criterion_15_example5():
    _run("example5")


def test_criterion_16_second_fundamental_form():
    _run("second_ff")
