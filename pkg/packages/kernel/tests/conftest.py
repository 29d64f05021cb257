"""Pytest configuration and fixtures."""

import pytest

from amt_kernel.syntax import Program, TheoryAtom, infer_partition, parse_program
from amt_kernel.theory_core import TheoryHandle
from amt_kernel.theory_lin import Bounds, TheoryName, make_handle
from samples import RUNNING_EXAMPLE


@pytest.fixture
def small_bounds() -> Bounds:
    """Box [-3, 3] used by most enumeration tests."""
    return Bounds(-3, 3)


@pytest.fixture
def lin_int(small_bounds: Bounds) -> TheoryHandle:
    return make_handle(TheoryName.LIN_INT, small_bounds)


@pytest.fixture
def running_example() -> Program:
    """The two-rule program with an external sum atom and a founded one."""
    return infer_partition(parse_program(RUNNING_EXAMPLE))


@pytest.fixture
def s1() -> TheoryAtom:
    return TheoryAtom.sum([(1, "x"), (1, "y")], "=", 4)


@pytest.fixture
def s2() -> TheoryAtom:
    return TheoryAtom.sum([(1, "y"), (1, "z")], "=", 2)
