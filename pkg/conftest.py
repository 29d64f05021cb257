"""Root pytest wiring for running every workspace member's tests together.

Each member's tests import helper modules by bare name (``samples``, ``strategies``)
from its own ``tests`` directory, and both members share those names as well as the
``tests`` package name. Before a member's tests are collected, put its ``tests``
directory first on ``sys.path`` and forget the other member's modules so the bare
imports resolve to the right files.
"""

from pathlib import Path
import sys

ROOT = Path(__file__).parent
MEMBER_TESTS = [ROOT / "packages" / "kernel" / "tests", ROOT / "apps" / "cli" / "tests"]
HELPERS = ("samples", "strategies")


def _activate(tests_dir: Path) -> None:
    for other in MEMBER_TESTS:
        while str(other) in sys.path:
            sys.path.remove(str(other))
    sys.path.insert(0, str(tests_dir))
    for name in list(sys.modules):
        if name in HELPERS or name == "tests" or name.startswith("tests."):
            del sys.modules[name]


def pytest_collect_directory(path: Path, parent):  # noqa: ANN001, ANN201, ARG001
    if path in MEMBER_TESTS:
        _activate(path)
