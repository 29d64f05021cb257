"""Seeded generator of small random programs for differential runs."""

import logging
import random

from amt_kernel.errors import KernelError
from amt_kernel.syntax import (
    BOTTOM,
    Atom,
    Bottom,
    Program,
    Regular,
    Rel,
    Rule,
    TheoryAtom,
    format_program,
    infer_partition,
)

logger = logging.getLogger(__name__)

SEPARATOR = "%%"

REGULAR_NAMES = ("a", "b", "c")
VARIABLES = ("x", "y")
COEFS = (-2, -1, 1, 2)
MAX_RULES = 4
MAX_PAIRS = 2
MAX_BODY = 2
RHS_RANGE = (-4, 4)


def random_atom(rng: random.Random, *, difference: bool = False) -> TheoryAtom:
    rhs = rng.randint(*RHS_RANGE)
    if difference:
        x, y = rng.sample(VARIABLES, 2)
        return TheoryAtom.diff(x, y, rhs)
    names = rng.sample(VARIABLES, rng.randint(1, len(VARIABLES)))
    return TheoryAtom.sum([(rng.choice(COEFS), x) for x in names], rng.choice(list(Rel)), rhs)


def _draw(rng: random.Random, *, difference: bool) -> Program:
    regulars: list[Atom] = [Regular(a) for a in rng.sample(REGULAR_NAMES, rng.randint(1, 3))]
    # a drawn atom and its complement form one pair of the universe
    pool = [random_atom(rng, difference=difference) for _ in range(rng.randint(1, MAX_PAIRS))]
    cut = rng.randint(0, len(pool))
    founded, external = pool[:cut], pool[cut:]
    bodies: list[Atom] = regulars + external + [s.complemented() for s in external]
    heads: list[Atom | Bottom] = [BOTTOM, *regulars, *founded]

    rules: list[Rule] = []
    for _ in range(rng.randint(1, MAX_RULES)):
        body = rng.sample(bodies, min(len(bodies), rng.randint(0, MAX_BODY)))
        split = rng.randint(0, len(body))
        head = rng.choice(heads)
        rules.append(Rule(head, frozenset(body[:split]), frozenset(body[split:])))
    return Program.from_rules(rules)


def random_program(rng: random.Random, *, difference: bool = False) -> Program:
    """Draw until the program has a consistent partition."""
    while True:
        program = _draw(rng, difference=difference)
        try:
            infer_partition(program)
        except KernelError as exc:
            logger.debug("redrawing: %s", exc)
            continue
        return program


def generate_corpus(count: int, seed: int, *, difference: bool = False) -> list[str]:
    rng = random.Random(seed)
    return [format_program(random_program(rng, difference=difference)) for _ in range(count)]


def join_corpus(programs: list[str]) -> str:
    return f"{SEPARATOR}\n".join(programs)


def split_corpus(text: str) -> list[str]:
    """Programs of a corpus file, separated by lines holding only ``%%``."""
    chunks: list[list[str]] = [[]]
    for line in text.splitlines(keepends=True):
        if line.strip() == SEPARATOR:
            chunks.append([])
        else:
            chunks[-1].append(line)
    return ["".join(chunk) for chunk in chunks]
