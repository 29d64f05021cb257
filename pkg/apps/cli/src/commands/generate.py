"""Corpus generation as a command."""

from amt_kernel.theory_lin import TheoryName
from corpus import generate_corpus, join_corpus
from schemas import RunConfig


def cmd_corpus(count: int, config: RunConfig) -> str:
    """Seeded random programs, one block per program, ready for ``diff``."""
    programs = generate_corpus(count, config.seed, difference=config.theory is TheoryName.DIFF_INT)
    return join_corpus(programs)
