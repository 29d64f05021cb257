"""Abstract syntax of ground T-logic programs."""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from amt_kernel.errors import PartitionConflict


class Kind(str, Enum):
    """Shape of a theory atom."""

    SUM = "sum"
    DIFF = "diff"


class Rel(str, Enum):
    """Comparison relation of a theory atom."""

    LE = "<="
    EQ = "="
    NE = "!="
    LT = "<"
    GT = ">"
    GE = ">="

    @property
    def complement(self) -> "Rel":
        return _REL_COMPLEMENT[self]

    @property
    def mirrored(self) -> "Rel":
        """Relation obtained when both sides are negated."""
        return _REL_MIRROR[self]


_REL_COMPLEMENT = {
    Rel.LE: Rel.GT,
    Rel.EQ: Rel.NE,
    Rel.NE: Rel.EQ,
    Rel.LT: Rel.GE,
    Rel.GT: Rel.LE,
    Rel.GE: Rel.LT,
}

_REL_MIRROR = {
    Rel.LE: Rel.GE,
    Rel.EQ: Rel.EQ,
    Rel.NE: Rel.NE,
    Rel.LT: Rel.GT,
    Rel.GT: Rel.LT,
    Rel.GE: Rel.LE,
}


@dataclass(frozen=True, slots=True)
class Term:
    coef: int
    var: str


@dataclass(frozen=True, slots=True)
class TheoryAtom:
    """A linear or difference constraint ``k1*x1 + ... + kn*xn REL k0``.

    Identity is syntactic: term order matters.
    """

    kind: Kind
    terms: tuple[Term, ...]
    rel: Rel
    rhs: int

    def __post_init__(self) -> None:
        if not self.terms:
            msg = "a theory atom needs at least one variable"
            raise ValueError(msg)
        if self.kind is Kind.DIFF and not (
            len(self.terms) == 2  # noqa: PLR2004
            and self.terms[0].coef == 1
            and self.terms[1].coef == -1
            and self.rel is Rel.LE
        ):
            msg = "a difference atom has the form x - y <= k"
            raise ValueError(msg)

    @classmethod
    def sum(cls, terms: Iterable[tuple[int, str]], rel: Rel | str, rhs: int) -> "TheoryAtom":
        return cls(Kind.SUM, tuple(Term(k, x) for k, x in terms), Rel(rel), rhs)

    @classmethod
    def diff(cls, x: str, y: str, k: int) -> "TheoryAtom":
        return cls(Kind.DIFF, (Term(1, x), Term(-1, y)), Rel.LE, k)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(t.var for t in self.terms)

    def complemented(self) -> "TheoryAtom":
        """The complement atom.

        Sum atoms flip their relation; a difference atom ``x - y <= k`` maps to
        ``y - x <= -k - 1`` so that complements stay difference atoms.
        """
        if self.kind is Kind.DIFF:
            x, y = self.terms[0].var, self.terms[1].var
            return TheoryAtom.diff(y, x, -self.rhs - 1)
        return TheoryAtom(self.kind, self.terms, self.rel.complement, self.rhs)

    def __str__(self) -> str:
        from amt_kernel.syntax.printer import format_atom

        return format_atom(self)


def normalize_atom(atom: TheoryAtom) -> TheoryAtom:
    """Sort terms by variable, merge repeated variables and drop zero coefficients.

    Difference atoms are returned unchanged.
    """
    if atom.kind is Kind.DIFF:
        return atom
    merged: dict[str, int] = {}
    for term in atom.terms:
        merged[term.var] = merged.get(term.var, 0) + term.coef
    terms = tuple(Term(k, x) for x, k in sorted(merged.items()) if k != 0)
    if not terms:
        msg = f"all variables of {atom} cancel out"
        raise ValueError(msg)
    return TheoryAtom(atom.kind, terms, atom.rel, atom.rhs)


@dataclass(frozen=True, slots=True)
class Regular:
    """A regular propositional atom."""

    name: str

    def __str__(self) -> str:
        return self.name


Atom = Regular | TheoryAtom


@dataclass(frozen=True, slots=True)
class Bottom:
    """Head of an integrity constraint."""

    def __str__(self) -> str:
        return "#false"


BOTTOM = Bottom()


@dataclass(frozen=True, slots=True)
class Rule:
    head: Atom | Bottom
    pbody: frozenset[Atom] = frozenset()
    nbody: frozenset[Atom] = frozenset()

    @property
    def is_constraint(self) -> bool:
        return isinstance(self.head, Bottom)

    @property
    def body_atoms(self) -> frozenset[Atom]:
        return self.pbody | self.nbody

    def __str__(self) -> str:
        from amt_kernel.syntax.printer import format_rule

        return format_rule(self)


def atom_sort_key(atom: Atom | Bottom) -> tuple[int, str]:
    """Deterministic ordering: regular atoms first, then theory atoms by text."""
    if isinstance(atom, Regular):
        return (0, atom.name)
    if isinstance(atom, Bottom):
        return (2, "")
    return (1, str(atom))


@dataclass(frozen=True)
class Program:
    """A ground T-logic program over a partition ⟨A, T, E⟩.

    Before partitioning ``theory_atoms`` holds the atoms occurring in the rules
    and ``externals``/``founded`` are empty. After ``infer_partition`` it holds
    the relevant universe, ``externals`` is closed under complement,
    ``founded`` is ``theory_atoms - externals`` and ``defined`` collects the
    theory atoms occurring in rule heads.
    """

    rules: tuple[Rule, ...] = ()
    regulars: frozenset[str] = frozenset()
    theory_atoms: frozenset[TheoryAtom] = frozenset()
    externals: frozenset[TheoryAtom] = frozenset()
    founded: frozenset[TheoryAtom] = frozenset()
    defined: frozenset[TheoryAtom] = frozenset()
    directives: tuple[TheoryAtom, ...] = ()
    partitioned: bool = False
    all_external: bool = False

    @classmethod
    def from_rules(
        cls, rules: Iterable[Rule], directives: Iterable[TheoryAtom] = ()
    ) -> "Program":
        rules = tuple(rules)
        directives = tuple(directives)
        regulars: set[str] = set()
        theory: set[TheoryAtom] = set(directives)
        for rule in rules:
            for atom in (rule.head, *rule.pbody, *rule.nbody):
                if isinstance(atom, Regular):
                    regulars.add(atom.name)
                elif isinstance(atom, TheoryAtom):
                    theory.add(atom)
        return cls(
            rules=tuple(rules),
            regulars=frozenset(regulars),
            theory_atoms=frozenset(theory),
            directives=tuple(directives),
        )

    def head_atoms(self) -> frozenset[Atom]:
        return frozenset(r.head for r in self.rules if not isinstance(r.head, Bottom))

    def body_atoms(self) -> frozenset[Atom]:
        return frozenset(a for r in self.rules for a in r.body_atoms)

    def occurring_atoms(self) -> frozenset[Atom]:
        return self.head_atoms() | self.body_atoms()

    def variables(self) -> frozenset[str]:
        return frozenset(x for s in self.theory_atoms for x in s.variables)

    def check_partition(self) -> None:
        """Raise ``PartitionConflict`` unless Head(P)∩E = ∅ and body(P)∩F = ∅."""
        heads = self.head_atoms()
        clash = sorted(str(s) for s in self.externals if s in heads)
        if clash:
            msg = f"external theory atoms occur in rule heads: {', '.join(clash)}"
            raise PartitionConflict(msg)
        bodies = self.body_atoms()
        clash = sorted(str(s) for s in self.founded if s in bodies)
        if clash:
            msg = f"founded theory atoms occur in rule bodies: {', '.join(clash)}"
            raise PartitionConflict(msg)
