"""Tests for program parsing, printing and partition inference."""

from hypothesis import given, settings
import pytest

from amt_kernel.errors import DirectiveConflict, ParseError, PartitionConflict
from amt_kernel.syntax import (
    BOTTOM,
    Kind,
    Program,
    Regular,
    Rel,
    Rule,
    TheoryAtom,
    close_under_complement,
    format_atom,
    format_program,
    format_rule,
    infer_partition,
    normalize_atom,
    parse_program,
    program_variables,
)
from samples import MARGIN, RUNNING_EXAMPLE
from strategies import programs


def test_parse_running_example(s1: TheoryAtom, s2: TheoryAtom) -> None:
    """Test parsing the two-rule example into rules and atoms."""
    program = parse_program(RUNNING_EXAMPLE)
    assert program.rules == (
        Rule(Regular("a"), frozenset({s1})),
        Rule(s2, frozenset({Regular("a")})),
    )
    assert program.regulars == frozenset({"a"})
    assert program.theory_atoms == frozenset({s1, s2})
    assert not program.partitioned


def test_parse_empty_program() -> None:
    """Test that empty input is the empty program."""
    assert parse_program("") == Program()
    assert parse_program("% only a comment\n") == Program()


def test_parse_empty_constraint() -> None:
    """Test the constraint with an empty body."""
    program = parse_program(":- .")
    assert program.rules == (Rule(BOTTOM),)


def test_parse_negation_and_constraint() -> None:
    """Test default negation in bodies and integrity constraints."""
    program = parse_program("b :- not a, &sum{2*x;-1*y}>=3.\n:- a, not b.")
    first, second = program.rules
    assert first.nbody == frozenset({Regular("a")})
    (atom,) = first.pbody
    assert atom == TheoryAtom.sum([(2, "x"), (-1, "y")], Rel.GE, 3)
    assert second.is_constraint
    assert second.pbody == frozenset({Regular("a")})
    assert second.nbody == frozenset({Regular("b")})


def test_parse_diff_atom() -> None:
    """Test difference atoms and their term shape."""
    (rule,) = parse_program("&diff{x-y}<=-2 :- a.").rules
    assert rule.head == TheoryAtom.diff("x", "y", -2)
    assert rule.head.kind is Kind.DIFF


def test_parse_diff_atom_rejects_other_relations() -> None:
    """Test that difference atoms only accept <=."""
    with pytest.raises(ParseError) as excinfo:
        parse_program("a :- &diff{x-y}>=2.")
    assert excinfo.value.line == 1
    assert excinfo.value.column == 16


def test_parse_error_has_location() -> None:
    """Test that syntax errors carry line and column."""
    with pytest.raises(ParseError) as excinfo:
        parse_program("a.\nb :- &sum{x}=.\n")
    assert excinfo.value.line == 2
    assert str(excinfo.value).startswith("2:")


def test_parse_error_at_end_of_input() -> None:
    """Test a missing final period."""
    with pytest.raises(ParseError, match="unexpected end of input"):
        parse_program("a :- b")


def test_term_order_is_significant() -> None:
    """Test that atoms are syntactic unless normalization is requested."""
    text = "a :- &sum{x;y}=4.\nb :- &sum{y;x}=4."
    assert len(parse_program(text).theory_atoms) == 2
    assert len(parse_program(text, normalize=True).theory_atoms) == 1


def test_normalize_atom_merges_and_sorts() -> None:
    """Test term normalization."""
    atom = TheoryAtom.sum([(1, "y"), (2, "x"), (-1, "y"), (1, "x")], Rel.LE, 3)
    assert normalize_atom(atom) == TheoryAtom.sum([(3, "x")], Rel.LE, 3)


def test_normalize_atom_rejects_cancelled_terms() -> None:
    """Test that an atom whose variables cancel is refused."""
    with pytest.raises(ValueError, match="cancel"):
        normalize_atom(TheoryAtom.sum([(1, "x"), (-1, "x")], Rel.EQ, 0))
    with pytest.raises(ParseError):
        parse_program("a :- &sum{x;-1*x}=0.", normalize=True)


def test_repeated_external_directive() -> None:
    """Test that an atom may be declared external only once."""
    with pytest.raises(DirectiveConflict, match=r"^2:\d+: repeated"):
        parse_program("#external &sum{x}>=0.\n#external &sum{x}>=0.")


def test_format_atom() -> None:
    """Test the printed form of theory atoms."""
    assert format_atom(TheoryAtom.sum([(1, "x"), (2, "y")], Rel.NE, -1)) == "&sum{x;2*y}!=-1"
    assert format_atom(TheoryAtom.diff("x", "y", 10)) == "&diff{x-y}<=10"
    assert format_atom(Regular("a")) == "a"


def test_format_rule() -> None:
    """Test the printed form of rules."""
    assert format_rule(Rule(Regular("a"))) == "a."
    assert format_rule(Rule(BOTTOM)) == ":- ."
    rule = Rule(BOTTOM, frozenset({Regular("b")}), frozenset({Regular("a")}))
    assert format_rule(rule) == ":- b, not a."


def test_format_program_round_trip() -> None:
    """Test that printing and parsing reproduces the margin program."""
    program = parse_program("#external &sum{z}>0.\n" + MARGIN)
    text = format_program(program)
    assert text.startswith("#external &sum{z}>0.\n")
    assert parse_program(text) == program


@settings(max_examples=50, deadline=None)
@given(programs(("x", "y", "z")))
def test_round_trip_random_programs(program: Program) -> None:
    """Test the printer against the parser on generated programs."""
    assert parse_program(format_program(program)) == program


def test_infer_partition_running_example(
    running_example: Program, s1: TheoryAtom, s2: TheoryAtom
) -> None:
    """Test external and founded atoms of the two-rule example."""
    s3, s4 = s1.complemented(), s2.complemented()
    assert running_example.partitioned
    assert running_example.externals == frozenset({s1, s3})
    assert running_example.founded == frozenset({s2, s4})
    assert running_example.defined == frozenset({s2})
    assert running_example.theory_atoms == frozenset({s1, s2, s3, s4})


def test_infer_partition_directive_is_external() -> None:
    """Test that #external adds an atom and its complement."""
    program = infer_partition(parse_program("#external &sum{x}>=1.\na."))
    atom = TheoryAtom.sum([(1, "x")], Rel.GE, 1)
    assert program.externals == frozenset({atom, atom.complemented()})
    assert program.founded == frozenset()


def test_infer_partition_rejects_head_in_body() -> None:
    """Test a theory atom occurring in a head and a body."""
    with pytest.raises(PartitionConflict):
        infer_partition(parse_program("&sum{x}=1 :- a.\nb :- &sum{x}=1."))


def test_infer_partition_rejects_head_complement_in_body() -> None:
    """Test a head atom whose complement is external."""
    with pytest.raises(PartitionConflict):
        infer_partition(parse_program("&sum{x}=1 :- a.\nb :- &sum{x}!=1."))


def test_infer_partition_all_external(s1: TheoryAtom, s2: TheoryAtom) -> None:
    """Test the reading where every theory atom is external."""
    program = infer_partition(parse_program(RUNNING_EXAMPLE), all_external=True)
    assert program.all_external
    assert program.founded == frozenset()
    assert program.externals == close_under_complement({s1, s2})


def test_program_variables(running_example: Program) -> None:
    """Test the variables of a program."""
    assert program_variables(running_example) == frozenset({"x", "y", "z"})


def test_diff_complement_stays_difference() -> None:
    """Test that complementing a difference atom gives a difference atom."""
    atom = TheoryAtom.diff("x", "y", 0)
    assert atom.complemented() == TheoryAtom.diff("y", "x", -1)
    assert atom.complemented().complemented() == atom
