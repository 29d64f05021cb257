"""Tests for HT_c satisfaction, model enumeration and the theory parser."""

from hypothesis import given, settings, strategies as st
import pytest

from amt_kernel.errors import BoxTooLarge, ParseError, SignatureMismatch
from amt_kernel.htc import (
    BOT,
    EQUIVALENT,
    TOP,
    And,
    Counterexample,
    DefZ,
    Formula,
    Impl,
    Interpretation,
    Linear,
    Or,
    PropTrue,
    Signature,
    Sort,
    atom_den_contains,
    conj,
    defz,
    disj,
    equilibrium_models,
    equiv_models,
    evaluate,
    format_formula,
    holds,
    ht_entails,
    ht_models,
    iff,
    linear,
    minimality_witness,
    neg,
    parse_theory,
    prop,
    top,
)
from amt_kernel.syntax import Rel, TheoryAtom
from amt_kernel.theory_lin import Bounds, sat_L
from amt_kernel.valuation import TRUE, Valuation, Value
from strategies import atom_sets, formulas

X_NONNEG = TheoryAtom.sum([(1, "x")], Rel.GE, 0)
X_NEG = TheoryAtom.sum([(1, "x")], Rel.LT, 0)
EMPTY = Valuation()
P = Valuation({"p": TRUE})


def test_atom_den_contains(s1: TheoryAtom) -> None:
    """Test membership for each kind of constraint atom."""
    assert atom_den_contains(PropTrue("p_a"), Valuation({"p_a": TRUE}))
    assert not atom_den_contains(PropTrue("p_a"), EMPTY)
    assert atom_den_contains(Linear(s1), Valuation({"x": 2, "y": 2, "p_a": TRUE}))
    assert atom_den_contains(DefZ("x"), Valuation({"x": -7}))
    assert not atom_den_contains(DefZ("x"), EMPTY)


def test_evaluate_here_and_there() -> None:
    """Test that a proposition true only there makes neither it nor its negation hold."""
    assert not evaluate(prop("p"), EMPTY, P)
    assert not evaluate(neg(prop("p")), EMPTY, P)
    assert evaluate(neg(neg(prop("p"))), EMPTY, P)
    assert evaluate(Or(prop("p"), neg(prop("p"))), P, P)


def test_evaluate_constants(s1: TheoryAtom) -> None:
    """Test the constants and a linear atom in a total interpretation."""
    t = Valuation({"x": 2, "y": 2})
    assert evaluate(linear(s1), t, t)
    for h, t in [(EMPTY, EMPTY), (EMPTY, P), (P, P)]:
        assert not evaluate(BOT, h, t)
        assert evaluate(TOP, h, t)


def test_formula_builders() -> None:
    """Test the n-ary builders and their units."""
    p, q = prop("p"), prop("q")
    assert conj([]) == top() == TOP
    assert disj([]) == BOT
    assert conj([p, q]) == And(p, q)
    assert disj([p, q, p]) == Or(Or(p, q), p)
    assert iff(p, q) == And(Impl(p, q), Impl(q, p))
    assert neg(p) == Impl(p, BOT)


def test_interpretation_requires_inclusion() -> None:
    """Test that the here-world must be included in the there-world."""
    assert Interpretation(EMPTY, P).h == EMPTY
    assert Interpretation(P, P).total
    with pytest.raises(ValueError, match="not included"):
        Interpretation(P, EMPTY)


def test_ht_models_of_a_fact() -> None:
    """Test that a fact forces the proposition in both worlds."""
    sig = Signature.build(props=["p"])
    assert list(ht_models([prop("p")], sig)) == [Interpretation(P, P)]


def test_ht_models_of_empty_theory() -> None:
    """Test that every interpretation is a model of the empty theory."""
    sig = Signature.build(props=["p"])
    assert len(list(ht_models([], sig))) == 3


def test_ht_models_of_excluded_middle_on_x() -> None:
    """Test that the disjunction forces x to be defined in the here-world."""
    sig = Signature.build(ints=["x"], bounds=Bounds(-1, 1))
    models = list(ht_models([Or(linear(X_NONNEG), linear(X_NEG))], sig))
    assert len(models) == 3
    assert all(m.total and "x" in m.h for m in models)


def test_equilibrium_model_of_a_fact() -> None:
    """Test the single equilibrium model of a fact."""
    sig = Signature.build(props=["p"])
    assert list(equilibrium_models([prop("p")], sig)) == [P]


def test_equilibrium_models_of_defined_atom() -> None:
    """Test that def(x) has one equilibrium model per value."""
    sig = Signature.build(ints=["x"], bounds=Bounds(-1, 1))
    models = list(equilibrium_models([defz("x")], sig))
    assert sorted(m["x"] for m in models) == [-1, 0, 1]


def test_minimality_witness() -> None:
    """Test the here-world that defeats a non-minimal total model."""
    theory = [Or(prop("p"), prop("q"))]
    both = Valuation({"p": TRUE, "q": TRUE})
    assert minimality_witness(theory, both) == Valuation({"q": TRUE})
    assert minimality_witness(theory, P) is None
    sig = Signature.build(props=["p", "q"])
    assert list(equilibrium_models(theory, sig)) == [Valuation({"q": TRUE}), P]


def test_equiv_models_with_top() -> None:
    """Test that adding top changes nothing."""
    sig = Signature.build(props=["p"])
    assert equiv_models([prop("p")], [prop("p"), TOP], sig) == EQUIVALENT


def test_equiv_models_double_negation() -> None:
    """Test the counterexample separating p from not not p."""
    sig = Signature.build(props=["p"])
    verdict = equiv_models([prop("p")], [neg(neg(prop("p")))], sig)
    assert verdict == Counterexample(Interpretation(EMPTY, P), in_first=False)
    assert "second theory only" in str(verdict)


def test_equiv_models_shared_context() -> None:
    """Test that formulas common to both theories still restrict the compared models."""
    sig = Signature.build(props=["p", "q"])
    p, q = prop("p"), prop("q")
    assert equiv_models([neg(p), p], [neg(p), neg(neg(p))], sig) == EQUIVALENT
    verdict = equiv_models([q, p], [q, neg(neg(p))], sig)
    here, there = Valuation({"q": TRUE}), Valuation({"p": TRUE, "q": TRUE})
    assert verdict == Counterexample(Interpretation(here, there), in_first=False)


def test_defined_is_excluded_middle() -> None:
    """Test that def(x) is equivalent to x >= 0 | x < 0."""
    for lo, hi in [(-1, 1), (0, 2), (-3, -1)]:
        sig = Signature.build(ints=["x"], bounds=Bounds(lo, hi))
        disjunction = Or(linear(X_NONNEG), linear(X_NEG))
        assert equiv_models([defz("x")], [disjunction], sig) == EQUIVALENT


def test_ht_entails() -> None:
    """Test entailment and its counterexample."""
    sig = Signature.build(props=["p"], ints=["x"], bounds=Bounds(-1, 1))
    gamma = [defz("x")]
    assert ht_entails(gamma, iff(linear(X_NONNEG), neg(neg(linear(X_NONNEG)))), sig) is None
    verdict = ht_entails([], iff(prop("p"), neg(neg(prop("p")))), sig)
    assert verdict is not None
    assert verdict.in_first


def test_signature_checks() -> None:
    """Test undeclared variables, clashing sorts and the box cap."""
    with pytest.raises(SignatureMismatch, match="not declared"):
        list(ht_models([prop("p")], Signature()))
    with pytest.raises(SignatureMismatch):
        Signature.from_theory([prop("x"), defz("x")])
    with pytest.raises(SignatureMismatch):
        Signature.build(props=["p"]).merge(Signature.build(ints=["p"]))
    sig = Signature.build(ints=["x", "y"], bounds=Bounds(-10, 10))
    assert sig.cells() == 22 * 22
    with pytest.raises(BoxTooLarge):
        list(ht_models([], sig, max_cells=100))


def test_signature_from_theory(s1: TheoryAtom) -> None:
    """Test sorts and intervals inferred from formulas."""
    sig = Signature.from_theory([Impl(linear(s1), prop("a"))], Bounds(-2, 2).with_var("y", 0, 1))
    decls = sig.as_dict()
    assert sig.names == ["a", "x", "y"]
    assert decls["a"].sort is Sort.PROP
    assert (decls["y"].lo, decls["y"].hi) == (0, 1)
    assert str(decls["x"]) == "x: int[-2..2]"


@st.composite
def interpretations(draw: st.DrawFn) -> Interpretation:
    t: dict[str, Value] = {}
    for name in ("p", "q"):
        if draw(st.booleans()):
            t[name] = TRUE
    value = draw(st.sampled_from([None, -1, 0, 1]))
    if value is not None:
        t["x"] = value
    there = Valuation(t)
    kept = draw(st.lists(st.sampled_from(sorted(t)), unique=True)) if t else []
    return Interpretation(there.restrict(kept), there)


@settings(max_examples=1000, deadline=None)
@given(formulas(), interpretations())
def test_persistence(f: Formula, i: Interpretation) -> None:
    """Test that truth in the here-world carries over to the there-world."""
    if evaluate(f, i.h, i.t):
        assert holds(f, i.t)


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(formulas(), interpretations())
def test_persistence_full(f: Formula, i: Interpretation) -> None:
    """Test persistence on ten thousand random formulas."""
    if evaluate(f, i.h, i.t):
        assert holds(f, i.t)


@settings(max_examples=200, deadline=None)
@given(atom_sets())
def test_theory_and_htc_satisfiability_agree(atoms: list[TheoryAtom]) -> None:
    """Test box satisfiability of atom sets against their HT_c reading."""
    bounds = Bounds(-2, 2)
    theory = [linear(s) for s in atoms]
    sig = Signature.from_theory(theory, bounds)
    has_model = next(ht_models(theory, sig), None) is not None
    assert has_model == (sat_L(atoms, bounds) is not None)


def test_equilibrium_models_are_minimal_total_models() -> None:
    """Test equilibrium models against an exhaustive here-world sweep."""
    theory = [
        Impl(neg(prop("q")), prop("p")),
        Impl(prop("p"), defz("x")),
        Or(linear(X_NONNEG), neg(linear(X_NONNEG))),
    ]
    sig = Signature.from_theory(theory, Bounds(-1, 1))
    models = set(equilibrium_models(theory, sig))
    assert models
    for i in ht_models(theory, sig):
        if i.total:
            smaller = [j for j in ht_models(theory, sig) if j.t == i.t and not j.total]
            assert (i.t in models) == (not smaller)


def test_parse_theory_precedence() -> None:
    """Test operator precedence and associativity."""
    (f,) = parse_theory("p -> q | r & not s -> t.").formulas
    assert f == Impl(prop("p"), Impl(Or(prop("q"), And(prop("r"), neg(prop("s")))), prop("t")))


def test_parse_theory_atoms_and_keywords() -> None:
    """Test constants, def and linear atoms."""
    text = "% comment\nbot | top.\ndef(x) -> &sum{x;-2*y}!=3.\n&diff{x-y}<=0."
    first, second, third = parse_theory(text).formulas
    assert first == Or(BOT, TOP)
    assert second == Impl(defz("x"), linear(TheoryAtom.sum([(1, "x"), (-2, "y")], Rel.NE, 3)))
    assert third == linear(TheoryAtom.diff("x", "y", 0))


def test_parse_theory_declarations() -> None:
    """Test domain and proposition declarations."""
    parsed = parse_theory("#domain x = -1..1.\n#prop r.\ndef(x).")
    sig = parsed.signature(Bounds(-5, 5))
    assert sig.names == ["r", "x"]
    assert (sig.as_dict()["x"].lo, sig.as_dict()["x"].hi) == (-1, 1)


def test_parse_theory_errors() -> None:
    """Test syntax errors and empty domains."""
    with pytest.raises(ParseError) as excinfo:
        parse_theory("p.\np & .")
    assert excinfo.value.line == 2
    with pytest.raises(ParseError, match="empty domain"):
        parse_theory("#domain x = 2..1.")


@settings(max_examples=200, deadline=None)
@given(formulas(max_leaves=8))
def test_format_formula_round_trip(f: Formula) -> None:
    """Test that printed formulas parse back to themselves."""
    assert parse_theory(format_formula(f) + ".").formulas == (f,)
