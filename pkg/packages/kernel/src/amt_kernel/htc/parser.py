"""Parser for HT_c theories written one formula per statement."""

from dataclasses import dataclass
import logging
from typing import Any

from lark import Lark, Token, v_args

from amt_kernel.errors import ParseError
from amt_kernel.htc.formula import (
    BOT,
    TOP,
    And,
    Formula,
    Impl,
    Or,
    defz,
    linear,
    neg,
    prop,
)
from amt_kernel.htc.models import Signature
from amt_kernel.syntax.atoms import TheoryAtom
from amt_kernel.syntax.parser import ATOM_GRAMMAR, AtomTransformer, parse_with
from amt_kernel.theory_lin.structure import Bounds

logger = logging.getLogger(__name__)

THEORY_GRAMMAR = r"""
start: statement*

?statement: formula "."                                -> formula_stmt
          | "#domain" IDENT "=" INT ".." INT "."       -> domain_decl
          | "#prop" IDENT "."                          -> prop_decl

?formula: disjunction
        | disjunction "->" formula                     -> impl

?disjunction: conjunction
            | disjunction "|" conjunction              -> or_

?conjunction: unary
            | conjunction "&" unary                    -> and_

?unary: primary
      | "not" unary                                    -> not_

?primary: "(" formula ")"
        | "bot"                                        -> bot
        | "top"                                        -> top
        | "def" "(" IDENT ")"                          -> defined
        | tatom                                        -> linear_atom
        | IDENT                                        -> prop_atom
""" + ATOM_GRAMMAR


@dataclass(frozen=True)
class ParsedTheory:
    """Formulas of a theory file together with its declarations."""

    formulas: tuple[Formula, ...] = ()
    domains: tuple[tuple[str, int, int], ...] = ()
    props: tuple[str, ...] = ()

    def signature(self, bounds: Bounds | None = None) -> Signature:
        """Signature of the formulas; ``#domain`` lines override ``bounds``."""
        bounds = bounds or Bounds()
        for name, lo, hi in self.domains:
            bounds = bounds.with_var(name, lo, hi)
        declared = Signature.build(self.props, [d[0] for d in self.domains], bounds)
        return Signature.from_theory(self.formulas, bounds).merge(declared)


class TheoryTransformer(AtomTransformer):
    @v_args(inline=True)
    def impl(self, a: Formula, b: Formula) -> Formula:
        return Impl(a, b)

    @v_args(inline=True)
    def or_(self, a: Formula, b: Formula) -> Formula:
        return Or(a, b)

    @v_args(inline=True)
    def and_(self, a: Formula, b: Formula) -> Formula:
        return And(a, b)

    @v_args(inline=True)
    def not_(self, a: Formula) -> Formula:
        return neg(a)

    def bot(self, _: list[Any]) -> Formula:
        return BOT

    def top(self, _: list[Any]) -> Formula:
        return TOP

    @v_args(inline=True)
    def defined(self, name: Token) -> Formula:
        return defz(str(name))

    @v_args(inline=True)
    def linear_atom(self, atom: TheoryAtom) -> Formula:
        return linear(atom)

    @v_args(inline=True)
    def prop_atom(self, name: Token) -> Formula:
        return prop(str(name))

    @v_args(inline=True)
    def formula_stmt(self, f: Formula) -> Formula:
        return f

    @v_args(meta=True)
    def domain_decl(self, meta: Any, items: list[Token]) -> tuple[str, int, int]:
        name = next(str(t) for t in items if t.type == "IDENT")
        lo, hi = (int(t) for t in items if t.type == "INT")
        if lo > hi:
            msg = f"empty domain {lo}..{hi} for {name}"
            raise ParseError(msg, meta.line, meta.column)
        return name, lo, hi

    @v_args(inline=True)
    def prop_decl(self, name: Token) -> str:
        return str(name)

    def start(self, items: list[Any]) -> ParsedTheory:
        formulas = tuple(i for i in items if not isinstance(i, str | tuple))
        domains = tuple(i for i in items if isinstance(i, tuple))
        props = tuple(i for i in items if isinstance(i, str))
        return ParsedTheory(formulas, domains, props)


_THEORY_PARSER = Lark(THEORY_GRAMMAR, parser="lalr", propagate_positions=True)


def parse_theory(text: str, *, normalize: bool = False) -> ParsedTheory:
    """Parse a theory file: formulas ending in ``.``, ``%`` comments and declarations."""
    theory = parse_with(_THEORY_PARSER, TheoryTransformer(normalize=normalize), text)
    logger.debug("parsed %d formulas", len(theory.formulas))
    return theory
