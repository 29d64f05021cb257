"""Parser for ground T-logic programs.

Built on a LALR lark grammar. The theory-atom part of the grammar and its
transformer are shared with the HT_c formula parser.
"""

import logging
from typing import Any

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from amt_kernel.errors import DirectiveConflict, KernelError, ParseError
from amt_kernel.syntax.atoms import (
    BOTTOM,
    Atom,
    Bottom,
    Program,
    Regular,
    Rel,
    Rule,
    TheoryAtom,
    normalize_atom,
)

logger = logging.getLogger(__name__)

ATOM_GRAMMAR = r"""
tatom: "&sum" "{" term (";" term)* "}" rel INT      -> sum_atom
     | "&diff" "{" IDENT "-" IDENT "}" rel INT     -> diff_atom

term: INT "*" IDENT     -> scaled
    | IDENT             -> unit

rel: LE | GE | NE | EQ | LT | GT

LE: "<="
GE: ">="
NE: "!="
EQ: "="
LT: "<"
GT: ">"

IDENT: /[A-Za-z_][A-Za-z0-9_]*/
INT: /-?[0-9]+/
COMMENT: /%[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

PROGRAM_GRAMMAR = r"""
start: statement*

?statement: rule
          | directive

directive: "#external" tatom "."

rule: atom "."                  -> fact
    | atom ":-" body "."        -> normal
    | ":-" body "."             -> constraint

body: (literal ("," literal)*)?

literal: atom                   -> pos
       | "not" atom             -> neg

?atom: IDENT                    -> regular
     | tatom
""" + ATOM_GRAMMAR


class AtomTransformer(Transformer):
    """Builds ``TheoryAtom`` values from ``tatom`` subtrees."""

    def __init__(self, *, normalize: bool = False) -> None:
        super().__init__()
        self.normalize = normalize

    @v_args(inline=True)
    def scaled(self, coef: Token, name: Token) -> tuple[int, str]:
        return int(coef), str(name)

    @v_args(inline=True)
    def unit(self, name: Token) -> tuple[int, str]:
        return 1, str(name)

    @v_args(inline=True)
    def rel(self, token: Token) -> Token:
        return token

    def sum_atom(self, items: list[Any]) -> TheoryAtom:
        *terms, rel, rhs = items
        atom = TheoryAtom.sum(terms, Rel(str(rel)), int(rhs))
        if not self.normalize:
            return atom
        try:
            return normalize_atom(atom)
        except ValueError as e:
            raise ParseError(str(e), rel.line, rel.column) from e

    @v_args(inline=True)
    def diff_atom(self, x: Token, y: Token, rel: Token, rhs: Token) -> TheoryAtom:
        if str(rel) != Rel.LE.value:
            msg = f"difference atoms only take '<=', got {rel!s}"
            raise ParseError(msg, rel.line, rel.column)
        return TheoryAtom.diff(str(x), str(y), int(rhs))


class ProgramTransformer(AtomTransformer):
    """Builds a ``Program`` from the parse tree."""

    @v_args(inline=True)
    def regular(self, name: Token) -> Regular:
        return Regular(str(name))

    @v_args(inline=True)
    def pos(self, atom: Atom) -> tuple[bool, Atom]:
        return True, atom

    @v_args(inline=True)
    def neg(self, atom: Atom) -> tuple[bool, Atom]:
        return False, atom

    def body(self, items: list[tuple[bool, Atom]]) -> list[tuple[bool, Atom]]:
        return items

    @v_args(inline=True)
    def fact(self, head: Atom) -> Rule:
        return Rule(head)

    @v_args(inline=True)
    def normal(self, head: Atom, body: list[tuple[bool, Atom]]) -> Rule:
        return _make_rule(head, body)

    @v_args(inline=True)
    def constraint(self, body: list[tuple[bool, Atom]]) -> Rule:
        return _make_rule(BOTTOM, body)

    @v_args(meta=True)
    def directive(self, meta: Any, items: list[TheoryAtom]) -> tuple[TheoryAtom, int, int]:
        return items[0], meta.line, meta.column

    def start(self, items: list[Any]) -> Program:
        rules: list[Rule] = []
        directives: list[TheoryAtom] = []
        for item in items:
            if isinstance(item, Rule):
                rules.append(item)
                continue
            atom, line, column = item
            if atom in directives:
                msg = f"{line}:{column}: repeated #external for {atom}"
                raise DirectiveConflict(msg)
            directives.append(atom)
        return Program.from_rules(rules, directives)


def _make_rule(head: Atom | Bottom, body: list[tuple[bool, Atom]]) -> Rule:
    pbody = frozenset(a for positive, a in body if positive)
    nbody = frozenset(a for positive, a in body if not positive)
    return Rule(head, pbody, nbody)


def _end_position(text: str) -> tuple[int, int]:
    lines = text.split("\n")
    return len(lines), len(lines[-1]) + 1


def _describe(error: UnexpectedInput) -> str:
    if isinstance(error, UnexpectedCharacters):
        return f"unexpected character {error.char!r}"
    if isinstance(error, UnexpectedEOF):
        return "unexpected end of input"
    token = getattr(error, "token", None)
    if token is None or token.type == "$END":
        return "unexpected end of input"
    return f"unexpected token {str(token)!r}"


def parse_with(parser: Lark, transformer: Transformer, text: str) -> Any:
    """Parse ``text`` and transform the tree, mapping lark errors to ``ParseError``."""
    try:
        tree = parser.parse(text)
    except UnexpectedInput as e:
        line, column = e.line, e.column
        if line is None or column is None or line < 1:
            line, column = _end_position(text)
        raise ParseError(_describe(e), line, column) from e
    try:
        return transformer.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, KernelError):
            raise e.orig_exc from e
        raise


_PROGRAM_PARSER = Lark(PROGRAM_GRAMMAR, parser="lalr", propagate_positions=True)


def parse_program(text: str, *, normalize: bool = False) -> Program:
    """Parse program text into a ``Program`` with no partition applied.

    With ``normalize`` set, theory atoms are brought to a canonical term order
    so that ``&sum{x;y}=4`` and ``&sum{y;x}=4`` denote the same atom.
    """
    program = parse_with(_PROGRAM_PARSER, ProgramTransformer(normalize=normalize), text)
    logger.debug(
        "parsed %d rules, %d regular atoms, %d theory atoms",
        len(program.rules),
        len(program.regulars),
        len(program.theory_atoms),
    )
    return program
