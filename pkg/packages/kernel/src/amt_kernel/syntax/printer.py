"""Pretty printer for the concrete program syntax."""

from amt_kernel.syntax.atoms import Atom, Bottom, Kind, Program, Rule, TheoryAtom, atom_sort_key


def _format_term(coef: int, var: str) -> str:
    return var if coef == 1 else f"{coef}*{var}"


def format_atom(atom: Atom | Bottom) -> str:
    """Render an atom in the grammar accepted by ``parse_program``."""
    if not isinstance(atom, TheoryAtom):
        return str(atom)
    if atom.kind is Kind.DIFF:
        x, y = atom.terms[0].var, atom.terms[1].var
        return f"&diff{{{x}-{y}}}<={atom.rhs}"
    terms = ";".join(_format_term(t.coef, t.var) for t in atom.terms)
    return f"&sum{{{terms}}}{atom.rel.value}{atom.rhs}"


def format_body(rule: Rule) -> str:
    positive = [format_atom(a) for a in sorted(rule.pbody, key=atom_sort_key)]
    negative = [f"not {format_atom(a)}" for a in sorted(rule.nbody, key=atom_sort_key)]
    return ", ".join(positive + negative)


def format_rule(rule: Rule) -> str:
    body = format_body(rule)
    if isinstance(rule.head, Bottom):
        return f":- {body}." if body else ":- ."
    head = format_atom(rule.head)
    return f"{head} :- {body}." if body else f"{head}."


def format_program(program: Program) -> str:
    lines = [f"#external {format_atom(s)}." for s in program.directives]
    lines.extend(format_rule(r) for r in program.rules)
    return "".join(f"{line}\n" for line in lines)
