"""Difference constraints decided exactly by negative-cycle detection."""

from collections.abc import Iterable
import logging

import networkx as nx

from amt_kernel.errors import TheoryMismatch
from amt_kernel.syntax import Kind, Rel, TheoryAtom
from amt_kernel.valuation import Valuation

logger = logging.getLogger(__name__)

# Source node of the constraint graph; a tuple never clashes with a variable name.
_SOURCE = ("__source__",)


def difference_edges(atom: TheoryAtom) -> list[tuple[str, str, int]]:
    """Edges ``(y, x, k)`` encoding ``x - y <= k`` for a difference-shaped atom.

    ``&sum`` atoms of the shape ``x + -1*y REL k`` (in either term order) are
    accepted for every relation except ``!=``.
    """
    if atom.kind is Kind.DIFF:
        return [(atom.terms[1].var, atom.terms[0].var, atom.rhs)]
    coefs = sorted((t.coef, t.var) for t in atom.terms)
    if len(coefs) != 2 or coefs[0][0] != -1 or coefs[1][0] != 1:  # noqa: PLR2004
        msg = f"{atom} is not a difference constraint"
        raise TheoryMismatch(msg)
    y, x, k = coefs[0][1], coefs[1][1], atom.rhs
    match atom.rel:
        case Rel.LE:
            return [(y, x, k)]
        case Rel.LT:
            return [(y, x, k - 1)]
        case Rel.GE:
            return [(x, y, -k)]
        case Rel.GT:
            return [(x, y, -k - 1)]
        case Rel.EQ:
            return [(y, x, k), (x, y, -k)]
        case _:
            msg = f"{atom} is a disequality, which difference logic cannot express"
            raise TheoryMismatch(msg)


def constraint_graph(atoms: Iterable[TheoryAtom]) -> nx.DiGraph | None:
    """Build the constraint graph, or ``None`` if a self loop is already infeasible."""
    graph = nx.DiGraph()
    for atom in atoms:
        for source, target, weight in difference_edges(atom):
            graph.add_node(source)
            graph.add_node(target)
            if source == target:
                if weight < 0:
                    return None
                continue
            if graph.has_edge(source, target):
                weight = min(weight, graph[source][target]["weight"])
            graph.add_edge(source, target, weight=weight)
    for node in list(graph.nodes):
        graph.add_edge(_SOURCE, node, weight=0)
    return graph


def sat_D(atoms: Iterable[TheoryAtom]) -> Valuation | None:  # noqa: N802
    """Decide a set of difference constraints over the integers.

    The witness assigns each variable its shortest-path distance from a fresh
    source node, which satisfies ``x - y <= k`` along every edge.
    """
    graph = constraint_graph(atoms)
    if graph is None:
        logger.debug("sat_D: infeasible self loop")
        return None
    if graph.number_of_nodes() == 0:
        return Valuation()
    try:
        distances = nx.single_source_bellman_ford_path_length(graph, _SOURCE)
    except nx.NetworkXUnbounded:
        logger.debug("sat_D: negative cycle")
        return None
    return Valuation({x: int(d) for x, d in distances.items() if x != _SOURCE})
