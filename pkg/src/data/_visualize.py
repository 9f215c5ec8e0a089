from typing import Optional

import graphviz

from src.structs import Ordering, Tournament


def tournament_to_dot(t: Tournament, ordering: Optional[Ordering] = None) -> graphviz.Digraph:
    """Graphviz drawing of a tournament with the vertices laid out left to right in the given
    order (identity by default). Forward edges are grey, backward edges red and labelled."""
    ordering = ordering if ordering is not None else Ordering.identity(t.n)
    position = ordering.positions

    dot = graphviz.Digraph(name="tournament", engine="neato")
    dot.attr(overlap="false", splines="curved")
    for index, vertex in enumerate(ordering):
        dot.node(str(vertex), label=str(vertex), pos=f"{2 * index},0!")

    for u, v in t.edges():
        if position[u] > position[v]:
            dot.edge(str(u), str(v), color="red", fontcolor="red", label="backward")
        else:
            dot.edge(str(u), str(v), color="grey")
    return dot


def save_dot(t: Tournament, path: str, ordering: Optional[Ordering] = None) -> None:
    """Write the DOT source of the drawing. Rendering it needs the Graphviz binaries,
    e.g. `neato -Tpng file.dot -o file.png`."""
    with open(path, mode="w", encoding="utf-8") as f:
        f.write(tournament_to_dot(t, ordering).source)
