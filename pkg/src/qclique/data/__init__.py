"""Bundled example graph files."""
from __future__ import annotations

from importlib import resources

from ..graphs import Graph, parse_graph

BUNDLED = ("demo6", "triangle3", "onetriangle4", "diagsquare4", "complete4", "star4")


def bundled_graph_text(name: str) -> str:
    if name not in BUNDLED:
        raise KeyError(f"no bundled graph named {name!r}; available: {', '.join(BUNDLED)}")
    return resources.files(__package__).joinpath(f"{name}.col").read_text()


def load_bundled(name: str) -> Graph:
    return parse_graph(bundled_graph_text(name))
