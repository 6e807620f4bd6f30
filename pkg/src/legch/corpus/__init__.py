"""Bundled example knots: unknot, trefoil, trefoil after a strand-slide that
adds a cancelling crossing pair, and the island diagram where flooding fails.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..algebra import DGA, HeightAssignment
from ..diagram import AreaPatch, LagrangianDiagramData
from ..fileio import KnotData, parse_knot_file

NAMES = ("unknot", "trefoil", "trefoil_rii", "island")


def corpus_path(name: str) -> Path:
    if name not in NAMES:
        raise ValueError(f"unknown corpus knot {name!r}; choose from {NAMES}")
    return Path(str(resources.files(__package__).joinpath(f"{name}.json")))


def load(name: str) -> KnotData:
    return parse_knot_file(corpus_path(name).read_bytes())


def trefoil_after_rii(delta: Fraction) -> KnotData:
    """The trefoil diagram with an extra finger pushed through near q4, creating
    crossings a (grading 1) and b (grading 0) whose bigon has area ``delta``.

    Valid for 0 < delta < 1; the shipped trefoil_rii.json uses delta = 0.3.
    """
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    dga = DGA.from_data(
        [("q1", 1), ("q2", 1), ("q3", 0), ("q4", 0), ("q5", 0), ("a", 1), ("b", 0)],
        {
            "q1": [[], ["q5"], ["q5", "q4", "q3"], ["q3"]],
            "q2": [[], ["q3"], ["q3", "q4", "q5"], ["q5"]],
            "q3": [],
            "q4": [],
            "q5": [],
            "a": [["b"], ["q4"]],
            "b": [],
        },
    )
    gid = {g.name: g.gid for g in dga.generators}
    patches = (
        AreaPatch(((gid["q1"], 1),)),
        AreaPatch(((gid["q2"], 1),)),
        AreaPatch(
            (
                (gid["q1"], 1),
                (gid["q3"], -1),
                (gid["q4"], -1),
                (gid["q5"], -1),
                (gid["a"], -1),
                (gid["b"], 1),
            )
        ),
        AreaPatch(((gid["q2"], 1), (gid["q3"], -1), (gid["q4"], -1), (gid["q5"], -1))),
        AreaPatch(((gid["q3"], 1), (gid["a"], 1), (gid["b"], -1))),
        AreaPatch(((gid["q4"], 1),)),
        AreaPatch(((gid["q4"], 1), (gid["q5"], 1))),
        AreaPatch(((gid["a"], 1), (gid["b"], -1))),
    )
    diagram = LagrangianDiagramData(
        crossings=tuple(range(len(dga))), patches=patches, ng_resolved=False
    )
    heights = HeightAssignment(
        {
            gid["q1"]: Fraction(4),
            gid["q2"]: Fraction(4),
            gid["q3"]: Fraction(1),
            gid["q4"]: Fraction(1),
            gid["q5"]: Fraction(1),
            gid["a"]: 2 + delta,
            gid["b"]: Fraction(2),
        }
    )
    return KnotData(
        dga=dga,
        diagram=diagram,
        heights=heights,
        meta={"name": "trefoil_rii", "bigon_area": delta},
    )
