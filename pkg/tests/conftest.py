"""Shared fixtures: the bundled diagram corpus."""

from __future__ import annotations

from pathlib import Path

import pytest

from vlinkpoly import VirtualLinkDiagram, parse_diagram

DIAGRAMS = Path(__file__).resolve().parents[1] / "diagrams"

# Pairs that must share a Jones polynomial but not a bracket: the second
# diagram differs from the first by a single local move that changes the
# writhe (kink insertion) or the state count (strand slide) only.
MOVE_PAIRS = [
    ("trefoil", "trefoil_r1"),
    ("trefoil", "trefoil_r2"),
    ("paper_knot", "paper_knot_r1"),
    ("paper_knot", "paper_knot_r2"),
]


def load(name: str) -> VirtualLinkDiagram:
    return parse_diagram((DIAGRAMS / f"{name}.vld").read_text())


@pytest.fixture(scope="session")
def corpus() -> dict[str, VirtualLinkDiagram]:
    return {p.stem: parse_diagram(p.read_text()) for p in sorted(DIAGRAMS.glob("*.vld"))}


@pytest.fixture(scope="session")
def paper_knot() -> VirtualLinkDiagram:
    return load("paper_knot")
