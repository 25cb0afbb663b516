"""The bracket / Bollobas-Riordan correspondence, verified exactly.

For an oriented diagram L with Seifert-circle ribbon graph G (see
ribbon.from_diagram), writing n = nullity(G), r = rank(G), and
k = components(G):

    bracket(L)(A, B, d) = A^n B^r d^(k-1) * R_G(A*d/B, B*d/A, 1/d)

The two sides are computed through disjoint pipelines (diagram state sum
versus ribbon subgraph sum, sharing only the polynomial ring), so the
equality check cross-validates both. The underlying bijection sends a
state S to the spanning subgraph F(S) containing exactly the edges of
crossings where S differs from the Seifert state, and term by term

    e(G) - e(F) + 2s(F) = alpha(S)
    e(F) - 2s(F)        = beta(S)
    bc(F)               = delta(S)

so each state's bracket monomial A^alpha B^beta d^(delta-1) equals the
transformed subgraph monomial A^(e-e(F)+2s) B^(e(F)-2s) d^(bc-1).

random_diagram generates arbitrary abstract codes, mostly not realizable
in the plane; the identity covers them all, so fuzzing needs no planarity
filter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .diagram import (
    BRACKET_RING,
    DEFAULT_MAX_CROSSINGS,
    CrossingCode,
    EnumerationCapError,
    State,
    VirtualLinkDiagram,
    enumerate_states,
    kauffman_bracket,
    seifert_state,
    split_circles,
)
from .polyring import LaurentPoly, substitute
from .ribbon import (
    RibbonGraph,
    SpanningSubgraph,
    SubgraphStats,
    bollobas_riordan,
    components,
    from_diagram,
    stats,
)

__all__ = [
    "PerStateRow",
    "VerificationReport",
    "state_to_subgraph",
    "check_counting_identities",
    "state_subgraph_rows",
    "verify_identity",
    "random_diagram",
    "random_diagrams",
]


def state_to_subgraph(
    diagram: VirtualLinkDiagram, state: State, graph: RibbonGraph | None = None
) -> SpanningSubgraph:
    """The subgraph containing the crossings where `state` flips Seifert.

    Edge i is included iff state.letters[i] differs from the Seifert
    state's letter at crossing i. This is a bijection from the 2^n states
    onto the 2^n spanning subgraphs of from_diagram(diagram).
    """
    if graph is None:
        graph = from_diagram(diagram)
    reference = seifert_state(diagram)
    included = frozenset(
        i for i, (a, b) in enumerate(zip(state.letters, reference.letters)) if a != b
    )
    return SpanningSubgraph(graph, included)


def check_counting_identities(
    diagram: VirtualLinkDiagram, state: State, graph: RibbonGraph | None = None
) -> bool:
    """True iff the three per-state counting identities hold at `state`."""
    sub = state_to_subgraph(diagram, state, graph)
    st = stats(sub)
    e_total = len(sub.parent.edges)
    return (
        state.alpha == e_total - st.e + st.s_twice
        and state.beta == st.e - st.s_twice
        and split_circles(diagram, state) == st.bc
    )


@dataclass(frozen=True)
class PerStateRow:
    """One state with its image subgraph, statistics, and term check."""

    state: State
    delta: int
    included: frozenset[int]
    stats: SubgraphStats
    term_ok: bool


@dataclass(frozen=True)
class VerificationReport:
    """Both sides of the identity plus the per-state term comparison."""

    lhs: LaurentPoly
    rhs: LaurentPoly
    equal: bool
    per_state: tuple[PerStateRow, ...]


def state_subgraph_rows(
    diagram: VirtualLinkDiagram, graph: RibbonGraph | None = None
) -> tuple[PerStateRow, ...]:
    """All 2^n states in word order, each with its subgraph data.

    term_ok records whether the state's bracket monomial matches the
    transformed subgraph monomial, which is exactly the three counting
    identities.
    """
    if graph is None:
        graph = from_diagram(diagram)
    e_total = len(graph.edges)
    reference = seifert_state(diagram)
    rows = []
    for state in enumerate_states(diagram):
        included = frozenset(
            i for i, (a, b) in enumerate(zip(state.letters, reference.letters)) if a != b
        )
        st = stats(SpanningSubgraph(graph, included))
        delta = split_circles(diagram, state)
        term_ok = (
            state.alpha == e_total - st.e + st.s_twice
            and state.beta == st.e - st.s_twice
            and delta == st.bc
        )
        rows.append(PerStateRow(state, delta, included, st, term_ok))
    return tuple(rows)


def verify_identity(
    diagram: VirtualLinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> VerificationReport:
    """Check the identity on one diagram, exactly and term by term.

    lhs is the bracket state sum. rhs is A^n B^r d^(k-1) times the
    Bollobas-Riordan polynomial of the Seifert-circle graph under
    x = A*d/B, y = B*d/A, z = 1/d. equal is structural polynomial
    equality; per_state localizes any failure to single states.
    """
    n_crossings = diagram.n
    if n_crossings > max_crossings:
        raise EnumerationCapError(
            f"{n_crossings} crossings exceeds the enumeration cap of {max_crossings}"
        )
    graph = from_diagram(diagram)
    lhs = kauffman_bracket(diagram, max_crossings)
    br = bollobas_riordan(graph, max_crossings)
    k = components(SpanningSubgraph(graph, frozenset(range(graph.e))))
    rank = graph.v - k
    nullity = graph.e - rank
    prefactor = BRACKET_RING.monomial(1, {"A": nullity, "B": rank, "d": k - 1})
    images = {
        "x": BRACKET_RING.monomial(1, {"A": 1, "d": 1, "B": -1}),
        "y": BRACKET_RING.monomial(1, {"B": 1, "d": 1, "A": -1}),
        "z": BRACKET_RING.monomial(1, {"d": -1}),
    }
    rhs = prefactor * substitute(br, images)
    rows = state_subgraph_rows(diagram, graph)
    return VerificationReport(lhs, rhs, lhs == rhs, rows)


def random_diagram(n_crossings: int, seed: int) -> VirtualLinkDiagram:
    """Deterministic pseudo-random valid code with n_crossings crossings.

    Each crossing has two outgoing ends (under at s2, over) and two
    incoming ends (under at s0, over); a random bijection between outgoing
    and incoming ends defines the 2n arcs, and a random bit per crossing
    places the incoming over-end at s1 or s3. Any such code is a valid
    virtual diagram, so no rejection sampling is needed.
    """
    if n_crossings < 1:
        raise ValueError("n_crossings must be at least 1")
    rng = random.Random(seed)
    n = n_crossings
    over_in = [3 if rng.getrandbits(1) else 1 for _ in range(n)]
    outgoing = [(ci, kind) for ci in range(n) for kind in (0, 1)]
    incoming = [(ci, kind) for ci in range(n) for kind in (0, 1)]
    rng.shuffle(incoming)
    slots = [[0, 0, 0, 0] for _ in range(n)]
    for arc, ((co, ko), (ci, ki)) in enumerate(zip(outgoing, incoming), start=1):
        slots[co][2 if ko == 0 else 4 - over_in[co]] = arc
        slots[ci][0 if ki == 0 else over_in[ci]] = arc
    return VirtualLinkDiagram(tuple(CrossingCode(tuple(s)) for s in slots))


def random_diagrams(count: int, max_crossings: int, seed: int) -> Iterator[VirtualLinkDiagram]:
    """Deterministic fuzz stream: crossing counts uniform in [1, max_crossings]."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_crossings)
        yield random_diagram(n, rng.getrandbits(64))
