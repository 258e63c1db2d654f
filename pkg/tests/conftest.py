import itertools

import networkx as nx
import pytest

from isodom.graph import Graph

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_counts(g: Graph, isolate: bool) -> list[int]:
    """Independent count via networkx predicates over itertools.combinations."""
    h = to_nx(g)
    counts = [0] * (g.n + 1)
    for r in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            chosen = set(s)
            if not nx.is_dominating_set(h, chosen):
                continue
            if isolate and not any(h.subgraph(chosen).degree(v) == 0 for v in chosen):
                continue
            counts[r] += 1
    return counts


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((name, ok, detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
