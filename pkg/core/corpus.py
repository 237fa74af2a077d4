"""Graph corpora for the invariant suite.

``exhaustive:N`` is every connected graph on 1..N vertices from the networkx
graph atlas (one representative per isomorphism class, N <= 7).
``random:COUNT,N,P,SEED`` is COUNT connected graphs on N vertices; graph i
uses the i-th output of an :class:`~core.generators.Lcg64` seeded with SEED.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

import networkx as nx

from core.errors import FormatParseError
from core.generators import Lcg64, random_connected
from core.graph import Graph

logger = logging.getLogger(__name__)

ATLAS_MAX_VERTICES = 7


@dataclass(frozen=True)
class CorpusSpec:
    kind: str
    max_vertices: int
    count: int = 0
    edge_probability: float = 0.0
    seed: int = 0

    def __str__(self) -> str:
        if self.kind == "exhaustive":
            return f"exhaustive:{self.max_vertices}"
        return f"random:{self.count},{self.max_vertices},{self.edge_probability!r},{self.seed}"


def parse_corpus_spec(text: str) -> CorpusSpec:
    kind, _, body = text.strip().partition(":")
    values = [v.strip() for v in body.split(",")] if body else []
    if kind == "exhaustive" and len(values) == 1:
        n = _number(int, values[0])
        if not 1 <= n <= ATLAS_MAX_VERTICES:
            raise FormatParseError(f"exhaustive corpus supports 1..{ATLAS_MAX_VERTICES} vertices, got {n}")
        return CorpusSpec("exhaustive", n)
    if kind == "random" and len(values) == 4:
        count, n, seed = (_number(int, values[i]) for i in (0, 1, 3))
        p = _number(float, values[2])
        if count < 0 or n < 1 or not 0.0 <= p <= 1.0:
            raise FormatParseError(f"random corpus parameters out of range: {body}")
        return CorpusSpec("random", n, count, p, seed)
    raise FormatParseError(f"unknown corpus {text!r}; expected exhaustive:N or random:COUNT,N,P,SEED")


def _number(kind: type, token: str):
    try:
        return kind(token)
    except ValueError:
        raise FormatParseError(f"corpus parameter {token!r} is not a number") from None


def iter_corpus(spec: CorpusSpec) -> Iterator[tuple[int, Graph]]:
    """``(graph_id, graph)`` pairs in a fixed order."""
    if spec.kind == "exhaustive":
        graph_id = 0
        for atlas_graph in nx.graph_atlas_g():
            n = atlas_graph.number_of_nodes()
            if n == 0 or n > spec.max_vertices or not nx.is_connected(atlas_graph):
                continue
            g, _ = Graph.from_networkx(atlas_graph)
            yield graph_id, g
            graph_id += 1
        logger.info("Exhaustive corpus up to n=%d: %d graphs", spec.max_vertices, graph_id)
        return
    seeds = Lcg64(spec.seed)
    for graph_id in range(spec.count):
        yield graph_id, random_connected(spec.max_vertices, spec.edge_probability, seeds.next_u64())
