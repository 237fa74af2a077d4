"""Versioned JSON documents for every artifact the CLI and MCP tools emit.

Each top-level document carries ``"schema": 1`` and converts to and from the
core value types, so ``Doc.model_validate_json(doc.to_json())`` equals ``doc``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Literal

from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from core.coloring import Coloring
from core.decomposition import CheckResult, Decomposition, DecompositionReport, LevelWidthReport
from core.errors import FormatParseError
from core.minors import KurepaReport, MinorWitness, SubdivisionWitness
from core.tree import Tree

SCHEMA_VERSION = 1


class _Model(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)


class Document(_Model):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")

    @field_validator("schema_version")
    @classmethod
    def _known_version(cls, value: int) -> int:
        if value != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {value}")
        return value

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> Self:
        try:
            return cls.model_validate_json(text)
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(p) for p in first["loc"]) or "document"
            raise FormatParseError(f"invalid {cls.__name__} at {where}: {first['msg']}") from None


# ----------------------------------------------------------------------
# Decompositions
# ----------------------------------------------------------------------


class NodeDoc(_Model):
    id: int
    parent: int
    vertex: int
    cone: list[int]


class DecompositionDoc(Document):
    n: int
    height: int
    chain: bool
    nodes: list[NodeDoc]
    f_edges: list[tuple[int, int]]

    @classmethod
    def from_decomposition(cls, d: Decomposition) -> DecompositionDoc:
        nodes = [
            NodeDoc(id=node, parent=d.tree.parent[node], vertex=d.branch_vertex[node], cone=sorted(d.cone[node]))
            for node in d.tree.nodes
        ]
        return cls(n=d.tree.m, height=d.height, chain=d.is_chain, nodes=nodes, f_edges=sorted(d.f_edges))

    def to_decomposition(self) -> Decomposition:
        ordered = sorted(self.nodes, key=lambda node: node.id)
        if [node.id for node in ordered] != list(range(len(ordered))):
            raise FormatParseError("decomposition node ids must be 0..m-1")
        tree = Tree(tuple(node.parent for node in ordered))
        return Decomposition(
            tree,
            tuple(node.vertex for node in ordered),
            tuple(frozenset(node.cone) for node in ordered),
            frozenset((min(a, b), max(a, b)) for a, b in self.f_edges),
        )


class CheckDoc(_Model):
    name: str
    passed: bool
    detail: str = ""


class VerificationDoc(Document):
    passed: bool
    checks: list[CheckDoc]

    @classmethod
    def from_report(cls, report: DecompositionReport, extra: list[CheckResult] | None = None) -> VerificationDoc:
        checks = [*report.checks, *(extra or [])]
        return cls(
            passed=all(c.passed for c in checks),
            checks=[CheckDoc(name=c.name, passed=c.passed, detail=c.detail) for c in checks],
        )


class LevelWidthRowDoc(_Model):
    level: int
    below: int
    size: int
    applies: bool
    holds: bool


class LevelWidthDoc(Document):
    k: int
    l: int
    kl_connected: bool
    passed: bool
    levels: list[LevelWidthRowDoc]

    @classmethod
    def from_report(cls, report: LevelWidthReport) -> LevelWidthDoc:
        return cls(
            k=report.k,
            l=report.l,
            kl_connected=report.kl_connected,
            passed=report.passed,
            levels=[LevelWidthRowDoc(**vars(row)) for row in report.levels],
        )


# ----------------------------------------------------------------------
# Minors and subdivisions
# ----------------------------------------------------------------------


class WitnessDoc(Document):
    k: int
    branch_sets: list[list[int]]

    @classmethod
    def from_witness(cls, w: MinorWitness) -> WitnessDoc:
        return cls(k=w.k, branch_sets=[sorted(s) for s in w.branch_sets])

    def to_witness(self) -> MinorWitness:
        return MinorWitness(self.k, tuple(frozenset(s) for s in self.branch_sets))


class FamilyDoc(Document):
    k: int
    witnesses: list[WitnessDoc]

    @classmethod
    def from_family(cls, k: int, family: list[MinorWitness]) -> FamilyDoc:
        return cls(k=k, witnesses=[WitnessDoc.from_witness(w) for w in family])

    def to_family(self) -> list[MinorWitness]:
        return [w.to_witness() for w in self.witnesses]


def _pair_key(a: int, b: int) -> str:
    return f"{a}-{b}"


class SubdivisionDoc(Document):
    m: int
    branch_vertices: list[int]
    paths: dict[str, list[int]]

    @model_validator(mode="after")
    def _pairs_match(self) -> SubdivisionDoc:
        if self.m != len(self.branch_vertices):
            raise ValueError(f"m={self.m} but {len(self.branch_vertices)} branch vertices")
        expected = {_pair_key(a, b) for a, b in combinations(range(self.m), 2)}
        if set(self.paths) != expected:
            raise ValueError("paths must be keyed 'a-b' for every pair of branch indices a < b")
        return self

    @classmethod
    def from_witness(cls, w: SubdivisionWitness) -> SubdivisionDoc:
        return cls(
            m=w.m,
            branch_vertices=list(w.branch_vertices),
            paths={_pair_key(a, b): list(w.paths[(a, b)]) for a, b in sorted(w.paths)},
        )

    def to_witness(self) -> SubdivisionWitness:
        paths = {}
        for key, interior in self.paths.items():
            a, b = key.split("-")
            paths[(int(a), int(b))] = tuple(interior)
        return SubdivisionWitness(tuple(self.branch_vertices), paths)


class VerdictDoc(_Model):
    valid: bool
    reason: str | None = None


class PairDoc(_Model):
    a: int
    b: int
    overlapping: bool
    separator: list[int] | None
    separated: bool
    unrestricted: list[int] | None = None


class KurepaDoc(Document):
    k: int
    verdict: bool
    witnesses: list[VerdictDoc]
    pairs: list[PairDoc]
    chains: list[list[int]] | None = None
    chains_distinct: bool | None = None

    @classmethod
    def from_report(cls, report: KurepaReport) -> KurepaDoc:
        def listed(s):
            return None if s is None else sorted(s)

        return cls(
            k=report.k,
            verdict=report.verdict,
            witnesses=[VerdictDoc(valid=v.valid, reason=v.reason) for v in report.witnesses],
            pairs=[
                PairDoc(
                    a=p.a,
                    b=p.b,
                    overlapping=p.overlapping,
                    separator=listed(p.separator),
                    separated=p.separated,
                    unrestricted=listed(p.unrestricted),
                )
                for p in report.pairs
            ],
            chains=None if report.chains is None else [list(c) for c in report.chains],
            chains_distinct=report.chains_distinct,
        )


# ----------------------------------------------------------------------
# Colorings
# ----------------------------------------------------------------------


class ColoringDoc(Document):
    colors: list[int]
    count: int

    @model_validator(mode="after")
    def _count_matches(self) -> ColoringDoc:
        if self.count != len(set(self.colors)):
            raise ValueError(f"count={self.count} but {len(set(self.colors))} distinct colors")
        return self

    @classmethod
    def from_coloring(cls, c: Coloring) -> ColoringDoc:
        return cls(colors=list(c.colors), count=c.count)

    def to_coloring(self) -> Coloring:
        return Coloring(tuple(self.colors))


# ----------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------


class GraphStats(_Model):
    n: int
    edges: int
    connected: bool


class Estimate(_Model):
    """An exact value, or a ``lower <= upper`` bound pair when a size guard applied."""

    exact: bool
    value: int | None = None
    lower: int
    upper: int
    note: str | None = None

    @model_validator(mode="after")
    def _consistent(self) -> Estimate:
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact and not (self.value == self.lower == self.upper):
            raise ValueError("an exact estimate needs value == lower == upper")
        return self

    @classmethod
    def of(cls, value: int) -> Estimate:
        return cls(exact=True, value=value, lower=value, upper=value)

    @classmethod
    def bounds(cls, lower: int, upper: int, note: str) -> Estimate:
        return cls(exact=False, lower=lower, upper=upper, note=note)


class DecompositionSummary(_Model):
    height: int
    level_sizes: list[int]
    chain: bool


class Inequality(_Model):
    """``lhs <= rhs`` judged from the reported estimate of the left side."""

    name: str
    rhs: int
    status: Literal["holds", "violated", "undetermined"]

    @classmethod
    def judge(cls, name: str, lhs: Estimate, rhs: int) -> Inequality:
        if lhs.upper <= rhs:
            status = "holds"
        elif lhs.lower > rhs:
            status = "violated"
        else:
            status = "undetermined"
        return cls(name=name, rhs=rhs, status=status)


class AnalysisReport(Document):
    graph: GraphStats
    chromatic: Estimate
    hadwiger: Estimate
    decomposition: DecompositionSummary
    inequalities: list[Inequality]
    timing_ms: dict[str, float]


class FailureDoc(_Model):
    graph_id: int
    check: str
    detail: str
    edge_list: str


class CheckSummary(Document):
    corpus: str
    graphs: int
    checks: dict[str, int]
    failures: list[FailureDoc]
    skipped: dict[str, int] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


class TreeStatsDoc(Document):
    nodes: int
    height: int
    width: int
    roots: int
    branches: int
    level_sizes: list[int]
