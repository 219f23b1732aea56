"""Fuzzy-graph data model and the line-based file format.

A fuzzy graph assigns a membership value sigma in [0, 1] to every vertex
and mu in [0, 1] to every undirected edge, subject to the defining
inequality mu(pq) <= min(sigma(p), sigma(q)). Graphs are immutable:
every construction operation returns a new value, so instances can be
shared freely between threads.

File format (UTF-8, one declaration per line)::

    # comment
    v <id> <sigma>
    e <id1> <id2> <mu>

Vertices must be declared before any edge that uses them. Serialization
is canonical: vertices in lexicographic order, edges by sorted endpoint
pair, memberships rendered with full round-trip precision.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateVertex,
    FuzzyGraphError,
    FuzzyInequalityViolated,
    InvalidVertexId,
    MembershipOutOfRange,
    ParseError,
    SelfLoop,
    UnknownEdge,
    UnknownVertex,
)

#: Absolute tolerance for membership-equality decisions (edge classes,
#: "strictly reduces" tests, complete-graph checks). Membership values are
#: binary floats, so exact equality is fragile after min-chains.
EPS = 1e-9


def edge_key(p: str, q: str) -> tuple[str, str]:
    """Canonical unordered-pair key for an edge."""
    return (p, q) if p <= q else (q, p)


def _check_vertex_id(vid: str) -> None:
    if not isinstance(vid, str) or not vid or any(c.isspace() for c in vid):
        raise InvalidVertexId(f"vertex id must be a non-empty token without whitespace: {vid!r}")


def _check_membership(value: float, what: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise MembershipOutOfRange(f"{what} membership {value!r} outside [0, 1]")
    return value


class FuzzyGraph:
    """Immutable undirected fuzzy graph.

    Construct empty (``FuzzyGraph()``) and grow with :meth:`add_vertex` /
    :meth:`add_edge`, or pass complete ``vertices`` / ``edges`` mappings,
    which are validated as a whole.
    """

    __slots__ = ("_sigma", "_mu")

    def __init__(
        self,
        vertices: Mapping[str, float] | None = None,
        edges: Mapping[tuple[str, str], float] | None = None,
    ):
        sigma: dict[str, float] = {}
        for vid, s in (vertices or {}).items():
            _check_vertex_id(vid)
            sigma[vid] = _check_membership(s, f"vertex {vid!r}")
        mu: dict[tuple[str, str], float] = {}
        for (p, q), m in (edges or {}).items():
            if p == q:
                raise SelfLoop(f"self-loop at {p!r}")
            for end in (p, q):
                if end not in sigma:
                    raise UnknownVertex(f"edge endpoint {end!r} not a vertex")
            m = _check_membership(m, f"edge {p!r}-{q!r}")
            cap = min(sigma[p], sigma[q])
            if m > cap:
                raise FuzzyInequalityViolated(
                    f"mu({p},{q})={m!r} exceeds min(sigma)={cap!r}"
                )
            key = edge_key(p, q)
            if key in mu and mu[key] != m:
                raise FuzzyGraphError(f"conflicting duplicate edge {key}")
            mu[key] = m
        self._sigma = sigma
        self._mu = mu

    # -- read access ---------------------------------------------------

    @property
    def vertices(self) -> Mapping[str, float]:
        """Read-only vertex-id -> sigma mapping."""
        return MappingProxyType(self._sigma)

    @property
    def edges(self) -> Mapping[tuple[str, str], float]:
        """Read-only sorted-endpoint-pair -> mu mapping."""
        return MappingProxyType(self._mu)

    @property
    def vertex_count(self) -> int:
        return len(self._sigma)

    @property
    def edge_count(self) -> int:
        return len(self._mu)

    def __contains__(self, vid: str) -> bool:
        return vid in self._sigma

    def __iter__(self) -> Iterator[str]:
        return iter(self._sigma)

    def sigma(self, vid: str) -> float:
        try:
            return self._sigma[vid]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vid!r}") from None

    def has_edge(self, p: str, q: str) -> bool:
        return edge_key(p, q) in self._mu

    def mu(self, p: str, q: str) -> float:
        try:
            return self._mu[edge_key(p, q)]
        except KeyError:
            raise UnknownEdge(f"no edge between {p!r} and {q!r}") from None

    def neighbors(self, vid: str) -> dict[str, float]:
        """Adjacent vertex -> mu of the connecting edge."""
        self.sigma(vid)
        out: dict[str, float] = {}
        for (a, b), m in self._mu.items():
            if a == vid:
                out[b] = m
            elif b == vid:
                out[a] = m
        return out

    def adjacency(self) -> dict[str, list[tuple[str, float]]]:
        """Full adjacency structure, built once for traversal loops."""
        adj: dict[str, list[tuple[str, float]]] = {v: [] for v in self._sigma}
        for (a, b), m in self._mu.items():
            adj[a].append((b, m))
            adj[b].append((a, m))
        return adj

    # -- construction (each returns a new graph) ------------------------

    def add_vertex(self, vid: str, sigma: float) -> "FuzzyGraph":
        _check_vertex_id(vid)
        if vid in self._sigma:
            raise DuplicateVertex(f"vertex {vid!r} already present")
        g = self._clone()
        g._sigma[vid] = _check_membership(sigma, f"vertex {vid!r}")
        return g

    def add_edge(self, p: str, q: str, mu: float) -> "FuzzyGraph":
        if p == q:
            raise SelfLoop(f"self-loop at {p!r}")
        sp, sq = self.sigma(p), self.sigma(q)
        mu = _check_membership(mu, f"edge {p!r}-{q!r}")
        if mu > min(sp, sq):
            raise FuzzyInequalityViolated(
                f"mu({p},{q})={mu!r} exceeds min(sigma)={min(sp, sq)!r}"
            )
        g = self._clone()
        g._mu[edge_key(p, q)] = mu
        return g

    def remove_edge(self, p: str, q: str) -> "FuzzyGraph":
        key = edge_key(p, q)
        if key not in self._mu:
            raise UnknownEdge(f"no edge between {p!r} and {q!r}")
        g = self._clone()
        del g._mu[key]
        return g

    def remove_vertex(self, vid: str) -> "FuzzyGraph":
        self.sigma(vid)
        g = object.__new__(FuzzyGraph)
        g._sigma = {v: s for v, s in self._sigma.items() if v != vid}
        g._mu = {k: m for k, m in self._mu.items() if vid not in k}
        return g

    def induced(self, vertex_ids: Iterable[str]) -> "FuzzyGraph":
        """Subgraph induced by the given vertices (memberships kept)."""
        keep = set(vertex_ids)
        for vid in keep:
            self.sigma(vid)
        g = object.__new__(FuzzyGraph)
        g._sigma = {v: s for v, s in self._sigma.items() if v in keep}
        g._mu = {k: m for k, m in self._mu.items() if k[0] in keep and k[1] in keep}
        return g

    def _clone(self) -> "FuzzyGraph":
        g = object.__new__(FuzzyGraph)
        g._sigma = dict(self._sigma)
        g._mu = dict(self._mu)
        return g

    # -- comparison / display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyGraph):
            return NotImplemented
        return self._sigma == other._sigma and self._mu == other._mu

    def __repr__(self) -> str:
        return f"FuzzyGraph({self.vertex_count} vertices, {self.edge_count} edges)"


def parse_graph(text: str) -> FuzzyGraph:
    """Parse the line-based graph format; errors carry the line number."""
    g = FuzzyGraph()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if fields[0] == "v":
                if len(fields) != 3:
                    raise ParseError("expected 'v <id> <sigma>'")
                g = g.add_vertex(fields[1], _parse_value(fields[2]))
            elif fields[0] == "e":
                if len(fields) != 4:
                    raise ParseError("expected 'e <id1> <id2> <mu>'")
                g = g.add_edge(fields[1], fields[2], _parse_value(fields[3]))
            else:
                raise ParseError(f"unknown declaration {fields[0]!r}")
        except ParseError as err:
            raise ParseError(str(err), line=lineno) from None
        except FuzzyInequalityViolated as err:
            raise FuzzyInequalityViolated(f"line {lineno}: {err}") from None
        except FuzzyGraphError as err:
            raise ParseError(str(err), line=lineno) from None
    return g


def _parse_value(token: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"bad membership value {token!r}") from None


def serialize_graph(g: FuzzyGraph) -> str:
    """Canonical text form; ``parse_graph`` round-trips it exactly."""
    lines = [f"v {vid} {g.sigma(vid)!r}" for vid in sorted(g.vertices)]
    lines.extend(f"e {a} {b} {m!r}" for (a, b), m in sorted(g.edges.items()))
    return "\n".join(lines) + "\n" if lines else ""


def load_graph(path) -> FuzzyGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: FuzzyGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g))
