"""Weighted dual graphs of log resolutions of the maximal ideal.

A graph lists the exceptional components ``E_i`` with their multiplicities
``m_i`` (so that the pulled-back maximal ideal is ``O(-sum m_i E_i)``), the
intersection numbers ``c_ij`` and, for germs of dimension > 2, the degrees
``e_i`` of the residual form on each component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import ParameterError, ParseError, ShapeError, UnknownVertexError
from .exactnum import RatMatrix, as_rat, format_rat, is_negative_definite


@dataclass(frozen=True)
class Vertex:
    id: str
    m: int


@dataclass(frozen=True)
class ResolutionGraph:
    name: str
    dimension: int
    vertices: tuple[Vertex, ...]
    matrix: RatMatrix
    theta_degrees: tuple[Fraction, ...] | None = None

    @classmethod
    def build(cls, name, dimension, vertices, intersections, theta_degrees=None):
        """Assemble a graph from ``(id, m)`` pairs and ``(id, id, value)`` triples.

        Pairs not listed are zero; each unordered pair is mirrored.
        """
        verts = tuple(Vertex(str(v), int(m)) for v, m in vertices)
        index = {v.id: i for i, v in enumerate(verts)}
        n = len(verts)
        mat = [[Fraction(0)] * n for _ in range(n)]
        for u, w, val in intersections:
            if u not in index:
                raise UnknownVertexError(f"unknown vertex {u!r}")
            if w not in index:
                raise UnknownVertexError(f"unknown vertex {w!r}")
            i, j = index[u], index[w]
            mat[i][j] = mat[j][i] = as_rat(val)
        theta = None if theta_degrees is None else tuple(as_rat(x) for x in theta_degrees)
        return cls(name, int(dimension), verts, RatMatrix(mat), theta)

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @cached_property
    def m(self) -> tuple[int, ...]:
        return tuple(v.m for v in self.vertices)

    @cached_property
    def memo(self) -> dict:
        """Per-instance cache for derived quantities (the graph is immutable)."""
        return {}

    def index(self, vid: str) -> int:
        for i, v in enumerate(self.vertices):
            if v.id == vid:
                return i
        raise UnknownVertexError(f"unknown vertex {vid!r}")

    def c(self, i: int, j: int) -> Fraction:
        return self.matrix[i, j]

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(len(self)) if j != i and self.matrix[i, j] > 0]

    def edges(self) -> list[tuple[int, int]]:
        n = len(self)
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.matrix[i, j] > 0]


@dataclass(frozen=True)
class Divisor:
    """Effective divisor ``sum a_i E_i``; coefficients follow the vertex order."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_rat(x) for x in self.coefficients)
        if any(x < 0 for x in coeffs):
            raise ValueError("divisor coefficients must be nonnegative")
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]


def as_divisor(g: ResolutionGraph, a) -> Divisor:
    d = a if isinstance(a, Divisor) else Divisor(tuple(a))
    if len(d) != len(g):
        raise ShapeError(f"divisor has {len(d)} coefficients, graph has {len(g)} vertices")
    return d


# -- validation ------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: tuple[str, ...] = ()

    def __str__(self):
        loc = f" [{', '.join(self.where)}]" if self.where else ""
        return f"{self.code}: {self.message}{loc}"


def _components(g: ResolutionGraph) -> list[list[int]]:
    seen = [False] * len(g)
    comps = []
    for start in range(len(g)):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in g.neighbors(i):
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def validate(g: ResolutionGraph) -> list[Violation]:
    """Every violated structural rule; an empty list means the graph is usable."""
    out: list[Violation] = []
    n = len(g)
    ids = g.ids
    if g.dimension < 2:
        out.append(Violation("dimension", f"dimension must be >= 2, got {g.dimension}"))
    if n == 0:
        out.append(Violation("empty", "graph has no vertices"))
        return out
    if len(set(ids)) != n:
        dup = sorted({x for x in ids if ids.count(x) > 1})
        out.append(Violation("duplicate-id", "vertex ids must be unique", tuple(dup)))
    if g.matrix.shape != (n, n):
        out.append(Violation("shape", f"intersection matrix is {g.matrix.shape}, expected {(n, n)}"))
        return out
    for v in g.vertices:
        if v.m < 1:
            out.append(Violation("nonpositive-multiplicity", f"m = {v.m} must be >= 1", (v.id,)))
    symmetric = True
    for i in range(n):
        for j in range(i + 1, n):
            if g.c(i, j) != g.c(j, i):
                symmetric = False
                out.append(Violation("asymmetric", "c_ij != c_ji", (ids[i], ids[j])))
            if g.c(i, j) < 0 or g.c(j, i) < 0:
                out.append(Violation("negative-off-diagonal", f"c = {format_rat(min(g.c(i, j), g.c(j, i)))} < 0",
                                     (ids[i], ids[j])))
    comps = _components(g)
    if len(comps) > 1:
        out.append(Violation("disconnected", f"{len(comps)} connected components",
                             tuple("{" + ",".join(ids[i] for i in c) + "}" for c in comps)))
    if g.dimension == 2 and symmetric and not is_negative_definite(g.matrix):
        out.append(Violation("not-negative-definite", "intersection matrix must be negative definite"))
    if g.theta_degrees is not None:
        e = g.theta_degrees
        if len(e) != n:
            out.append(Violation("theta-length", f"{len(e)} theta degrees for {n} vertices"))
            return out
    elif g.dimension > 2:
        out.append(Violation("missing-theta-degrees", "theta_degrees are required when dimension > 2"))
        return out
    else:
        if not symmetric:
            return out
        e = tuple(-x for x in g.matrix.matvec(g.m))
    for i, x in enumerate(e):
        if x < 0:
            out.append(Violation("negative-theta-degree", f"e = {format_rat(x)} < 0", (ids[i],)))
    if all(x >= 0 for x in e) and sum(mi * x for mi, x in zip(g.m, e)) <= 0:
        out.append(Violation("zero-multiplicity", "sum of m_i e_i must be positive"))
    return out


# -- ADE generators --------------------------------------------------------

def _minus_two_graph(name, ms, edges):
    k = len(ms)
    ids = [f"E{i}" for i in range(1, k + 1)]
    inter = [(x, x, -2) for x in ids]
    inter += [(ids[i - 1], ids[j - 1], 1) for i, j in edges]
    return ResolutionGraph.build(name, 2, list(zip(ids, ms)), inter)


def ade_graph(family: str, k: int) -> ResolutionGraph:
    """Minimal-resolution dual graph of the surface singularity of type ``family``_k.

    Vertex ``E_i`` follows the labelling of the standard diagrams:

    * A_k: chain E1 - ... - Ek, all multiplicities 1.
    * D_k: chain E1 - ... - E(k-2) with E(k-1) and Ek both attached to E(k-2);
      m = (1, 2, ..., 2, 1, 1).
    * E_6/7/8: long arm E1 - E2 - E3 - E5 - E6 (- E7 (- E8)), with E4
      attached to the branch vertex E3.
    """
    family = family.upper()
    if family == "A":
        if k < 1:
            raise ParameterError(f"A_k needs k >= 1, got {k}")
        return _minus_two_graph(f"A{k}", [1] * k, [(i, i + 1) for i in range(1, k)])
    if family == "D":
        if k < 4:
            raise ParameterError(f"D_k needs k >= 4, got {k}")
        ms = [1] + [2] * (k - 3) + [1, 1]
        edges = [(i, i + 1) for i in range(1, k - 2)] + [(k - 2, k - 1), (k - 2, k)]
        return _minus_two_graph(f"D{k}", ms, edges)
    if family == "E":
        arm = {6: [1, 2, 3, 5, 6], 7: [1, 2, 3, 5, 6, 7], 8: [1, 2, 3, 5, 6, 7, 8]}
        ms = {6: [1, 2, 3, 2, 2, 1], 7: [2, 3, 4, 2, 3, 2, 1], 8: [2, 4, 6, 3, 5, 4, 3, 2]}
        if k not in arm:
            raise ParameterError(f"E_k needs k in 6, 7, 8, got {k}")
        chain = arm[k]
        edges = list(zip(chain, chain[1:])) + [(3, 4)]
        return _minus_two_graph(f"E{k}", ms[k], edges)
    raise ParameterError(f"unknown family {family!r}; expected A, D or E")


def ade_parameters():
    """(family, k) pairs shipped in the bundled corpus."""
    return ([("A", k) for k in range(1, 11)] + [("D", k) for k in range(4, 11)]
            + [("E", 6), ("E", 7), ("E", 8)])


# -- JSON instance format ---------------------------------------------------

def _rat_field(value, path):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"expected an integer or \"p/q\" string, got {json.dumps(value)}", path)
    try:
        return as_rat(value)
    except ParseError as exc:
        raise ParseError(str(exc), path) from None


def _graph_from_obj(doc) -> ResolutionGraph:
    if not isinstance(doc, dict):
        raise ParseError("instance must be a JSON object", "$")
    for key in ("name", "dimension", "vertices", "intersections"):
        if key not in doc:
            raise ParseError("missing field", f"$.{key}")
    name = doc["name"]
    if not isinstance(name, str):
        raise ParseError("expected a string", "$.name")
    dim = doc["dimension"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise ParseError("expected an integer", "$.dimension")
    if not isinstance(doc["vertices"], list):
        raise ParseError("expected a list", "$.vertices")
    verts = []
    for i, v in enumerate(doc["vertices"]):
        path = f"$.vertices[{i}]"
        if not isinstance(v, dict) or "id" not in v or "m" not in v:
            raise ParseError("expected an object with \"id\" and \"m\"", path)
        if not isinstance(v["id"], str):
            raise ParseError("expected a string", path + ".id")
        if isinstance(v["m"], bool) or not isinstance(v["m"], int):
            raise ParseError("expected an integer", path + ".m")
        verts.append((v["id"], v["m"]))
    index = {vid: i for i, (vid, _) in enumerate(verts)}
    if not isinstance(doc["intersections"], list):
        raise ParseError("expected a list", "$.intersections")
    seen: dict[tuple[int, int], Fraction] = {}
    triples = []
    for t, item in enumerate(doc["intersections"]):
        path = f"$.intersections[{t}]"
        if not isinstance(item, list) or len(item) != 3:
            raise ParseError("expected [id, id, value]", path)
        u, w, raw = item
        for pos, vid in ((0, u), (1, w)):
            if not isinstance(vid, str):
                raise ParseError("expected a vertex id string", f"{path}[{pos}]")
            if vid not in index:
                raise UnknownVertexError(f"unknown vertex {vid!r}", f"{path}[{pos}]")
        val = _rat_field(raw, f"{path}[2]")
        key = tuple(sorted((index[u], index[w])))
        if key in seen and seen[key] != val:
            raise ParseError(f"pair ({u}, {w}) listed twice with different values", path)
        seen[key] = val
        triples.append((u, w, val))
    theta = doc.get("theta_degrees")
    if theta is not None:
        if not isinstance(theta, list):
            raise ParseError("expected a list or null", "$.theta_degrees")
        theta = [_rat_field(x, f"$.theta_degrees[{i}]") for i, x in enumerate(theta)]
    return ResolutionGraph.build(name, dim, verts, triples, theta)


def parse_instance(text) -> ResolutionGraph:
    """Parse an instance document (str or bytes).  Structural rules are left to :func:`validate`."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    return _graph_from_obj(doc)


def graph_to_obj(g: ResolutionGraph) -> dict:
    n = len(g)
    inter = [[g.ids[i], g.ids[i], format_rat(g.c(i, i))] for i in range(n) if g.c(i, i) != 0]
    inter += [[g.ids[i], g.ids[j], format_rat(g.c(i, j))]
              for i in range(n) for j in range(i + 1, n) if g.c(i, j) != 0]
    return {
        "name": g.name,
        "dimension": g.dimension,
        "vertices": [{"id": v.id, "m": v.m} for v in g.vertices],
        "intersections": inter,
        "theta_degrees": None if g.theta_degrees is None else [format_rat(x) for x in g.theta_degrees],
    }


def serialize_instance(g: ResolutionGraph) -> bytes:
    """Canonical document: fixed key order, one vertex/intersection per line."""
    obj = graph_to_obj(g)
    d = json.dumps

    def block(items):
        if not items:
            return "[]"
        return "[\n" + ",\n".join("    " + d(x, separators=(", ", ": ")) for x in items) + "\n  ]"

    lines = [
        "{",
        f'  "name": {d(obj["name"])},',
        f'  "dimension": {obj["dimension"]},',
        f'  "vertices": {block(obj["vertices"])},',
        f'  "intersections": {block(obj["intersections"])},',
        f'  "theta_degrees": {d(obj["theta_degrees"])}',
        "}",
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")


def single_vertex_graph(m: int, self_intersection, name: str | None = None) -> ResolutionGraph:
    """One exceptional component, as produced by a single blowup."""
    c = as_rat(self_intersection)
    return ResolutionGraph.build(name or f"single_m{m}_c{format_rat(c)}", 2, [("E1", m)], [("E1", "E1", c)])

