"""Fundamental groups of graphs of free groups with cyclic edge groups.

Edges come in pairs ``e``/``e^-1``; only ``e`` is declared, the inverse is
implicit and carries the swapped endpoints and images.  Each edge ``e`` has
a generator image ``alpha_e`` in the vertex group at ``alpha(e)`` and
``omega_e`` at ``omega(e)``; the defining relations are
``e omega_e^l e^-1 = alpha_e^l``.  Words of cycle type at a base vertex are
decided by generalized Britton reduction: repeatedly replace
``e_i w_i e_i^-1`` with ``w_i = omega_{e_i}^l`` by ``alpha_{e_i}^l``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .alphabet import Alphabet
from .errors import InvalidInput
from .free_group import FreeReducer, free_reduce
from .hnn import BrittonSequence, HnnPresentation
from .power import PowerSolver
from .slp import CompositionSystem, Node, concat_nodes, grammar_from_json, power_node, word_node
from .syntax import parse_base_word


def edge_inverse(name: str) -> str:
    return name[:-3] if name.endswith("^-1") else name + "^-1"


@dataclass(frozen=True)
class Edge:
    name: str
    source: str
    target: str
    alpha_image: tuple[int, ...]
    omega_image: tuple[int, ...]
    inverse_name: str = ""

    def __post_init__(self):
        if not self.inverse_name:
            object.__setattr__(self, "inverse_name", edge_inverse(self.name))

    def inverse(self) -> Edge:
        return Edge(self.inverse_name, self.target, self.source, self.omega_image, self.alpha_image, self.name)


class GraphOfGroups:
    """A finite graph of free groups with cyclic edge groups.

    ``edges`` holds both orientations, keyed by name (``e`` and ``e^-1``).
    The constructor does not validate; call :func:`validate_graph`.
    """

    def __init__(self, vertices: Mapping[str, Alphabet], edges: Sequence[Edge]):
        self.vertices = dict(vertices)
        self.edges: dict[str, Edge] = {}
        self.declared = list(edges)
        self._duplicates = []
        for edge in edges:
            pair = (edge,) if edge.inverse_name == edge.name else (edge, edge.inverse())
            for e in pair:
                if e.name in self.edges:
                    self._duplicates.append(e.name)
                self.edges[e.name] = e

    def alphabet(self, vertex: str) -> Alphabet:
        return self.vertices[vertex]

    @classmethod
    def from_json(cls, obj: Mapping) -> GraphOfGroups:
        vertices = {name: Alphabet(spec["alphabet"]) for name, spec in obj["vertices"].items()}
        edges = []
        for spec in obj["edges"]:
            src, dst = spec["from"], spec["to"]
            if src not in vertices or dst not in vertices:
                raise InvalidInput([f"edge {spec['name']!r} touches unknown vertex"])
            edges.append(Edge(spec["name"], src, dst,
                              tuple(vertices[src].parse(spec.get("alpha_image", ""))),
                              tuple(vertices[dst].parse(spec.get("omega_image", ""))),
                              spec.get("inverse", "")))
        return cls(vertices, edges)

    def to_json(self) -> dict:
        return {
            "vertices": {v: {"alphabet": list(a.names)} for v, a in self.vertices.items()},
            "edges": [{"name": e.name, "from": e.source, "to": e.target,
                       "alpha_image": self.vertices[e.source].format(e.alpha_image),
                       "omega_image": self.vertices[e.target].format(e.omega_image)}
                      for e in self.declared],
        }


def validate_graph(graph: GraphOfGroups) -> list[str]:
    problems = [f"duplicate edge name {name!r}" for name in graph._duplicates]
    owner: dict[str, str] = {}
    for vertex, alphabet in graph.vertices.items():
        for gen in alphabet.names:
            if gen in owner:
                problems.append(f"generator {gen!r} shared by vertices {owner[gen]!r} and {vertex!r}")
            owner.setdefault(gen, vertex)
    for name, edge in graph.edges.items():
        if edge.inverse_name == name:
            problems.append(f"edge {name!r} is its own inverse")
            continue
        inv = graph.edges.get(edge.inverse_name)
        if inv is None or inv.inverse_name != name:
            problems.append(f"edge {name!r} has no matching inverse")
            continue
        if edge.target != inv.source:
            problems.append(f"edge {name!r}: terminal vertex differs from origin of its inverse")
        if edge.alpha_image != inv.omega_image:
            problems.append(f"edge {name!r}: alpha image differs from omega image of its inverse")
        for vertex in (edge.source, edge.target):
            if vertex not in graph.vertices:
                problems.append(f"edge {name!r}: unknown vertex {vertex!r}")
        if edge.source in graph.vertices and edge.target in graph.vertices:
            a = free_reduce(edge.alpha_image)
            w = free_reduce(edge.omega_image)
            if bool(a) != bool(w):
                problems.append(f"edge {name!r}: edge-group images have different orders")
    return problems


@dataclass(frozen=True)
class CycleTypeWord:
    """``w_0 e_1 w_1 ... e_n w_n`` at ``base``; ``segments`` are the ``w_i``."""

    base: str
    segments: tuple[CompositionSystem, ...]
    edges: tuple[str, ...]

    @classmethod
    def from_json(cls, graph: GraphOfGroups, obj: Mapping) -> CycleTypeWord:
        """Decode ``{"base": v, "items": [w_0, e_1, w_1, ...]}``.

        Words are strings in the word syntax (powers allowed) or grammar objects; each is
        read over the alphabet of the vertex the path has reached.
        """
        base = obj["base"]
        items = list(obj["items"])
        if not items or len(items) % 2 == 0:
            raise InvalidInput(["items must alternate word, edge, word, ..., word"])
        if base not in graph.vertices:
            raise InvalidInput([f"unknown base vertex {base!r}"])
        vertex = base
        segments, edges = [], []
        for k, item in enumerate(items):
            if k % 2:
                if item not in graph.edges:
                    raise InvalidInput([f"unknown edge {item!r}"])
                edges.append(item)
                vertex = graph.edges[item].target
            else:
                alphabet = graph.vertices[vertex]
                if isinstance(item, str):
                    segments.append(CompositionSystem(alphabet, parse_base_word(item, alphabet)))
                else:
                    segments.append(grammar_from_json(item, alphabet))
        return cls(base, tuple(segments), tuple(edges))


def validate_cycle_type(graph: GraphOfGroups, word: CycleTypeWord) -> list[str]:
    problems = []
    if len(word.segments) != len(word.edges) + 1:
        return ["segments and edges do not alternate"]
    if word.base not in graph.vertices:
        return [f"unknown base vertex {word.base!r}"]
    vertex = word.base
    if word.segments[0].alphabet != graph.vertices[vertex]:
        problems.append("w_0 is not over the base vertex alphabet")
    for k, name in enumerate(word.edges, start=1):
        edge = graph.edges.get(name)
        if edge is None:
            problems.append(f"unknown edge {name!r}")
            return problems
        if edge.source != vertex:
            problems.append(f"edge path broken at e_{k} = {name!r}")
        vertex = edge.target
        if word.segments[k].alphabet != graph.vertices[vertex]:
            problems.append(f"w_{k} is not over the alphabet of vertex {vertex!r}")
    if vertex != word.base:
        problems.append("edge path does not return to the base vertex")
    return problems


def fundamental_word_problem(graph: GraphOfGroups, word: CycleTypeWord, *,
                             exact_bound: int | None = None,
                             trace: Callable[[str], None] | None = None) -> bool:
    """True iff the cycle-type word is trivial in the fundamental group."""
    problems = validate_graph(graph) + validate_cycle_type(graph, word)
    if problems:
        raise InvalidInput(problems)
    reducer = FreeReducer()
    solvers: dict[str, PowerSolver] = {}
    cache: dict[tuple[Node, str], int | None] = {}
    segments = [s.root for s in word.segments]
    edges = list(word.edges)

    def exponent(segment: Node, name: str) -> int | None:
        key = (segment, name)
        if key not in cache:
            if name not in solvers:
                solvers[name] = PowerSolver(graph.edges[name].omega_image)
            cache[key] = solvers[name].solve(segment, reducer, exact_bound).z
        return cache[key]

    steps = 0
    while True:
        for i in range(1, len(edges)):
            name = edges[i - 1]
            if edges[i] != graph.edges[name].inverse_name:
                continue
            ell = exponent(segments[i], name)
            if ell is not None:
                break
        else:
            break
        edge = graph.edges[name]
        image = power_node(word_node(edge.alpha_image), ell)
        segments[i - 1:i + 2] = [concat_nodes([segments[i - 1], image, segments[i + 1]])]
        del edges[i - 1:i + 1]
        steps += 1
        if trace is not None:
            trace(f"step={steps} index={i} edge={name} ell={ell} edges_left={len(edges)}")
    return not edges and reducer.reduce(segments[0]).length == 0


def hnn_as_graph(pres: HnnPresentation, vertex: str = "v") -> GraphOfGroups:
    """One vertex carrying the base group and a loop for the stable letter.

    ``t h t^-1 = g`` is the edge relation with ``alpha_t = g`` and
    ``omega_t = h``.
    """
    edge = Edge(pres.stable, vertex, vertex, pres.g, pres.h)
    graph = GraphOfGroups({vertex: pres.alphabet}, [edge])
    problems = validate_graph(graph)
    if problems:
        raise InvalidInput(problems)
    return graph


def hnn_word_as_cycle(pres: HnnPresentation, seq: BrittonSequence, vertex: str = "v") -> CycleTypeWord:
    """The cycle-type word matching a Britton sequence under :func:`hnn_as_graph`."""
    edges = tuple(pres.stable if s == 1 else edge_inverse(pres.stable) for s in seq.signs)
    return CycleTypeWord(vertex, seq.parts, edges)


def amalgam(left: Alphabet, right: Alphabet, left_image: Sequence[int] | str,
            right_image: Sequence[int] | str, *, edge: str = "e",
            vertices: tuple[str, str] = ("u", "v")) -> GraphOfGroups:
    """``F(left) *_{left_image = right_image} F(right)`` as a one-edge graph."""
    if isinstance(left_image, str):
        left_image = left.parse(left_image)
    if isinstance(right_image, str):
        right_image = right.parse(right_image)
    u, v = vertices
    graph = GraphOfGroups({u: left, v: right}, [Edge(edge, u, v, tuple(left_image), tuple(right_image))])
    problems = validate_graph(graph)
    if problems:
        raise InvalidInput(problems)
    return graph


def load_graph(path) -> GraphOfGroups:
    with open(path) as fh:
        return GraphOfGroups.from_json(json.load(fh))
