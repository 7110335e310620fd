"""Reduced-expression graphs, their distant-edge quotients, and paths.

The expanded expressions graph of an element w has the reduced words of
w as vertices and single braid moves as edges, classified as distant
(commuting letters, drawn dashed) or adjacent (drawn solid).  Adjacent
edges carry the Manin-Schechtman orientation: from (i, i+1, i) towards
(i+1, i, i+1).

Collapsing the distant edges yields the conflated expression graph.
Its vertices are clouds (connected components of the distant subgraph,
represented by their lexicographically least word), its edges are the
projected adjacent edges with one representative retained per cloud
pair, and the orientation descends to a proper acyclic orientation with
a unique source and sink.

Paths are vertex sequences; the length of a path is the number of
vertices it lists.  A complete path visits every vertex at least once.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .symgroup import (
    DISTANT,
    UP,
    BraidMove,
    Permutation,
    Word,
    braid_moves,
    is_reduced,
    reduced_words,
    word_to_perm,
)

EXPANDED = "expanded"
CONFLATED = "conflated"


class NonUniqueOrientationError(ValueError):
    """Raised when the orientation fails to have a unique source or sink."""

    def __init__(self, sources: Sequence[Word], sinks: Sequence[Word]):
        self.sources = tuple(sources)
        self.sinks = tuple(sinks)
        super().__init__(f"sources {self.sources}, sinks {self.sinks}")


class NoDirectSubpathError(ValueError):
    """Raised when a path lacks the direct subpath needed to simplify it."""


class UnsupportedElementError(ValueError):
    """Raised for operations only defined on specific elements."""


@dataclass(frozen=True)
class Path:
    """A walk given by its vertex sequence; length counts vertices."""

    kind: str
    vertices: tuple[Word, ...]

    def __post_init__(self):
        if self.kind not in (EXPANDED, CONFLATED):
            raise ValueError(f"unknown graph kind {self.kind!r}")
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def start(self) -> Word:
        return self.vertices[0]

    @property
    def end(self) -> Word:
        return self.vertices[-1]


@dataclass(frozen=True, eq=False)
class RexGraph:
    """Expanded expressions graph: reduced words joined by braid moves."""

    rank: int
    element: Permutation
    words: tuple[Word, ...]
    # canonical edge list: u < v lexicographically, move rewrites u into v
    edges: tuple[tuple[Word, Word, BraidMove], ...]
    # adjacency[u] lists (v, move u -> v) sorted by v
    adjacency: dict[Word, tuple[tuple[Word, BraidMove], ...]] = field(repr=False)

    def neighbors(self, w: Word) -> tuple[tuple[Word, BraidMove], ...]:
        return self.adjacency[w]

    def distant_neighbors(self, w: Word) -> list[tuple[Word, BraidMove]]:
        return [(v, m) for v, m in self.adjacency[w] if m.kind == DISTANT]

    def edge_counts(self) -> tuple[int, int]:
        """Number of (distant, adjacent) edges."""
        distant = sum(1 for _, _, m in self.edges if m.kind == DISTANT)
        return distant, len(self.edges) - distant


@dataclass(frozen=True)
class Cloud:
    """A distant-edge connected component; the representative is lex-least."""

    members: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(tuple(w) for w in self.members)))

    @property
    def representative(self) -> Word:
        return self.members[0]

    def __contains__(self, word) -> bool:
        return tuple(word) in self.members

    def __lt__(self, other: Cloud) -> bool:
        return self.representative < other.representative

    def __str__(self) -> str:
        return "".join(map(str, self.representative))


@dataclass(frozen=True)
class ConflatedEdge:
    """An oriented cloud edge with its retained expanded representative."""

    source: Cloud
    target: Cloud
    expanded_source: Word  # word inside source where the retained move applies
    expanded_target: Word
    move: BraidMove  # the up move expanded_source -> expanded_target


@dataclass(frozen=True, eq=False)
class ConflatedGraph:
    """Quotient of the expanded graph by distant edges, MS-oriented."""

    rank: int
    element: Permutation
    clouds: tuple[Cloud, ...]
    edges: tuple[ConflatedEdge, ...]
    cloud_of: dict[Word, Cloud] = field(repr=False)
    source: Cloud | None
    sink: Cloud | None

    def cloud(self, word) -> Cloud:
        return self.cloud_of[tuple(word)]

    def edge_between(self, a: Cloud, b: Cloud) -> tuple[ConflatedEdge, bool] | None:
        """The unique edge joining a and b, plus whether a -> b follows it forward."""
        for e in self.edges:
            if e.source == a and e.target == b:
                return e, True
            if e.source == b and e.target == a:
                return e, False
        return None

    def neighbors(self, c: Cloud) -> list[Cloud]:
        out = {e.target for e in self.edges if e.source == c}
        out |= {e.source for e in self.edges if e.target == c}
        return sorted(out)

    def out_neighbors(self, c: Cloud) -> list[Cloud]:
        return sorted(e.target for e in self.edges if e.source == c)

    def in_neighbors(self, c: Cloud) -> list[Cloud]:
        return sorted(e.source for e in self.edges if e.target == c)


def build_rex_graph(perm: Permutation) -> RexGraph:
    """Construct the expanded expressions graph of a permutation."""
    words = tuple(reduced_words(perm))
    adjacency: dict[Word, list[tuple[Word, BraidMove]]] = {w: [] for w in words}
    edges = []
    for w in words:
        for move, w2 in braid_moves(w):
            adjacency[w].append((w2, move))
            if w < w2:
                edges.append((w, w2, move))
    for w in adjacency:
        adjacency[w].sort(key=lambda vm: (vm[0], vm[1].position, vm[1].kind))
    return RexGraph(
        rank=perm.n,
        element=perm,
        words=words,
        edges=tuple(sorted(edges, key=lambda e: (e[0], e[1]))),
        adjacency={w: tuple(neigh) for w, neigh in adjacency.items()},
    )


def clouds(graph: RexGraph) -> list[Cloud]:
    """Connected components of the distant-edge subgraph, sorted."""
    remaining = set(graph.words)
    out = []
    while remaining:
        seed = min(remaining)
        component = {seed}
        queue = deque([seed])
        while queue:
            w = queue.popleft()
            for v, _ in graph.distant_neighbors(w):
                if v not in component:
                    component.add(v)
                    queue.append(v)
        remaining -= component
        out.append(Cloud(tuple(component)))
    return sorted(out)


def build_conflated(graph: RexGraph) -> ConflatedGraph:
    """Quotient by distant edges with the Manin-Schechtman orientation.

    Multiple adjacent edges projecting onto the same cloud pair collapse
    to the one whose (source word, target word) pair is lexicographically
    least among the up-oriented representatives.
    """
    cloud_list = clouds(graph)
    cloud_of = {w: c for c in cloud_list for w in c.members}
    # candidate oriented edges per cloud pair, following the up direction
    candidates: dict[tuple[Cloud, Cloud], list[tuple[Word, Word, BraidMove]]] = {}
    for u, v, move in graph.edges:
        if move.kind == DISTANT:
            continue
        if move.kind != UP:
            u, v, move = v, u, move.reversed()
        cu, cv = cloud_of[u], cloud_of[v]
        if cu == cv:
            raise AssertionError("adjacent edge inside a cloud contradicts the N statistic")
        candidates.setdefault((cu, cv), []).append((u, v, move))
    edges = []
    seen_pairs = set()
    for (cu, cv), cand in sorted(candidates.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        unordered = frozenset((cu, cv))
        if unordered in seen_pairs:
            # the quotient orientation is proper; two directions between one
            # cloud pair would contradict that
            raise AssertionError("conflicting orientation between clouds")
        seen_pairs.add(unordered)
        u, v, move = min(cand)
        edges.append(ConflatedEdge(cu, cv, u, v, move))
    sources = [c for c in cloud_list if not any(e.target == c for e in edges)]
    sinks = [c for c in cloud_list if not any(e.source == c for e in edges)]
    return ConflatedGraph(
        rank=graph.rank,
        element=graph.element,
        clouds=tuple(cloud_list),
        edges=tuple(edges),
        cloud_of=cloud_of,
        source=sources[0] if len(sources) == 1 else None,
        sink=sinks[0] if len(sinks) == 1 else None,
    )


def source_sink(conflated: ConflatedGraph) -> tuple[Cloud, Cloud]:
    """The unique source and sink of the orientation."""
    if conflated.source is not None and conflated.sink is not None:
        return conflated.source, conflated.sink
    sources = [c for c in conflated.clouds if not conflated.in_neighbors(c)]
    sinks = [c for c in conflated.clouds if not conflated.out_neighbors(c)]
    raise NonUniqueOrientationError(
        [c.representative for c in sources], [c.representative for c in sinks]
    )


def distant_path(graph: RexGraph, start: Word, goal: Word) -> list[Word]:
    """Lexicographically least shortest distant-edge path inside a cloud."""
    start, goal = tuple(start), tuple(goal)
    if start == goal:
        return [start]
    parent: dict[Word, Word] = {start: start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for v, _ in graph.distant_neighbors(w):
            if v not in parent:
                parent[v] = w
                if v == goal:
                    path = [v]
                    while path[-1] != start:
                        path.append(parent[path[-1]])
                    return list(reversed(path))
                queue.append(v)
    raise ValueError(f"{goal} not reachable from {start} by distant edges")


def lift_conflated_path(conflated: ConflatedGraph, graph: RexGraph, path: Path) -> Path:
    """Lift a conflated path to the expanded graph.

    The lift starts at the representative of the first cloud, crosses
    each projected edge through its retained representative (inserting a
    shortest distant-edge subpath to reach it), and ends at the
    representative of the final cloud.  Projecting the lift recovers the
    input path.
    """
    if path.kind != CONFLATED:
        raise ValueError("expected a conflated path")
    seq = [conflated.cloud(v) for v in path.vertices]
    current = seq[0].representative
    lifted: list[Word] = [current]
    for a, b in zip(seq, seq[1:]):
        found = conflated.edge_between(a, b)
        if found is None:
            raise ValueError(f"no conflated edge between {a} and {b}")
        edge, forward = found
        if forward:
            hop_from, hop_to, move = edge.expanded_source, edge.expanded_target, edge.move
        else:
            hop_from, hop_to, move = edge.expanded_target, edge.expanded_source, edge.move.reversed()
        lifted.extend(distant_path(graph, current, hop_from)[1:])
        lifted.append(hop_to)
        current = hop_to
    lifted.extend(distant_path(graph, current, seq[-1].representative)[1:])
    return Path(EXPANDED, tuple(lifted))


def project_path(conflated: ConflatedGraph, path: Path) -> Path:
    """Project an expanded path to the conflated graph (dropping distant hops)."""
    if path.kind != EXPANDED:
        raise ValueError("expected an expanded path")
    seq = [conflated.cloud(v) for v in path.vertices]
    out = [seq[0]]
    for c in seq[1:]:
        # adjacent edges always cross clouds (the N statistic changes), so
        # dropping repeats is exactly dropping the distant hops
        if c != out[-1]:
            out.append(c)
    return Path(CONFLATED, tuple(c.representative for c in out))


def _vertex_view(graph) -> tuple[list[Word], dict[Word, list[Word]]]:
    if isinstance(graph, RexGraph):
        vertices = list(graph.words)
        neigh = {w: sorted(v for v, _ in graph.neighbors(w)) for w in vertices}
    elif isinstance(graph, ConflatedGraph):
        vertices = [c.representative for c in graph.clouds]
        neigh = {
            c.representative: [d.representative for d in graph.neighbors(c)]
            for c in graph.clouds
        }
    else:
        raise TypeError(f"not a graph: {graph!r}")
    return vertices, neigh


def enumerate_complete_paths(graph, start, end, max_len: int | None = None) -> Iterator[Path]:
    """All walks from start to end visiting every vertex, up to max_len.

    Paths stream in lexicographic prefix order; length counts vertices.
    The default bound is 2 * (vertex count) + 4, comfortably past every
    canonical path form.
    """
    vertices, neigh = _vertex_view(graph)
    start, end = tuple(start), tuple(end)
    if start not in neigh or end not in neigh:
        raise ValueError("endpoints must be graph vertices")
    if max_len is None:
        max_len = 2 * len(vertices) + 4
    if max_len < len(vertices):
        raise ValueError(f"max_len {max_len} below vertex count {len(vertices)}")
    kind = EXPANDED if isinstance(graph, RexGraph) else CONFLATED
    total = len(vertices)
    seq: list[Word] = [start]
    visited: dict[Word, int] = {start: 1}

    def walk() -> Iterator[Path]:
        if seq[-1] == end and len(visited) == total:
            yield Path(kind, tuple(seq))
        if len(seq) >= max_len:
            return
        for v in neigh[seq[-1]]:
            if len(seq) + 1 + (total - len(visited) - (0 if v in visited else 1)) > max_len:
                continue
            seq.append(v)
            visited[v] = visited.get(v, 0) + 1
            yield from walk()
            seq.pop()
            if visited[v] == 1:
                del visited[v]
            else:
                visited[v] -= 1

    return walk()


def _step_direction(conflated: ConflatedGraph, a: Cloud, b: Cloud) -> str:
    found = conflated.edge_between(a, b)
    if found is None:
        raise ValueError(f"no conflated edge between {a} and {b}")
    return "down" if found[1] else "up"


def _direction_runs(conflated: ConflatedGraph, seq: list[Cloud]) -> list[tuple[str, int, int]]:
    # maximal monotone runs as (direction, start_index, end_index), inclusive
    runs = []
    i = 0
    while i < len(seq) - 1:
        direction = _step_direction(conflated, seq[i], seq[i + 1])
        j = i
        while j < len(seq) - 1 and _step_direction(conflated, seq[j], seq[j + 1]) == direction:
            j += 1
        runs.append((direction, i, j))
        i = j
    return runs


def _oriented_run(conflated: ConflatedGraph, start: Cloud, goal: Cloud, direction: str) -> list[Cloud]:
    """Lex-least monotone path from start to goal following (or against) the orientation."""
    if start == goal:
        return [start]
    best: list[list[Cloud]] = []

    def step(c: Cloud) -> list[Cloud]:
        return conflated.out_neighbors(c) if direction == "down" else conflated.in_neighbors(c)

    stack = [[start]]
    while stack:
        path = stack.pop()
        if path[-1] == goal:
            best.append(path)
            continue
        for nxt in reversed(step(path[-1])):
            stack.append(path + [nxt])
    if not best:
        raise ValueError(f"no {direction} run from {start} to {goal}")
    return min(best, key=lambda p: [c.representative for c in p])


def simplify_path(conflated: ConflatedGraph, path: Path) -> Path:
    """Rewrite a complete path into its canonical zig-zag form.

    The output runs straight from the start to the source or sink,
    traverses the first direct subpath's direction once, and runs
    straight out to the end.  Only longest elements and three-vertex
    oriented lines are accepted; the rewrite is a purely syntactic
    canonical form whose soundness is established separately (by matrix
    equality) exactly where it is claimed.
    """
    if path.kind != CONFLATED:
        raise ValueError("expected a conflated path")
    elem = conflated.element
    is_w0 = elem == Permutation.longest(elem.n)
    is_short_line = len(conflated.clouds) <= 3 and len(conflated.edges) == len(conflated.clouds) - 1
    if not (is_w0 or is_short_line):
        raise UnsupportedElementError(
            "simplification is defined for longest elements and three-vertex lines only"
        )
    seq = [conflated.cloud(v) for v in path.vertices]
    if {c for c in seq} != set(conflated.clouds):
        raise ValueError("path is not complete")
    if len(conflated.clouds) == 1:
        return Path(CONFLATED, (conflated.clouds[0].representative,))
    s, t = source_sink(conflated)
    # locate the first direct subpath: a monotone run covering s..t
    direct = None
    for direction, i, j in _direction_runs(conflated, seq):
        a, z = seq[i], seq[j]
        if direction == "down" and a == s and z == t:
            direct = ("down", s, t)
            break
        if direction == "up" and a == t and z == s:
            direct = ("up", t, s)
            break
    if direct is None:
        raise NoDirectSubpathError("path contains no direct subpath")
    direction, d_start, d_end = direct
    into = _oriented_run(conflated, seq[0], d_start, "up" if d_start == s else "down")
    through = _oriented_run(conflated, d_start, d_end, direction)
    out = _oriented_run(conflated, d_end, seq[-1], "up" if d_end == t else "down")
    combined = into + through[1:] + out[1:]
    return Path(CONFLATED, tuple(c.representative for c in combined))


def to_dot(graph) -> str:
    """Graphviz text: distant edges dashed and undirected, adjacent solid arrows."""
    lines = ["digraph rexgraph {"]
    if isinstance(graph, RexGraph):
        for w in graph.words:
            lines.append(f'  "{_label(w)}";')
        for u, v, move in graph.edges:
            if move.kind == DISTANT:
                lines.append(f'  "{_label(u)}" -> "{_label(v)}" [style=dashed, dir=none];')
            else:
                if move.kind != UP:
                    u, v = v, u
                lines.append(f'  "{_label(u)}" -> "{_label(v)}" [style=solid];')
    elif isinstance(graph, ConflatedGraph):
        for c in graph.clouds:
            lines.append(f'  "{_label(c.representative)}";')
        for e in graph.edges:
            lines.append(
                f'  "{_label(e.source.representative)}" -> '
                f'"{_label(e.target.representative)}" [style=solid];'
            )
    else:
        raise TypeError(f"not a graph: {graph!r}")
    lines.append("}")
    return "\n".join(lines)


def _label(word: Word) -> str:
    if not word:
        return "e"
    return "".join(map(str, word)) if all(l <= 9 for l in word) else ",".join(map(str, word))


def graph_for_word(word, rank: int | None = None) -> tuple[RexGraph, ConflatedGraph]:
    """Build both graphs for the element of a reduced word."""
    word = tuple(word)
    n = rank if rank is not None else (max(word) + 1 if word else 2)
    if not is_reduced(word, n):
        raise ValueError(f"word {word} is not reduced")
    rex = build_rex_graph(word_to_perm(word, n))
    return rex, build_conflated(rex)
