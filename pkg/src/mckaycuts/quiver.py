"""McKay quivers as Cayley graphs, elementary cycles, and cuts.

The quiver of an embedding has one vertex per coset of L1 in Z^n and,
for each vertex, one outgoing arrow per step direction alpha_1, ...,
alpha_n, alpha_{n+1} = -(alpha_1 + ... + alpha_n).  An arrow is
identified by the pair ``(source index, type)`` with types 1..n+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

from .errors import NotACutError
from .intlat import LatticeEmbedding, Vec

Arrow = tuple[int, int]

DOT_COLORS = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
    "#ff7f00", "#a65628", "#f781bf", "#999999",
)


def step_vectors(n: int) -> tuple[Vec, ...]:
    """alpha_1, ..., alpha_{n+1} with the last one minus the sum of the rest."""
    steps = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    steps.append(tuple(-1 for _ in range(n)))
    return tuple(steps)


@dataclass(frozen=True, eq=False)
class McKayQuiver:
    embedding: LatticeEmbedding
    vertices: tuple[Vec, ...]
    index: dict[Vec, int]
    targets: tuple[tuple[int, ...], ...]
    incoming: tuple[tuple[Arrow, ...], ...]

    @property
    def n(self) -> int:
        return self.embedding.n

    @property
    def m(self) -> int:
        return self.embedding.m

    @property
    def types(self) -> range:
        return range(1, self.n + 2)

    def target(self, v: int, arrow_type: int) -> int:
        return self.targets[v][arrow_type - 1]

    def arrows(self):
        for v in range(self.m):
            for t in self.types:
                yield (v, t)

    def out_arrows(self, v: int) -> tuple[Arrow, ...]:
        return tuple((v, t) for t in self.types)

    def in_arrows(self, v: int) -> tuple[Arrow, ...]:
        return self.incoming[v]

    @cached_property
    def cycles(self) -> tuple[tuple[Arrow, ...], ...]:
        """All elementary cycles, canonically rotated to start with type 1.

        A cycle is a length-(n+1) path using each type exactly once;
        rotating the type sequence to put type 1 first makes the start
        vertex canonical, so there are exactly ``m * n!`` of them.
        """
        out = []
        for start in range(self.m):
            for rest in permutations(range(2, self.n + 2)):
                cycle = []
                v = start
                for t in (1, *rest):
                    cycle.append((v, t))
                    v = self.target(v, t)
                assert v == start
                out.append(tuple(cycle))
        return tuple(out)


def build_mckay(embedding: LatticeEmbedding) -> McKayQuiver:
    """Cayley-graph McKay quiver; vertex 0 is the coset of the origin."""
    vertices = embedding.fundamental_domain()
    index = {rep: i for i, rep in enumerate(vertices)}
    steps = step_vectors(embedding.n)
    targets = tuple(
        tuple(
            index[embedding.reduce(tuple(a + b for a, b in zip(rep, step)))]
            for step in steps
        )
        for rep in vertices
    )
    incoming: list[list[Arrow]] = [[] for _ in vertices]
    for v, row in enumerate(targets):
        for t, w in enumerate(row, start=1):
            incoming[w].append((v, t))
    return McKayQuiver(
        embedding=embedding,
        vertices=vertices,
        index=index,
        targets=targets,
        incoming=tuple(tuple(arr) for arr in incoming),
    )


def check_arrows(quiver: McKayQuiver, arrows) -> frozenset[Arrow]:
    out = set()
    for arrow in arrows:
        v, t = arrow
        if not (0 <= v < quiver.m and 1 <= t <= quiver.n + 1):
            raise NotACutError(f"unknown arrow {arrow!r}")
        out.add((int(v), int(t)))
    return frozenset(out)


def is_cut(quiver: McKayQuiver, arrows) -> bool:
    """True when every elementary cycle meets the arrow set exactly once."""
    members = check_arrows(quiver, arrows)
    for cycle in quiver.cycles:
        hits = 0
        for arrow in cycle:
            if arrow in members:
                hits += 1
                if hits > 1:
                    return False
        if hits != 1:
            return False
    return True


def first_cut_violation(quiver: McKayQuiver, arrows) -> str | None:
    """Human-readable description of the first violated cycle, if any."""
    members = check_arrows(quiver, arrows)
    for cycle in quiver.cycles:
        hits = sum(arrow in members for arrow in cycle)
        if hits == 1:
            continue
        path = " -> ".join(str(quiver.vertices[a[0]]) for a in cycle)
        kind = "uncovered" if hits == 0 else f"covered {hits} times"
        return f"elementary cycle {kind}: {path}"
    return None


@dataclass(frozen=True)
class Cut:
    """An arrow set meeting every elementary cycle exactly once."""

    quiver: McKayQuiver = field(compare=False)
    arrows: frozenset[Arrow] = field(compare=True)

    def sorted_arrows(self) -> tuple[Arrow, ...]:
        return tuple(sorted(self.arrows))

    def __contains__(self, arrow: Arrow) -> bool:
        return arrow in self.arrows


def make_cut(quiver: McKayQuiver, arrows) -> Cut:
    """Validating constructor; raises NotACutError on a bad arrow set."""
    members = check_arrows(quiver, arrows)
    violation = first_cut_violation(quiver, members)
    if violation is not None:
        raise NotACutError(violation)
    return Cut(quiver=quiver, arrows=members)


def type_of(cut: Cut) -> Vec:
    """Per-type arrow counts of a cut; the entries sum to m."""
    counts = [0] * (cut.quiver.n + 1)
    for _, t in cut.arrows:
        counts[t - 1] += 1
    return tuple(counts)


@dataclass(frozen=True, eq=False)
class Subquiver:
    """The quiver with a subset of its arrows, e.g. a cut quiver."""

    quiver: McKayQuiver
    arrows: tuple[Arrow, ...]

    def out_map(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.quiver.m)]
        for v, t in self.arrows:
            adj[v].append(self.quiver.target(v, t))
        return adj


def cut_quiver(quiver: McKayQuiver, cut: Cut) -> Subquiver:
    """Same vertices, all arrows not in the cut."""
    keep = tuple(a for a in quiver.arrows() if a not in cut.arrows)
    return Subquiver(quiver=quiver, arrows=keep)


def sources(sub: Subquiver) -> tuple[int, ...]:
    has_in = [False] * sub.quiver.m
    for v, t in sub.arrows:
        has_in[sub.quiver.target(v, t)] = True
    has_out = [False] * sub.quiver.m
    for v, _ in sub.arrows:
        has_out[v] = True
    return tuple(v for v in range(sub.quiver.m) if has_out[v] and not has_in[v])


def sinks(sub: Subquiver) -> tuple[int, ...]:
    has_in = [False] * sub.quiver.m
    for v, t in sub.arrows:
        has_in[sub.quiver.target(v, t)] = True
    has_out = [False] * sub.quiver.m
    for v, _ in sub.arrows:
        has_out[v] = True
    return tuple(v for v in range(sub.quiver.m) if has_in[v] and not has_out[v])


def is_acyclic(sub: Subquiver) -> bool:
    """Kahn-style check on the underlying multigraph."""
    indegree = [0] * sub.quiver.m
    adj = sub.out_map()
    for v in range(sub.quiver.m):
        for w in adj[v]:
            indegree[w] += 1
    stack = [v for v in range(sub.quiver.m) if indegree[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in adj[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                stack.append(w)
    return seen == sub.quiver.m


def quiver_to_json(quiver: McKayQuiver) -> dict:
    return {
        "n": quiver.n,
        "m": quiver.m,
        "vertices": [list(rep) for rep in quiver.vertices],
        "arrows": [
            {
                "source": list(quiver.vertices[v]),
                "type": t,
                "target": list(quiver.vertices[quiver.target(v, t)]),
            }
            for v, t in quiver.arrows()
        ],
    }


def _vertex_label(rep: Vec) -> str:
    return ",".join(str(c) for c in rep)


def quiver_to_dot(quiver: McKayQuiver, cut: Cut | None = None) -> str:
    """DOT rendering: arrows colored by type, cut arrows dashed."""
    lines = ["digraph mckay {", "  rankdir=LR;"]
    for rep in quiver.vertices:
        lines.append(f'  "{_vertex_label(rep)}";')
    for v, t in quiver.arrows():
        color = DOT_COLORS[(t - 1) % len(DOT_COLORS)]
        attrs = [f'color="{color}"', f'label="{t}"']
        if cut is not None and (v, t) in cut.arrows:
            attrs.append("style=dashed")
        src = _vertex_label(quiver.vertices[v])
        dst = _vertex_label(quiver.vertices[quiver.target(v, t)])
        lines.append(f'  "{src}" -> "{dst}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
