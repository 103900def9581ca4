"""Cut mutation and the distributive lattice of cuts of a fixed type.

Mutating a cut at a source (sink) of its cut quiver swaps the cut
status of the arrows at that vertex and raises (lowers) the height
function there by n+1.  Identifying each cut with its relative height
vector turns the cuts of a fixed positive type into a finite
distributive sublattice of Z^m whose cover relations are exactly the
mutations away from the origin vertex; closing any seed cut under
nonzero mutations therefore enumerates the whole lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .construct import construct_cut, cut_to_json
from .errors import SearchBoundExceededError, UnsupportedLatticeError
from .heights import HeightFunction, cut_from_height, h_gamma, height_from_cut
from .intlat import Vec
from .quiver import Cut, McKayQuiver, cut_quiver, is_cut, sinks, sources, type_of
from .typesimplex import require_admissible


def mutable_vertices(
    quiver: McKayQuiver, cut: Cut
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(sources, sinks) of the cut quiver; vertex 0 is the origin."""
    sub = cut_quiver(quiver, cut)
    return sources(sub), sinks(sub)


def mutate_source(quiver: McKayQuiver, cut: Cut, v: int) -> Cut:
    """Swap the incoming cut arrows of a source for its outgoing arrows."""
    incoming = frozenset(quiver.in_arrows(v))
    outgoing = frozenset(quiver.out_arrows(v))
    if not incoming <= cut.arrows or outgoing & cut.arrows:
        raise ValueError(f"vertex {v} is not a source of the cut quiver")
    return Cut(quiver=quiver, arrows=(cut.arrows - incoming) | outgoing)


def mutate_sink(quiver: McKayQuiver, cut: Cut, v: int) -> Cut:
    """Swap the outgoing cut arrows of a sink for its incoming arrows."""
    incoming = frozenset(quiver.in_arrows(v))
    outgoing = frozenset(quiver.out_arrows(v))
    if not outgoing <= cut.arrows or incoming & cut.arrows:
        raise ValueError(f"vertex {v} is not a sink of the cut quiver")
    return Cut(quiver=quiver, arrows=(cut.arrows - outgoing) | incoming)


def relative_height_vector(cut: Cut, reference: Cut) -> Vec:
    """Per-vertex height difference against a reference cut, over n+1."""
    quiver = cut.quiver
    if type_of(cut) != type_of(reference):
        raise ValueError("relative heights require cuts of the same type")
    h = height_from_cut(quiver, cut)
    h_ref = height_from_cut(quiver, reference)
    step = quiver.n + 1
    out = []
    for rep in quiver.vertices:
        diff = h.values[rep] - h_ref.values[rep]
        assert diff % step == 0
        out.append(diff // step)
    return tuple(out)


def _extremal_height(cut_a: Cut, cut_b: Cut, pick) -> HeightFunction:
    quiver = cut_a.quiver
    if type_of(cut_a) != type_of(cut_b):
        raise ValueError("meet and join require cuts of the same type")
    h_a = height_from_cut(quiver, cut_a)
    h_b = height_from_cut(quiver, cut_b)
    assert h_a.l1_values == h_b.l1_values
    values = {rep: pick(h_a.values[rep], h_b.values[rep]) for rep in quiver.vertices}
    return HeightFunction(
        embedding=quiver.embedding, values=values, l1_values=h_a.l1_values
    )


def meet(cut_a: Cut, cut_b: Cut) -> Cut:
    """Cut of the pointwise minimum of the two height functions."""
    return cut_from_height(cut_a.quiver, _extremal_height(cut_a, cut_b, min))


def join(cut_a: Cut, cut_b: Cut) -> Cut:
    """Cut of the pointwise maximum of the two height functions."""
    return cut_from_height(cut_a.quiver, _extremal_height(cut_a, cut_b, max))


@dataclass(frozen=True, eq=False)
class MutationLattice:
    """All cuts of one type, ordered by relative height vectors.

    ``cuts`` are sorted by their vectors lexicographically, so output is
    deterministic; ``hasse_edges`` are (lower index, upper index, vertex)
    triples and are only populated for positive types, where covers are
    mutations.
    """

    cut_type: Vec
    cuts: tuple[Cut, ...]
    v_vectors: tuple[Vec, ...]
    hasse_edges: tuple[tuple[int, int, int], ...]
    max_index: int
    min_index: int

    def to_json(self) -> dict:
        quiver = self.cuts[0].quiver
        return {
            "type": list(self.cut_type),
            "cuts": [cut_to_json(c) for c in self.cuts],
            "v_vectors": [list(v) for v in self.v_vectors],
            "hasse_edges": [
                {
                    "lower": lo,
                    "upper": hi,
                    "vertex": list(quiver.vertices[vx]),
                }
                for lo, hi, vx in self.hasse_edges
            ],
            "max_index": self.max_index,
            "min_index": self.min_index,
        }

    def hasse_dot(self) -> str:
        quiver = self.cuts[0].quiver
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for i, vec in enumerate(self.v_vectors):
            label = ",".join(str(c) for c in vec)
            lines.append(f'  c{i} [label="v=({label})"];')
        for lo, hi, vx in self.hasse_edges:
            rep = ",".join(str(c) for c in quiver.vertices[vx])
            lines.append(f'  c{lo} -> c{hi} [label="{rep}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def brute_force_cuts_of_type(quiver: McKayQuiver, cut_type) -> list[Cut]:
    """Exhaustive search over arrow subsets with the given type counts.

    Works for any nonnegative counts summing to m, admissible or not;
    for inadmissible counts the result is provably empty, which is what
    the verification harness checks.
    """
    cut_type = tuple(int(g) for g in cut_type)
    by_type = [
        [(v, t) for v in range(quiver.m)] for t in quiver.types
    ]
    pools = [
        list(combinations(by_type[t - 1], cut_type[t - 1])) for t in quiver.types
    ]
    found = []
    for chosen in product(*pools):
        arrows = frozenset(a for group in chosen for a in group)
        if is_cut(quiver, arrows):
            found.append(Cut(quiver=quiver, arrows=arrows))
    return found


def _dominant_index(vectors: tuple[Vec, ...], extreme) -> int:
    """Index of the componentwise max (or min); a member by lattice closure."""
    target = tuple(extreme(coords) for coords in zip(*vectors))
    for i, vec in enumerate(vectors):
        if vec == target:
            return i
    raise AssertionError("cut lattice is not closed under meet/join")


def enumerate_cut_lattice(
    quiver: McKayQuiver, cut_type, brute_budget: int = 6
) -> MutationLattice:
    """The full lattice of cuts of one type.

    Positive types are enumerated by closing a constructed seed cut
    under nonzero source and sink mutations, which is complete because
    mutations realise all cover relations.  Nonpositive types have no
    mutable vertices, so they fall back to exhaustive subset search,
    which is refused beyond ``brute_budget`` (an upper bound on m).
    """
    embedding = quiver.embedding
    cut_type = require_admissible(embedding, cut_type)
    seed = construct_cut(quiver, cut_type)
    positive = all(g > 0 for g in cut_type)
    edges: set[tuple[frozenset, frozenset, int]] = set()
    if positive:
        cuts_by_arrows = {seed.arrows: seed}
        queue = [seed]
        while queue:
            cut = queue.pop()
            cut_sources, cut_sinks = mutable_vertices(quiver, cut)
            for v in cut_sources:
                if v == 0:
                    continue
                upper = mutate_source(quiver, cut, v)
                edges.add((cut.arrows, upper.arrows, v))
                if upper.arrows not in cuts_by_arrows:
                    cuts_by_arrows[upper.arrows] = upper
                    queue.append(upper)
            for v in cut_sinks:
                if v == 0:
                    continue
                lower = mutate_sink(quiver, cut, v)
                edges.add((lower.arrows, cut.arrows, v))
                if lower.arrows not in cuts_by_arrows:
                    cuts_by_arrows[lower.arrows] = lower
                    queue.append(lower)
        cuts = list(cuts_by_arrows.values())
    else:
        if quiver.m > brute_budget:
            raise UnsupportedLatticeError(
                f"nonpositive type {cut_type} needs exhaustive search, "
                f"unsupported beyond m = {brute_budget}"
            )
        cuts = brute_force_cuts_of_type(quiver, cut_type)
    vectors = {c.arrows: relative_height_vector(c, seed) for c in cuts}
    cuts.sort(key=lambda c: vectors[c.arrows])
    order = {c.arrows: i for i, c in enumerate(cuts)}
    v_vectors = tuple(vectors[c.arrows] for c in cuts)
    hasse = tuple(
        sorted((order[lo], order[hi], vx) for lo, hi, vx in edges)
    )
    return MutationLattice(
        cut_type=cut_type,
        cuts=tuple(cuts),
        v_vectors=v_vectors,
        hasse_edges=hasse,
        max_index=_dominant_index(v_vectors, max),
        min_index=_dominant_index(v_vectors, min),
    )


def _require_positive(quiver: McKayQuiver, cut_type) -> Vec:
    cut_type = require_admissible(quiver.embedding, cut_type)
    if not all(g > 0 for g in cut_type):
        raise UnsupportedLatticeError(
            f"extremal elements by mutation require a positive type, got {cut_type}"
        )
    return cut_type


def max_element(quiver: McKayQuiver, cut_type) -> Cut:
    """Greedy maximum: mutate nonzero sources until only the origin is one."""
    cut_type = _require_positive(quiver, cut_type)
    cut = construct_cut(quiver, cut_type)
    for _ in range(10_000 * quiver.m):
        cut_sources, _ = mutable_vertices(quiver, cut)
        nonzero = [v for v in cut_sources if v != 0]
        if not nonzero:
            assert cut_sources == (0,)
            return cut
        cut = mutate_source(quiver, cut, nonzero[0])
    raise AssertionError("source mutation failed to terminate")


def min_element(quiver: McKayQuiver, cut_type) -> Cut:
    """Greedy minimum: mutate nonzero sinks until only the origin is one."""
    cut_type = _require_positive(quiver, cut_type)
    cut = construct_cut(quiver, cut_type)
    for _ in range(10_000 * quiver.m):
        _, cut_sinks = mutable_vertices(quiver, cut)
        nonzero = [v for v in cut_sinks if v != 0]
        if not nonzero:
            assert cut_sinks == (0,)
            return cut
        cut = mutate_sink(quiver, cut, nonzero[0])
    raise AssertionError("sink mutation failed to terminate")


def _support_feasible(embedding, cut_type, u: Vec, radius: int) -> bool:
    """Whether some lattice point of the comparison lattice lies below u.

    The comparison lattice is the image of L1 under
    ``y -> (y, 0) - (<y, type>/m) * 1``; its points pair to zero with
    the type vector, so coordinates with a positive type entry are
    bounded below inside ``{w <= u}`` and are enumerated exactly, while
    coordinates with a zero entry are truncated at ``-radius``.
    """
    n, m = embedding.n, embedding.m
    total = n + 1
    ranges = []
    for i in range(total):
        upper = u[i]
        if cut_type[i] > 0:
            other = sum(
                cut_type[j] * max(u[j], 0) for j in range(total) if j != i
            )
            lower = -(other // cut_type[i]) - 1
        else:
            lower = -radius
        if lower > upper:
            return False
        ranges.append(range(lower, upper + 1))
    for head in product(*ranges[:n]):
        partial = sum(g * w for g, w in zip(cut_type, head))
        if cut_type[n] > 0:
            if partial % cut_type[n] != 0:
                continue
            tail = -partial // cut_type[n]
            if tail not in ranges[n]:
                continue
            candidates = (tail,)
        else:
            if partial != 0:
                continue
            candidates = ranges[n]
        for tail in candidates:
            t = -tail
            y = tuple(w + t for w in head)
            if sum(g * c for g, c in zip(cut_type, y)) != t * m:
                continue
            if embedding.in_sublattice(y):
                return True
    return False


def _support_max(embedding, cut_type, x: Vec, radius: int) -> int:
    """Largest z such that ``(x, 0) - z * 1`` dominates a comparison-lattice point."""
    assert all(c >= 0 for c in x)
    for z in range(sum(x), -1, -1):
        u = tuple(c - z for c in x) + (-z,)
        if _support_feasible(embedding, cut_type, u, radius):
            return z
    raise AssertionError("z = 0 is always feasible for nonnegative x")


def max_via_p(quiver: McKayQuiver, cut_type) -> Cut:
    """Maximal cut by direct construction of its height function.

    Every height value is ``<x, 1> - (n+1) * p(x)`` where p(x) is the
    largest downward shift keeping ``(x, 0)`` above the comparison
    lattice.  The search over that lattice is truncated at a generous
    radius in the unbounded directions, and the result is certified to
    be a valid height function of the requested type; an insufficient
    radius therefore surfaces as an error, never as a wrong answer.
    """
    embedding = quiver.embedding
    cut_type = require_admissible(embedding, cut_type)
    n, m = embedding.n, embedding.m
    norm = max(
        (abs(c) for rep in quiver.vertices for c in rep), default=0
    )
    radius = m * (norm + m + n + 1)
    values = {}
    for rep in quiver.vertices:
        p = _support_max(embedding, cut_type, rep, radius)
        values[rep] = sum(rep) - (n + 1) * p
    l1_values = tuple(
        h_gamma(embedding, col, cut_type) for col in embedding.basis_columns()
    )
    height = HeightFunction(
        embedding=embedding, values=values, l1_values=l1_values
    )
    try:
        cut = cut_from_height(quiver, height)
    except ValueError as exc:
        raise SearchBoundExceededError(
            f"candidate maximum failed certification ({exc}); "
            f"the search radius {radius} was insufficient"
        ) from exc
    if type_of(cut) != cut_type:
        raise SearchBoundExceededError(
            f"candidate maximum has type {type_of(cut)} instead of {cut_type}; "
            f"the search radius {radius} was insufficient"
        )
    return cut
