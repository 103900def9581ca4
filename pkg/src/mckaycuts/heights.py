"""Height functions and their bijection with periodic cuts.

A height function assigns h(0) = 0 and changes by +1 or -n along every
arrow of the covering quiver; the equivariant ones (h(x+y) = h(x)+h(y)
for y in L1) correspond one-to-one with cuts, the cut being exactly the
arrows where h drops by n.  Values are stored on the m canonical coset
representatives together with the homomorphism values on the HNF basis
of L1; everything else follows by equivariance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import NotACutError
from .intlat import LatticeEmbedding, Vec
from .quiver import Cut, McKayQuiver, step_vectors


def h_gamma(embedding: LatticeEmbedding, y, cut_type) -> int:
    """Value on ``y in L1`` of the height homomorphism of a given type.

    Computed exactly as ``(m*<y,1> - (n+1)*<y,type>) / m``; a non-integer
    result means the type vector is not a valid cut type for this
    embedding, and ``y`` outside L1 is rejected.
    """
    y = tuple(int(c) for c in y)
    if not embedding.in_sublattice(y):
        raise ValueError(f"{y} is not in the sublattice")
    n, m = embedding.n, embedding.m
    cut_type = tuple(int(g) for g in cut_type)
    if len(cut_type) != n + 1:
        raise ValueError(f"type vector must have length {n + 1}")
    numerator = m * sum(y) - (n + 1) * sum(a * b for a, b in zip(y, cut_type))
    if numerator % m != 0:
        raise ValueError(
            f"{cut_type} is not a valid cut type for this embedding"
        )
    return numerator // m


def types_equal_iff_h_equal(embedding: LatticeEmbedding, type_a, type_b) -> bool:
    """Whether two types induce the same homomorphism on the HNF basis of L1."""
    cols = embedding.basis_columns()
    return all(
        h_gamma(embedding, col, type_a) == h_gamma(embedding, col, type_b)
        for col in cols
    )


@dataclass(frozen=True, eq=False)
class HeightFunction:
    """An equivariant height function, stored on canonical representatives."""

    embedding: LatticeEmbedding
    values: dict[Vec, int] = field(repr=False)
    l1_values: tuple[int, ...]

    def value_at(self, x) -> int:
        """Evaluate at any lattice point via equivariance."""
        x = tuple(int(c) for c in x)
        rep = self.embedding.reduce(x)
        diff = tuple(a - b for a, b in zip(x, rep))
        coeffs = self.embedding.l1_coefficients(diff)
        assert coeffs is not None
        return self.values[rep] + sum(
            c * v for c, v in zip(coeffs, self.l1_values)
        )

    def to_json(self) -> dict:
        return {
            "values": {
                ",".join(str(c) for c in rep): self.values[rep]
                for rep in sorted(self.values)
            },
            "l1_values": list(self.l1_values),
        }


def _l1_shift(x: Vec, step: Vec, rep: Vec) -> Vec:
    return tuple(a + s - r for a, s, r in zip(x, step, rep))


def height_from_cut(quiver: McKayQuiver, cut) -> HeightFunction:
    """Height function of a cut; rejects arrow sets that are not cuts.

    Works on the quotient: breadth-first assignment of candidate values
    over arrows in both directions, correcting each crossing of the
    fundamental domain by the forced homomorphism on L1, followed by a
    consistency check of every arrow.  Any failure (wrong arrow count,
    type failing divisibility, or two paths disagreeing) means the
    input is not a cut.
    """
    arrows = cut.arrows if isinstance(cut, Cut) else frozenset(cut)
    embedding = quiver.embedding
    n, m = quiver.n, quiver.m
    counts = [0] * (n + 1)
    for arrow in arrows:
        v, t = arrow
        if not (0 <= v < m and 1 <= t <= n + 1):
            raise NotACutError(f"unknown arrow {arrow!r}")
        counts[t - 1] += 1
    if sum(counts) != m:
        raise NotACutError(
            f"a cut has exactly m = {m} arrows, got {sum(counts)}"
        )
    cut_type = tuple(counts)
    try:
        l1_values = tuple(
            h_gamma(embedding, col, cut_type)
            for col in embedding.basis_columns()
        )
    except ValueError as exc:
        raise NotACutError(str(exc)) from exc

    def eta(y: Vec) -> int:
        coeffs = embedding.l1_coefficients(y)
        assert coeffs is not None
        return sum(c * v for c, v in zip(coeffs, l1_values))

    steps = step_vectors(n)
    values: dict[int, int] = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        neighbours = [(v, t) for t in quiver.types] + list(quiver.in_arrows(v))
        for u, t in neighbours:
            w = quiver.target(u, t)
            shift = _l1_shift(
                quiver.vertices[u], steps[t - 1], quiver.vertices[w]
            )
            increment = -n if (u, t) in arrows else 1
            if u == v and w not in values:
                values[w] = values[u] + increment - eta(shift)
                queue.append(w)
            elif w == v and u not in values:
                values[u] = values[w] - increment + eta(shift)
                queue.append(u)
    assert len(values) == m, "quotient Cayley graph must be connected"
    for u, t in quiver.arrows():
        w = quiver.target(u, t)
        shift = _l1_shift(
            quiver.vertices[u], steps[t - 1], quiver.vertices[w]
        )
        increment = -n if (u, t) in arrows else 1
        if values[w] + eta(shift) - values[u] != increment:
            raise NotACutError(
                "height increments are inconsistent: two paths to "
                f"{quiver.vertices[w]} disagree, so the arrow set is not a cut"
            )
    return HeightFunction(
        embedding=embedding,
        values={quiver.vertices[v]: val for v, val in values.items()},
        l1_values=l1_values,
    )


def cut_from_height(quiver: McKayQuiver, height: HeightFunction) -> Cut:
    """The cut whose arrows are exactly the drops of the height function."""
    embedding = quiver.embedding
    if height.embedding.hnf != embedding.hnf:
        raise ValueError("height function belongs to a different embedding")
    n = quiver.n
    if height.values.get(quiver.vertices[0], None) != 0:
        raise ValueError("a height function must vanish at the origin")
    if set(height.values) != set(quiver.vertices):
        raise ValueError("height values must cover all canonical representatives")
    steps = step_vectors(n)
    arrows = set()
    for u, t in quiver.arrows():
        w = quiver.target(u, t)
        shift = _l1_shift(
            quiver.vertices[u], steps[t - 1], quiver.vertices[w]
        )
        coeffs = embedding.l1_coefficients(shift)
        assert coeffs is not None
        delta = (
            height.values[quiver.vertices[w]]
            + sum(c * v for c, v in zip(coeffs, height.l1_values))
            - height.values[quiver.vertices[u]]
        )
        if delta == -n:
            arrows.add((u, t))
        elif delta != 1:
            raise ValueError(
                f"not a height function: step of {delta} along arrow {(u, t)}"
            )
    return Cut(quiver=quiver, arrows=frozenset(arrows))
