"""Constructing a concrete cut for each admissible type.

The construction labels every vertex through the homomorphism
``x -> <x, type> mod m`` divided by the gcd of the type entries, and
cuts exactly the label-decreasing arrows; this realises each admissible
type by a cut that is periodic for the larger intermediate lattice.
"""

from __future__ import annotations

from math import gcd

from .intlat import LatticeEmbedding
from .quiver import Cut, McKayQuiver, Subquiver, cut_quiver, type_of
from .typesimplex import require_admissible


def xi_gamma(embedding: LatticeEmbedding, x, cut_type) -> int:
    """Residue mod m of ``<canonical rep of x, first n type entries>``.

    Constant on cosets exactly because the type satisfies the
    divisibility conditions, which are therefore checked up front.
    """
    cut_type = require_admissible(embedding, cut_type)
    rep = embedding.reduce(x)
    return sum(r * g for r, g in zip(rep, cut_type)) % embedding.m


def vertex_labels(quiver: McKayQuiver, cut_type) -> tuple[int, ...]:
    """Labels ``xi(v)/d`` in ``{0, ..., m/d - 1}`` for every vertex."""
    embedding = quiver.embedding
    cut_type = require_admissible(embedding, cut_type)
    d = gcd(*cut_type)
    labels = []
    for rep in quiver.vertices:
        xi = sum(r * g for r, g in zip(rep, cut_type)) % embedding.m
        assert xi % d == 0, "xi values are multiples of the type gcd"
        labels.append(xi // d)
    return tuple(labels)


def construct_cut(quiver: McKayQuiver, cut_type) -> Cut:
    """A cut of the given admissible type, by cutting decreasing arrows."""
    embedding = quiver.embedding
    cut_type = require_admissible(embedding, cut_type)
    m = embedding.m
    d = gcd(*cut_type)
    m_prime = m // d
    if m_prime == 1:
        which = cut_type.index(m) + 1
        arrows = frozenset((v, which) for v in range(m))
        return Cut(quiver=quiver, arrows=arrows)
    labels = vertex_labels(quiver, cut_type)
    arrows = set()
    for v, t in quiver.arrows():
        j = labels[v]
        if j > (j + cut_type[t - 1] // d) % m_prime:
            arrows.add((v, t))
    return Cut(quiver=quiver, arrows=frozenset(arrows))


RelationSquare = tuple[tuple[int, int], ...]


def degree_zero_presentation(
    quiver: McKayQuiver, cut: Cut
) -> tuple[Subquiver, tuple[RelationSquare, ...]]:
    """Cut quiver plus the commutativity squares that survive the cut.

    Each surviving relation is returned as the four arrows
    ``(a_i, a_j, b_j, b_i)`` with ``a_i a_j = b_j b_i``, kept only when
    none of the four is a cut arrow.  Together with the cut quiver this
    presents the degree-zero part of the graded algebra.
    """
    relations = []
    for v in range(quiver.m):
        for i in quiver.types:
            for j in quiver.types:
                if i >= j:
                    continue
                a_i = (v, i)
                a_j = (quiver.target(v, i), j)
                b_j = (v, j)
                b_i = (quiver.target(v, j), i)
                if all(a not in cut.arrows for a in (a_i, a_j, b_j, b_i)):
                    relations.append((a_i, a_j, b_j, b_i))
    return cut_quiver(quiver, cut), tuple(relations)


def cut_to_json(cut: Cut) -> dict:
    quiver = cut.quiver
    return {
        "type": list(type_of(cut)),
        "arrows": [
            {"source": list(quiver.vertices[v]), "arrow_type": t}
            for v, t in cut.sorted_arrows()
        ],
    }


def cut_from_json(quiver: McKayQuiver, obj: dict) -> frozenset[tuple[int, int]]:
    """Arrow set from the cut JSON format (not validated as a cut)."""
    arrows = set()
    for entry in obj["arrows"]:
        rep = quiver.embedding.reduce(tuple(entry["source"]))
        arrows.add((quiver.index[rep], int(entry["arrow_type"])))
    return frozenset(arrows)
