"""Group descriptions and their canonical lattice embeddings.

A finite abelian subgroup of SL(n+1) acting diagonally is described by
generators ``1/m_j (w_1, ..., w_{n+1})`` (order plus weight vector).
Only the sublattice L1 = ker(Z^n -> prod_j Z/m_j) matters downstream,
so the embedding is computed once and the group is forgotten.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonFaithfulSpecError
from .intlat import LatticeEmbedding, Vec, hnf, kernel_basis


@dataclass(frozen=True)
class Generator:
    order: int
    weights: Vec


@dataclass(frozen=True)
class GroupSpec:
    """Diagonal generators of an abelian subgroup of SL(n+1)."""

    n: int
    generators: tuple[Generator, ...]

    @classmethod
    def make(cls, n: int, generators) -> "GroupSpec":
        if n < 1:
            raise ValueError("dimension parameter n must be at least 1")
        gens = []
        for order, weights in generators:
            order = int(order)
            if order < 1:
                raise ValueError("generator order must be a positive integer")
            weights = tuple(int(w) for w in weights)
            if len(weights) != n + 1:
                raise ValueError(
                    f"generator weights must have length n+1 = {n + 1}"
                )
            weights = tuple(w % order for w in weights)
            if sum(weights) % order != 0:
                raise ValueError(
                    "invalid weights: sum must vanish mod the order"
                    " (the action must land in SL)"
                )
            gens.append(Generator(order=order, weights=weights))
        return cls(n=n, generators=tuple(gens))


def embedding_from_spec(spec: GroupSpec) -> LatticeEmbedding:
    """Canonical embedding whose quotient is the dual of the given group.

    L1 is the kernel of ``v -> (sum_i w_{j,i} v_i mod m_j)_j`` using the
    first n weights of each generator; the last weight is implied by the
    SL condition.  Rejects generating data whose direct-sum order
    disagrees with the resulting lattice index.
    """
    n = spec.n
    if not spec.generators:
        return LatticeEmbedding.identity(n)
    g = len(spec.generators)
    # Kernel of [A | -diag(orders)] : Z^(n+g) -> Z^g, projected to the
    # first n coordinates.  The projection is injective on the kernel
    # because the diagonal block is nonsingular.
    rows = []
    for j, gen in enumerate(spec.generators):
        row = list(gen.weights[:n]) + [0] * g
        row[n + j] = -gen.order
        rows.append(tuple(row))
    basis = kernel_basis(tuple(rows))
    if len(basis) != n:
        raise AssertionError("kernel rank must equal n")
    columns = [vec[:n] for vec in basis]
    mat = tuple(tuple(col[i] for col in columns) for i in range(n))
    h, _ = hnf(mat)
    m = 1
    for i in range(n):
        m *= h[i][i]
    stated = math.prod(gen.order for gen in spec.generators)
    if stated != m:
        raise NonFaithfulSpecError(
            "non-faithful or redundant generating data: "
            f"stated group order {stated}, lattice index {m}"
        )
    return LatticeEmbedding(n=n, bprime=h, hnf=h, m=m)


def group_order(spec: GroupSpec) -> int:
    """Index of the kernel lattice, i.e. the group order."""
    return embedding_from_spec(spec).m


def parse_input(obj: dict) -> tuple[LatticeEmbedding, GroupSpec | None]:
    """Load an embedding from the JSON input schema.

    Accepts either ``{"n": int, "generators": [{"order": int,
    "weights": [int, ...]}, ...]}`` or the direct form ``{"n": int,
    "bprime": [[int, ...], ...]}``.
    """
    if not isinstance(obj, dict):
        raise ValueError("input must be a JSON object")
    if "n" not in obj:
        raise ValueError('input is missing the "n" field')
    n = int(obj["n"])
    if "bprime" in obj:
        mat = obj["bprime"]
        if len(mat) != n:
            raise ValueError('"bprime" must be an n x n matrix')
        return LatticeEmbedding.from_basis(mat), None
    if "generators" not in obj:
        raise ValueError('input needs either "generators" or "bprime"')
    gens = [(entry["order"], entry["weights"]) for entry in obj["generators"]]
    spec = GroupSpec.make(n, gens)
    return embedding_from_spec(spec), spec
