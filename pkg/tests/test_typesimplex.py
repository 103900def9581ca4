"""Type simplex enumeration, hollowness, junior elements, central degrees."""

import random
from itertools import combinations_with_replacement

import pytest

from mckaycuts.intlat import LatticeEmbedding, mat_mul
from mckaycuts.typesimplex import (
    enumerate_types,
    has_preprojective_cut,
    is_admissible_type,
    juniors_cyclic,
    monomial_degree,
    trivial_types,
)
from conftest import instance
from oracles import random_unimodular


def simplex_points(n, m):
    for bars in combinations_with_replacement(range(m + 1), n):
        cuts = (0, *bars, m)
        yield tuple(cuts[i + 1] - cuts[i] for i in range(n + 1))


def brute_force_types(emb):
    """All simplex points passing the divisibility test, checked directly."""
    cols = tuple(zip(*emb.bprime))
    found = []
    for point in simplex_points(emb.n, emb.m):
        if all(
            sum(g * c for g, c in zip(point, col)) % emb.m == 0 for col in cols
        ):
            found.append(point)
    return sorted(found)


class TestEnumerateTypes:
    def test_half_11(self):
        _, emb, _ = instance("half_11")
        report = enumerate_types(emb)
        assert set(report.all_types) == {(2, 0), (0, 2), (1, 1)}
        assert report.positive_types == ((1, 1),)
        assert not report.hollow

    def test_third_111(self):
        _, emb, _ = instance("third_111")
        report = enumerate_types(emb)
        assert set(report.all_types) == {(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)}
        assert report.positive_types == ((1, 1, 1),)

    def test_klein_sl3_hollow(self):
        _, emb, _ = instance("klein_sl3")
        report = enumerate_types(emb)
        assert set(report.all_types) == {
            (4, 0, 0),
            (0, 4, 0),
            (0, 0, 4),
            (2, 2, 0),
            (2, 0, 2),
            (0, 2, 2),
        }
        assert report.positive_types == ()
        assert report.hollow

    def test_matches_brute_force(self, named_instance):
        _, emb, _ = named_instance
        report = enumerate_types(emb)
        assert list(report.all_types) == brute_force_types(emb)

    def test_vertices_are_types(self, named_instance):
        _, emb, _ = named_instance
        report = enumerate_types(emb)
        assert set(trivial_types(emb)) <= set(report.all_types)

    def test_types_sum_to_m(self, named_instance):
        _, emb, _ = named_instance
        for t in enumerate_types(emb).all_types:
            assert sum(t) == emb.m
            assert all(g >= 0 for g in t)

    def test_hollow_invariant_under_unimodular_action(self):
        rng = random.Random(11)
        for name in ("third_111", "klein_sl3", "sixth_123"):
            _, emb, _ = instance(name)
            report = enumerate_types(emb)
            for _ in range(5):
                u = random_unimodular(emb.n, rng)
                other = LatticeEmbedding.from_basis(mat_mul(emb.bprime, u))
                other_report = enumerate_types(other)
                assert other_report.hollow == report.hollow
                assert other_report.all_types == report.all_types


class TestHasPreprojectiveCut:
    def test_trivial_group_empty(self):
        assert has_preprojective_cut(LatticeEmbedding.identity(2)) is None

    def test_third_111(self):
        _, emb, _ = instance("third_111")
        assert has_preprojective_cut(emb) == (1, 1, 1)

    def test_klein_sl3_empty(self):
        _, emb, _ = instance("klein_sl3")
        assert has_preprojective_cut(emb) is None


class TestJuniorsCyclic:
    def test_half_11(self):
        spec, _, _ = instance("half_11")
        assert juniors_cyclic(spec) == [(1, 1)]

    def test_third_111(self):
        spec, _, _ = instance("third_111")
        assert juniors_cyclic(spec) == [(1, 1, 1)]

    def test_quarter_112(self):
        spec, _, _ = instance("quarter_112")
        assert juniors_cyclic(spec) == [(1, 1, 2), (2, 2, 0)]

    def test_requires_single_generator(self):
        spec, _, _ = instance("klein_sl3")
        with pytest.raises(ValueError, match="single-generator"):
            juniors_cyclic(spec)

    def test_matches_non_vertex_types(self):
        for name in ("half_11", "third_111", "quarter_112", "sixth_123",
                     "quarter_1111", "fifth_1112"):
            spec, emb, _ = instance(name)
            juniors = set(juniors_cyclic(spec))
            report = enumerate_types(emb)
            assert juniors == set(report.all_types) - set(trivial_types(emb))


class TestMonomialDegree:
    def test_product_of_variables_has_degree_one(self, named_instance):
        _, emb, _ = named_instance
        ones = (1,) * (emb.n + 1)
        for t in enumerate_types(emb).all_types:
            assert monomial_degree(emb, ones, t) == 1

    def test_examples(self):
        _, emb, _ = instance("third_111")
        assert monomial_degree(emb, (3, 0, 0), (1, 1, 1)) == 1
        assert monomial_degree(emb, (3, 0, 0), (3, 0, 0)) == 3

    def test_pure_powers_reconstruct_type(self, named_instance):
        _, emb, _ = named_instance
        n, m = emb.n, emb.m
        for t in enumerate_types(emb).all_types:
            recovered = tuple(
                monomial_degree(
                    emb, tuple(m if j == i else 0 for j in range(n + 1)), t
                )
                for i in range(n + 1)
            )
            assert recovered == t

    def test_rejects_non_invariant_monomial(self):
        _, emb, _ = instance("third_111")
        with pytest.raises(ValueError, match="invariant"):
            monomial_degree(emb, (1, 0, 0), (1, 1, 1))


class TestAdmissibility:
    def test_sixth_123_table(self):
        _, emb, _ = instance("sixth_123")
        assert is_admissible_type(emb, (1, 2, 3))
        assert is_admissible_type(emb, (3, 0, 3))
        assert not is_admissible_type(emb, (2, 2, 2))
        assert not is_admissible_type(emb, (1, 2, 2))  # wrong sum
        assert not is_admissible_type(emb, (7, 2, -3))  # negative entry
