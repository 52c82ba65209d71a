import itertools

import pytest

from altiset.errors import PartitionError
from altiset.orders import (
    GAIN,
    PRICE,
    KeyedOrder,
    OrderSystem,
    altiset_of_system,
    check_form_equivalences,
    decompose_altiset,
    indistinguishability,
    quotient,
    system_union,
)
from altiset.relation import FiniteRelation, Universe, altiset_bruteforce, union

from conftest import random_system


def system(size, *orders):
    return OrderSystem(Universe(size), tuple(KeyedOrder(k, d) for k, d in orders))


class TestSystemUnion:
    def test_single_gain_order(self):
        r = system_union(system(2, ([1, 2], GAIN)))
        assert set(r.pairs()) == {(0, 0), (1, 1), (0, 1)}

    def test_gain_plus_price_symmetrizes(self):
        r = system_union(system(2, ([1, 2], GAIN), ([1, 2], PRICE)))
        assert set(r.pairs()) == {(0, 0), (1, 1), (0, 1), (1, 0)}

    def test_duplicate_orders_are_idempotent(self):
        one = system_union(system(3, ([3, 1, 2], GAIN)))
        two = system_union(system(3, ([3, 1, 2], GAIN), ([3, 1, 2], GAIN)))
        assert one == two

    def test_reflexive_by_construction(self, rng):
        for _ in range(30):
            r = system_union(random_system(rng, 5))
            assert all((a, a) in r for a in range(5))


class TestIndistinguishability:
    def test_equal_keys_merge(self):
        assert indistinguishability(system(3, ([1, 1, 2], GAIN))) == ((0, 1), (2,))

    def test_intersection_of_equivalences(self):
        classes = indistinguishability(system(2, ([1, 1], GAIN), ([2, 3], GAIN)))
        assert classes == ((0,), (1,))

    def test_all_constant(self):
        assert indistinguishability(system(3, ([7, 7, 7], GAIN), ([1, 1, 1], PRICE))) == ((0, 1, 2),)

    def test_matches_union_relation_formula(self, rng):
        # ~_R computed as (R u R^-1)' u Delta must give the same classes
        for _ in range(100):
            n = rng.randint(1, 7)
            sys_ = random_system(rng, n)
            r = system_union(sys_)
            incomparable = ~(r.adjacency | r.adjacency.T)
            classes = {}
            for a in range(n):
                sig = tuple(
                    bool(incomparable[a][b]) or a == b for b in range(n)
                )
                classes.setdefault(sig, []).append(a)
            by_union = sorted(sorted(c) for c in classes.values())
            by_keys = sorted(sorted(c) for c in indistinguishability(sys_))
            assert by_union == by_keys


class TestQuotient:
    def test_chain(self):
        view = quotient(system(3, ([1, 2, 3], GAIN)))
        assert view.classes == ((0,), (1,), (2,))
        assert view.maximal_classes == {2}

    def test_opposing_orders_make_all_classes_maximal(self):
        view = quotient(system(2, ([1, 2], GAIN), ([1, 2], PRICE)))
        assert len(view.classes) == 2
        assert view.maximal_classes == {0, 1}
        assert not view.class_order.adjacency.any()

    def test_single_class(self):
        view = quotient(system(2, ([1, 1], GAIN)))
        assert view.classes == ((0, 1),)
        assert view.maximal_classes == {0}

    def test_class_order_is_strict_order(self, rng):
        for _ in range(200):
            view = quotient(random_system(rng, rng.randint(1, 8)))
            adj = view.class_order.adjacency
            assert not adj.trace()
            assert not (adj & adj.T).any()
            assert view.class_order.transitive_closure() == view.class_order


class TestAltisetOfSystem:
    def test_single_gain_order_is_argmax(self):
        assert altiset_of_system(system(4, ([3, 1, 3, 2], GAIN))) == {0, 2}

    def test_gain_and_price(self):
        assert altiset_of_system(system(3, ([1, 2, 2], GAIN), ([3, 1, 1], PRICE))) == {1, 2}

    def test_triangle_sample_keeps_equilateral(self):
        # five triangles by side lengths; gain = area, price = circumference
        import math

        sides = [(3, 4, 5), (2, 3, 4), (4, 4, 4), (1, 4, 4), (2, 2, 3)]
        def area(a, b, c):
            s = (a + b + c) / 2
            return math.sqrt(s * (s - a) * (s - b) * (s - c))
        areas = [area(*t) for t in sides]
        circs = [sum(t) for t in sides]
        sys_ = system(5, (areas, GAIN), (circs, PRICE))
        chosen = altiset_of_system(sys_)
        assert 2 in chosen  # the equilateral triangle
        assert chosen == altiset_bruteforce(system_union(sys_))

    def test_matches_definitional_altiset(self, rng):
        for _ in range(300):
            sys_ = random_system(rng, rng.randint(1, 8))
            assert altiset_of_system(sys_) == altiset_bruteforce(system_union(sys_))

    def test_subset_restriction(self, rng):
        for _ in range(100):
            n = rng.randint(2, 8)
            sys_ = random_system(rng, n)
            subset = [i for i in range(n) if rng.random() < 0.6]
            assert altiset_of_system(sys_, subset) == altiset_bruteforce(
                system_union(sys_), subset
            )

    def test_overcharge(self, rng):
        for _ in range(200):
            n = rng.randint(1, 8)
            sys_ = random_system(rng, n)
            r = system_union(sys_)
            chosen = altiset_of_system(sys_)
            assert chosen
            for a in set(range(n)) - chosen:
                assert any((a, v) in r or (v, a) in r for v in chosen)


class TestDecompose:
    def test_single_block(self, rng):
        for _ in range(20):
            sys_ = random_system(rng, 6)
            assert decompose_altiset(sys_, [range(6)]) == altiset_of_system(sys_)

    def test_partition_invariance(self, rng):
        for _ in range(200):
            n = rng.randint(1, 8)
            sys_ = random_system(rng, n)
            blocks = {}
            for i in range(n):
                blocks.setdefault(rng.randint(0, 2), []).append(i)
            got = decompose_altiset(sys_, list(blocks.values()))
            assert got == altiset_of_system(sys_)

    def test_partial_cover_decomposes_its_union(self, rng):
        sys_ = random_system(rng, 6)
        got = decompose_altiset(sys_, [[0, 1], [4, 5]])
        assert got == altiset_of_system(sys_, [0, 1, 4, 5])

    def test_overlapping_blocks_rejected(self, rng):
        with pytest.raises(PartitionError):
            decompose_altiset(random_system(rng, 4), [[0, 1], [1, 2]])

    def test_non_induced_counterexample(self):
        # orders <=1 and <=2 are NOT both linearly induced; the principle
        # fails for the raw union relation: V_{a,c} = {a,c} != V_A = {c}
        a, b, c = 0, 1, 2
        universe = Universe(3, ("a", "b", "c"))
        r1 = FiniteRelation.from_pairs(universe, [(a, b), (a, c), (b, c), (a, a), (b, b), (c, c)])
        r2 = FiniteRelation.from_pairs(universe, [(c, a), (a, a), (b, b), (c, c)])
        r = union([r1, r2])
        assert r.altiset({a}) == {a}
        assert r.altiset({b, c}) == {c}
        assert r.altiset({a, c}) == {a, c}
        assert r.altiset() == {c}
        merged = r.altiset({a}) | r.altiset({b, c})
        assert r.altiset(merged) == {a, c} != r.altiset()


class TestFormEquivalences:
    def test_aligned_orders(self):
        assert check_form_equivalences([1, 2], [1, 2], 0, 1) == (True,) * 4

    def test_opposed_orders(self):
        assert check_form_equivalences([1, 2], [2, 1], 0, 1) == (False,) * 4

    def test_reflexive_pair(self):
        assert check_form_equivalences([1, 2], [2, 1], 1, 1) == (True,) * 4

    def test_all_four_agree_exhaustively(self):
        values = [0, 1, 2]
        for f in itertools.product(values, repeat=3):
            for g in itertools.product(values, repeat=3):
                for a in range(3):
                    for b in range(3):
                        forms = check_form_equivalences(f, g, a, b)
                        assert len(set(forms)) == 1
