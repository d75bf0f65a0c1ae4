"""Group model tests; oracles are plain loops independent of the library paths."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abiso.groups import (
    PPartition,
    Subgroup,
    cyclic_subgroup,
    element_from_index,
    element_order,
    element_to_index,
    group_neg,
    group_op,
    intersect,
    make_group,
    omega1,
    p_component,
    p_part,
    quotient_type,
    relative_order,
    subgroup_type,
)
from abiso.lattice import all_subgroups


def brute_order(G, x):
    """Repeated-addition oracle for the order of an element."""
    y = x
    m = 1
    while y != G.identity:
        y = group_op(G, y, x)
        m += 1
    return m


def coset_table_orders(G, H):
    """Element orders of G/H read off an explicit coset table."""
    cosets = []
    seen = set()
    for x in G.elements():
        if x in seen:
            continue
        coset = frozenset(group_op(G, x, h) for h in H.elements)
        seen |= coset
        cosets.append(coset)
    identity = next(c for c in cosets if G.identity in c)
    rep = {c: min(c) for c in cosets}
    orders = []
    for c in cosets:
        y = rep[c]
        acc = y
        m = 1
        while acc not in identity:
            acc = group_op(G, acc, y)
            m += 1
        orders.append(m)
    return sorted(orders)


SMALL_ORDERS = st.lists(st.integers(min_value=2, max_value=12), min_size=0, max_size=4)


class TestMakeGroup:
    def test_prime_power_regrouping(self):
        G = make_group([4, 2])
        assert G.components == (PPartition(2, (1, 2)),)
        assert G.order == 8
        assert G.cyclic_orders == (2, 4)

    def test_composite_split(self):
        G = make_group([6])
        assert G.components == (PPartition(2, (1,)), PPartition(3, (1,)))
        assert G.order == 6

    def test_trivial(self):
        G = make_group([])
        assert G.components == ()
        assert G.order == 1
        assert G.identity == ()

    @pytest.mark.parametrize("bad", [1, 0, -3])
    def test_rejects_small_orders(self, bad):
        with pytest.raises(ValueError):
            make_group([bad])

    @given(SMALL_ORDERS, st.randoms())
    def test_canonical_under_permutation(self, orders, rng):
        shuffled = list(orders)
        rng.shuffle(shuffled)
        assert make_group(orders) == make_group(shuffled)

    def test_partition_validation(self):
        with pytest.raises(ValueError):
            PPartition(4, (1,))
        with pytest.raises(ValueError):
            PPartition(2, (2, 1))
        with pytest.raises(ValueError):
            PPartition(2, (0,))


class TestGroupOp:
    def test_componentwise_sum(self):
        G = make_group([2, 4])
        assert group_op(G, (1, 3), (1, 2)) == (0, 1)

    def test_identity_and_inverse(self):
        G = make_group([2, 4])
        for x in G.elements():
            assert group_op(G, x, G.identity) == x
            assert group_op(G, x, group_neg(G, x)) == G.identity

    def test_dimension_mismatch(self):
        G = make_group([2, 4])
        with pytest.raises(ValueError):
            group_op(G, (1,), (0, 1))

    @given(st.lists(st.integers(min_value=2, max_value=9), min_size=1, max_size=3),
           st.data())
    @settings(max_examples=40)
    def test_abelian_and_associative(self, orders, data):
        G = make_group(orders)
        pick = st.tuples(*(st.integers(0, q - 1) for q in G.cyclic_orders))
        x, y, z = data.draw(pick), data.draw(pick), data.draw(pick)
        assert group_op(G, x, y) == group_op(G, y, x)
        assert group_op(G, group_op(G, x, y), z) == group_op(G, x, group_op(G, y, z))


class TestElementOrder:
    def test_identity(self):
        G = make_group([2, 4])
        assert element_order(G, G.identity) == 1

    def test_frozen_values(self):
        G = make_group([2, 4])
        assert element_order(G, (1, 2)) == 2
        assert element_order(G, (0, 1)) == 4

    @pytest.mark.parametrize("orders", [[2, 4], [8], [3, 9], [12], [2, 2, 2]])
    def test_matches_repeated_addition(self, orders):
        G = make_group(orders)
        for x in G.elements():
            assert element_order(G, x) == brute_order(G, x)

    def test_index_round_trip(self):
        G = make_group([2, 4, 3])
        ranked = sorted(G.elements())
        for i, x in enumerate(ranked):
            assert element_to_index(G, x) == i
            assert element_from_index(G, i) == x


class TestSubgroups:
    def test_cyclic_subgroup_identity(self):
        G = make_group([2, 4])
        assert cyclic_subgroup(G, G.identity).elements == (G.identity,)

    def test_cyclic_subgroup_elements(self):
        G = make_group([2, 4])
        H = cyclic_subgroup(G, (0, 1))
        assert H.elements == ((0, 0), (0, 1), (0, 2), (0, 3))
        assert H.generators == ((0, 1),)
        assert H.order == element_order(G, (0, 1))

    def test_cyclic_generator_of_cyclic_group(self):
        G = make_group([8])
        assert cyclic_subgroup(G, (1,)).order == G.order

    def test_from_elements_rejects_non_closed(self):
        G = make_group([4])
        with pytest.raises(ValueError):
            Subgroup.from_elements(G, [(0,), (1,)])

    def test_from_elements_recovers_generators(self):
        G = make_group([2, 4])
        H = Subgroup.from_elements(G, [(0, 0), (1, 0), (0, 2), (1, 2)])
        assert Subgroup.from_generators(G, H.generators).elements == H.elements

    def test_intersect_with_whole_and_trivial(self):
        G = make_group([2, 4])
        L = all_subgroups(G)
        whole = next(H for H in L if H.order == G.order)
        triv = next(H for H in L if H.order == 1)
        for H in L:
            assert intersect(H, whole).elements == H.elements
            assert intersect(H, triv).is_trivial

    def test_intersect_frozen_case(self):
        G = make_group([2, 4])
        H = cyclic_subgroup(G, (0, 1))
        K = omega1(G, 2)
        got = intersect(H, K)
        assert got.elements == ((0, 0), (0, 2))
        assert got.elements == tuple(sorted(H.element_set & K.element_set))

    def test_intersect_parent_mismatch(self):
        with pytest.raises(ValueError):
            intersect(
                Subgroup.trivial(make_group([4])), Subgroup.trivial(make_group([2, 2]))
            )

    def test_subgroup_order_divides(self):
        for orders in ([2, 4], [3, 3], [12]):
            G = make_group(orders)
            for H in all_subgroups(G):
                assert G.order % H.order == 0


class TestRelativeOrder:
    def test_member_is_one(self):
        G = make_group([4])
        H = cyclic_subgroup(G, (2,))
        assert relative_order(G, H, (2,)) == 1

    def test_frozen_scan(self):
        G = make_group([4])
        H = cyclic_subgroup(G, (2,))
        assert relative_order(G, H, (1,)) == 2

    def test_trivial_subgroup_gives_order(self):
        G = make_group([2, 4])
        H = Subgroup.trivial(G)
        for x in G.elements():
            assert relative_order(G, H, x) == element_order(G, x)

    @pytest.mark.parametrize("orders", [[2, 4], [9], [2, 2, 2], [12]])
    def test_product_identity(self, orders):
        # o_H(x) * |<x> n H| = o(x) for every subgroup and element
        G = make_group(orders)
        for H in all_subgroups(G):
            for x in G.elements():
                inter = len(cyclic_subgroup(G, x).element_set & H.element_set)
                assert relative_order(G, H, x) * inter == element_order(G, x)

    @pytest.mark.parametrize("orders", [[2, 4], [8], [3, 3], [12]])
    def test_matches_coset_group_order(self, orders):
        G = make_group(orders)
        for H in all_subgroups(G):
            identity_coset = H.element_set
            for x in G.elements():
                y = x
                m = 1
                while y not in identity_coset:
                    y = group_op(G, y, x)
                    m += 1
                assert relative_order(G, H, x) == m


class TestOmega1:
    def test_cyclic_four(self):
        G = make_group([4])
        assert omega1(G, 2).elements == ((0,), (2,))

    def test_elementary_is_whole(self):
        G = make_group([2, 2])
        assert omega1(G, 2).order == G.order

    def test_coprime_is_trivial(self):
        G = make_group([9])
        assert omega1(G, 2).is_trivial

    @pytest.mark.parametrize("orders,p", [([2, 4], 2), ([3, 9, 9], 3), ([4, 4], 2), ([12], 3)])
    def test_matches_filter(self, orders, p):
        G = make_group(orders)
        expected = tuple(sorted(x for x in G.elements() if element_order(G, x) in (1, p)))
        assert omega1(G, p).elements == expected

    def test_rank_equals_p_component_count(self):
        G = make_group([2, 4, 8])
        assert omega1(G, 2).order == 2**3


class TestQuotientType:
    def test_by_trivial_and_whole(self):
        G = make_group([2, 4, 3])
        assert quotient_type(G, Subgroup.trivial(G)) == G
        assert quotient_type(G, Subgroup.whole(G)) == make_group([])

    def test_frozen_case(self):
        G = make_group([2, 4])
        H = Subgroup.from_generators(G, [(1, 2)])
        assert quotient_type(G, H) == make_group([4])

    @pytest.mark.parametrize("orders", [[2, 4], [8], [3, 3], [12], [2, 2, 4]])
    def test_matches_coset_table(self, orders):
        G = make_group(orders)
        for H in all_subgroups(G):
            Q = quotient_type(G, H)
            assert Q.order * H.order == G.order
            got = sorted(element_order(Q, x) for x in Q.elements())
            assert got == coset_table_orders(G, H)

    def test_quotient_exponent_drop(self):
        # quotients by subgroups of the socle only ever lower exponents by one
        for orders in ([4, 4], [8, 4], [9, 9]):
            G = make_group(orders)
            alphas = G.components[0].exponents
            p = G.components[0].p
            socle = omega1(G, p)
            for H in all_subgroups(G):
                if not H.element_set <= socle.element_set:
                    continue
                Q = quotient_type(G, H)
                betas = Q.components[0].exponents if Q.components else ()
                padded = (0,) * (len(alphas) - len(betas)) + betas
                assert all(b in (a, a - 1) for a, b in zip(alphas, padded))


class TestSubgroupType:
    @pytest.mark.parametrize("orders", [[2, 4], [8], [3, 9], [12], [2, 2, 2]])
    def test_matches_order_multiset(self, orders):
        G = make_group(orders)
        for H in all_subgroups(G):
            T = subgroup_type(H)
            assert T.order == H.order
            in_h = sorted(element_order(G, x) for x in H.elements)
            in_t = sorted(element_order(T, x) for x in T.elements())
            assert in_h == in_t


class TestPrimeParts:
    def test_p_component(self):
        G = make_group([4, 9])
        assert p_component(G, 2) == make_group([4])
        assert p_component(G, 3) == make_group([9])
        assert p_component(G, 5) == make_group([])

    def test_p_part_is_intersection_with_component(self):
        G = make_group([4, 3])
        span2 = G.component_span(2)
        for H in all_subgroups(G, bound=G.order):
            part = p_part(H, 2)
            direct = {x[span2] for x in H.elements if element_order(G, x) in (1, 2, 4)}
            assert set(part.elements) == direct
