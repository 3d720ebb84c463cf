import random

import pytest
from sklearn.base import clone

from conftest import oracle_forces, oracle_minimum, oracle_power
from kforcing import (
    Contraction,
    Graph,
    PartitionBound,
    XHat,
    build_xhat,
    complete,
    contract,
    cycle,
    gadget_lq,
    gadget_tkc,
    gadget_uq,
    induced_subgraph,
    is_k_forcing_set,
    is_k_power_dominating_set,
    min_k_forcing,
    min_k_power_dominating,
    path,
    pd_contraction_bounds,
    pd_low_degree_bounds,
    pd_partition_bound,
    prefix_block,
    prefix_partition,
    random_connected,
    sierpinski,
    zf_contraction_bounds,
    zf_partition_bound,
)
from kforcing.exceptions import PreconditionError
from kforcing.transforms import check_partition, pd_contraction_monotone_k1, xhat_forcing_witness


class TestXHat:
    def test_full_closed_neighbourhood_needs_no_pendants(self):
        g = random_connected(7, 0.4, 2)
        xh = build_xhat(g, set(g.vertices()))
        assert xh.graph == g
        assert all(p == () for p in xh.pendant_map.values())

    def test_uq(self):
        g, x = gadget_uq(2, 2)
        xh = build_xhat(g, x)
        # K_3 on X, each vertex keeping its edge to y as a pendant.
        assert xh.graph.order == 6 and xh.graph.size == 6
        assert [len(xh.pendant_map[c]) for c in xh.core_ids] == [1, 1, 1]
        assert min_k_power_dominating(xh.graph, 2).value == 1

    def test_degrees_restored(self):
        rng = random.Random(4)
        for seed in range(30):
            g = random_connected(8, 0.35, seed)
            x = set(rng.sample(range(8), rng.randint(1, 7)))
            xh = build_xhat(g, x)
            for old in x:
                assert xh.graph.degree(xh.id_map[old]) == g.degree(old)
            assert xh.graph.order == len(x) + sum(len(g.adjacency[v] - x) for v in x)
            assert all(xh.graph.degree(v) == 1 for leaves in xh.pendant_map.values() for v in leaves)

    def test_sierpinski_block_pendants_at_corners(self):
        p, n = 3, 5
        g = sierpinski(p, n)
        block = prefix_block(p, n, "01")
        xh = build_xhat(g, block)
        carrying = {v for v in block if xh.pendant_map[xh.id_map[v]]}
        base = min(block)
        corners = {base + a * (p**2 + p + 1) for a in range(p)}
        assert carrying == corners
        assert sorted(g.label(v)[2:] for v in carrying) == ["000", "111", "222"]

    def test_lift(self):
        g = path(5)
        xh = build_xhat(g, {1, 2, 3})
        assert xh.lift({0, 2}) == {1, 3}

    def test_transformers(self):
        g, x = gadget_uq(2, 2)
        t = XHat(vertices=sorted(x))
        assert t.fit_transform(g) == build_xhat(g, x).graph
        c = Contraction(vertices=sorted(x))
        assert c.fit_transform(g) == contract(g, x).graph
        assert c.contracted_vertex_ == 5
        assert clone(c).get_params() == {"vertices": sorted(x)}


class TestPdContraction:
    def test_uq_hits_upper(self):
        g, x = gadget_uq(2, 2)
        iv = pd_contraction_bounds(g, 2, x)
        assert (iv.details["contracted"], iv.details["xhat"]) == (1, 1)
        assert (iv.lower, iv.upper) == (1, 2)
        assert min_k_power_dominating(g, 2).value == iv.upper
        assert is_k_power_dominating_set(g, 2, iv.witness_upper)

    def test_lq_hits_lower(self):
        for k, q in ((2, 2), (1, 2)):
            g, x = gadget_lq(k, q)
            iv = pd_contraction_bounds(g, k, x)
            assert iv.details["contracted"] == 2
            assert iv.lower == 1 == min_k_power_dominating(g, k).value

    @pytest.mark.parametrize("c", [1, 2, 3, 4])
    def test_tkc_gap(self, c):
        g, x = gadget_tkc(1, c)
        iv = pd_contraction_bounds(g, 1, x)
        assert iv.details == {"contracted": 1, "xhat": c}
        assert min_k_power_dominating(g, 1).value - iv.details["contracted"] == c - 1
        assert iv.contains(c)

    def test_random_containment(self):
        rng = random.Random(8)
        for seed in range(40):
            g = random_connected(rng.randint(3, 9), 0.35, seed)
            for k in (1, 2):
                x = set(rng.sample(range(g.order), rng.randint(1, g.order)))
                iv = pd_contraction_bounds(g, k, x)
                value, _ = oracle_minimum(g, lambda h, s: oracle_power(h, k, s))
                assert iv.contains(value)
                assert oracle_power(g, k, iv.witness_upper)
                assert len(iv.witness_upper) <= iv.upper

    def test_disconnected_refused(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(PreconditionError):
            pd_contraction_bounds(g, 1, {0})


class TestLowDegree:
    def test_path_interior(self):
        for n in range(3, 10):
            iv = pd_low_degree_bounds(path(n), 1, set(range(1, n - 1)))
            assert iv.contains(1)
            assert iv.details["components"] == 1
            assert iv.upper - iv.details["contracted"] == 1

    def test_singleton(self):
        g = random_connected(8, 0.3, 5)
        v = min(g.vertices(), key=g.degree)
        k = max(1, g.degree(v) - 1)
        iv = pd_low_degree_bounds(g, k, {v})
        assert iv.details["components"] == 1
        assert iv.contains(min_k_power_dominating(g, k).value)

    def test_random(self):
        rng = random.Random(1)
        hits = 0
        for seed in range(60):
            g = random_connected(rng.randint(4, 9), 0.3, seed)
            for k in (1, 2):
                low = [v for v in g.vertices() if g.degree(v) <= k + 1]
                if not low:
                    continue
                x = set(rng.sample(low, rng.randint(1, len(low))))
                iv = pd_low_degree_bounds(g, k, x)
                assert iv.contains(min_k_power_dominating(g, k).value)
                assert is_k_power_dominating_set(g, k, iv.witness_upper)
                hits += 1
        assert hits > 30

    def test_precondition(self):
        with pytest.raises(PreconditionError) as err:
            pd_low_degree_bounds(sierpinski(3, 2), 1, {1, 2})
        assert err.value.vertex == 1


class TestMonotoneK1:
    def test_path(self):
        for n in range(3, 9):
            assert pd_contraction_monotone_k1(path(n), set(range(1, n - 1))) == (1, 1, True)

    def test_cycle_with_pendant(self):
        g = Graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)])
        value_g, value_gx, holds = pd_contraction_monotone_k1(g, {2, 3, 4})
        assert holds and value_gx <= value_g

    def test_whole_cycle(self):
        assert pd_contraction_monotone_k1(cycle(6), set(range(6)))[2]

    def test_needs_connected_piece(self):
        with pytest.raises(PreconditionError):
            pd_contraction_monotone_k1(path(6), {1, 3})


class TestZfContraction:
    def test_branch_selection(self):
        g = path(6)
        small = zf_contraction_bounds(g, 1, {0, 1})
        assert small.interval.details["boundary"] == 1
        assert small.interval.lower_ref == "Z(G/X) - 1"
        g = sierpinski(3, 2)
        big = zf_contraction_bounds(g, 1, {0, 1, 2})
        assert big.interval.details["boundary"] == 2
        assert big.interval.lower_ref.startswith("Z(G/X) - |N[X]")

    def test_single_high_degree_vertex_fails_hypothesis(self):
        g = random_connected(8, 0.4, 6)
        for k in (1, 2):
            for v in g.vertices():
                if g.degree(v) >= k + 1:
                    res = zf_contraction_bounds(g, k, {v})
                    assert not res.hypothesis.met and res.interval is None

    def test_random_containment(self):
        rng = random.Random(12)
        met = 0
        for seed in range(120):
            g = random_connected(rng.randint(4, 9), rng.choice([0.3, 0.5]), seed)
            for k in (1, 2):
                x = set(rng.sample(range(g.order), rng.randint(1, g.order - 1)))
                res = zf_contraction_bounds(g, k, x)
                if res.hypothesis.met:
                    met += 1
                    assert res.interval.contains(min_k_forcing(g, k).value)
        assert met > 40

    def test_edge_window(self):
        for seed in range(8):
            g = random_connected(7, 0.4, seed)
            z = min_k_forcing(g, 1).value
            for u, v in g.edges():
                ze = min_k_forcing(contract(g, {u, v}).graph, 1).value
                assert z - 1 <= ze <= z + 1


class TestPartition:
    def test_s34_tight(self):
        g = sierpinski(3, 4)
        res = pd_partition_bound(g, 1, prefix_partition(3, 4, 1))
        assert res.bound == 9 and len(res.witness) == 9
        assert is_k_power_dominating_set(g, 1, res.witness)

    def test_trivial_partition(self):
        for seed in range(10):
            g = random_connected(7, 0.35, seed)
            for k in (1, 2):
                assert pd_partition_bound(g, k, [range(7)]).bound == min_k_power_dominating(g, k).value
                assert zf_partition_bound(g, k, [range(7)]).bound == min_k_forcing(g, k).value

    def test_singletons_on_clique(self):
        res = pd_partition_bound(complete(5), 1, [[v] for v in range(5)])
        assert res.bound == 5
        assert min_k_power_dominating(complete(5), 1).value == 1

    def test_zf_on_s33(self):
        g = sierpinski(3, 3)
        res = zf_partition_bound(g, 1, prefix_partition(3, 3, 1))
        assert res.hypothesis.met
        assert oracle_forces(g, 1, res.witness)
        assert is_k_forcing_set(g, 1, res.witness)
        assert res.bound >= min_k_forcing(g, 1).value

    def test_zf_failing_part_named(self):
        g = sierpinski(3, 2)
        parts = [[4], [v for v in range(9) if v != 4]]
        res = zf_partition_bound(g, 1, parts)
        assert not res.hypothesis.met and res.bound is None
        assert 0 in res.hypothesis.failing_parts

    def test_random_upper_bound(self):
        rng = random.Random(5)
        for seed in range(25):
            g = random_connected(8, 0.35, seed)
            verts = list(range(8))
            rng.shuffle(verts)
            cut = sorted(rng.sample(range(1, 8), 2))
            parts = [verts[:cut[0]], verts[cut[0]:cut[1]], verts[cut[1]:]]
            for k in (1, 2):
                res = pd_partition_bound(g, k, parts)
                assert res.bound >= min_k_power_dominating(g, k).value
                zf = zf_partition_bound(g, k, parts)
                if zf.hypothesis.met:
                    assert zf.bound >= min_k_forcing(g, k).value

    def test_parallel_matches_serial(self):
        g = sierpinski(3, 4)
        parts = prefix_partition(3, 4, 1)
        one = pd_partition_bound(g, 1, parts, workers=1)
        three = pd_partition_bound(g, 1, parts, workers=3)
        assert one.to_dict() == three.to_dict()

    def test_timings_only_on_request(self):
        res = pd_partition_bound(sierpinski(3, 3), 1, prefix_partition(3, 3, 1))
        assert "seconds" not in res.to_dict()["parts"][0]
        assert "seconds" in res.to_dict(timings=True)["parts"][0]

    @pytest.mark.parametrize(
        "parts",
        [[], [[0, 1], [1, 2, 3, 4, 5, 6, 7, 8]], [[0, 1, 2]], [[0], [], list(range(1, 9))]],
    )
    def test_bad_partitions(self, parts):
        with pytest.raises(ValueError):
            check_partition(sierpinski(3, 2), parts)

    def test_estimator(self):
        est = PartitionBound(k=1, parts=prefix_partition(3, 3, 1), param="pdk")
        # Each block is a copy of S_3^2 with gamma_P1 = 2.
        assert est.fit(sierpinski(3, 3)).bound_ == 6
        with pytest.raises(ValueError):
            PartitionBound(param="nope").fit(sierpinski(3, 3))


class TestXHatForcingWitness:
    def test_inside_core_when_available(self):
        g = path(7)
        xh = build_xhat(g, {0, 1, 2})
        value, wit = xhat_forcing_witness(xh, 1)
        assert value == 1 and wit is not None and wit <= xh.core_set

    def test_sub_block_of_sierpinski(self):
        g = sierpinski(3, 3)
        block = prefix_block(3, 3, "1")
        sub, _ = induced_subgraph(g, block)
        xh = build_xhat(g, block)
        value, wit = xhat_forcing_witness(xh, 1)
        assert value >= min_k_forcing(sub, 1).value - 1
