from __future__ import annotations

import numpy as np
import pytest

from hyperexpand.construct import GeneratorConfig
from hyperexpand.graphs import (
    bfs_diameter,
    build_graph,
    cycle_graph,
    is_connected,
    path_graph,
)
from hyperexpand.rewire import (
    REWIRED_FORMAT,
    LayerKind,
    RewiredInstance,
    augment,
    layer_schedule,
    rewired_from_dict,
)


class TestLayerSchedule:
    def test_six_layers(self):
        o, x = LayerKind.ORIGINAL, LayerKind.EXPANDER
        assert layer_schedule(6) == (o, x, o, x, o, x)

    def test_one_layer(self):
        assert layer_schedule(1) == (LayerKind.ORIGINAL,)

    def test_two_layers(self):
        assert layer_schedule(2) == (LayerKind.ORIGINAL, LayerKind.EXPANDER)

    @pytest.mark.parametrize("num_layers", range(1, 65))
    def test_alternation_exact(self, num_layers):
        sched = layer_schedule(num_layers)
        assert len(sched) == num_layers
        for i, kind in enumerate(sched):
            want = LayerKind.ORIGINAL if (i + 1) % 2 == 1 else LayerKind.EXPANDER
            assert kind is want

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            layer_schedule(0)


class TestAugment:
    def test_single_edge_k2(self):
        g = build_graph(2, [(0, 1)])
        inst = augment(g, GeneratorConfig(n=2, k=2, seed=0))
        assert inst.total_nodes == 4
        # the only 2-regular 2+2 bipartite graph is a 4-cycle
        view = inst.expander_view()
        assert sorted(view.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_c4_k3_left_degrees(self):
        inst = augment(cycle_graph(4), GeneratorConfig(n=4, k=3, seed=5))
        assert inst.expander.k == 3
        degrees = inst.expander_view().degrees()
        assert all(d == 3 for d in degrees)
        assert inst.expander.matchings == ((2, 1, 3, 0), (0, 2, 1, 3), (1, 3, 0, 2))

    def test_n1(self):
        inst = augment(build_graph(1, []), GeneratorConfig(n=1, k=1))
        assert inst.total_nodes == 2
        assert inst.expander_view().edges() == [(0, 1)]

    def test_cfg_n_overridden(self):
        g = path_graph(5)
        inst = augment(g, GeneratorConfig(n=99, k=2, seed=1))
        assert inst.expander.n_left == 5

    def test_k_clamped_to_n(self):
        g = build_graph(2, [(0, 1)])
        inst = augment(g, GeneratorConfig(n=2, k=2, seed=0))
        big = augment(g, GeneratorConfig(n=16, k=3, seed=0))
        assert big.expander.k == 2
        assert big.expander.matchings == inst.expander.matchings

    def test_ramanujan_flag(self):
        inst = augment(cycle_graph(8), GeneratorConfig(n=8, k=3, seed=0), ramanujan=True)
        from hyperexpand.spectral import analyze

        rep = analyze(inst.expander_view())
        assert rep.ramanujan is True

    def test_num_layers_parameter(self):
        inst = augment(cycle_graph(4), GeneratorConfig(n=4, k=2), num_layers=3)
        assert len(inst.schedule) == 3

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            augment(build_graph(0, []), GeneratorConfig(n=1, k=1))

    def test_deterministic(self):
        g = cycle_graph(6)
        cfg = GeneratorConfig(n=6, k=3, seed=77)
        assert augment(g, cfg).expander.matchings == augment(g, cfg).expander.matchings


class TestRewiredInstance:
    @pytest.fixture
    def inst(self):
        return augment(cycle_graph(4), GeneratorConfig(n=4, k=3, seed=5))

    def test_mask_selects_hyperedge_ids(self, inst):
        assert inst.hyperedge_mask == (False,) * 4 + (True,) * 4
        assert sum(inst.hyperedge_mask) == 4

    def test_mask_keeps_first_n_feature_rows(self, inst):
        feats = np.arange(8.0).reshape(8, 1)
        kept = feats[~np.array(inst.hyperedge_mask)]
        assert kept[:, 0].tolist() == [0.0, 1.0, 2.0, 3.0]

    def test_hyperedge_nodes_isolated_in_original_view(self, inst):
        view = inst.original_view()
        assert view.n == 8
        degrees = view.degrees()
        assert all(degrees[i] == 0 for i in range(4, 8))
        assert sorted(view.edges()) == sorted(cycle_graph(4).edges())

    def test_expander_view_covers_both_sides(self, inst):
        view = inst.expander_view()
        assert view.n == 8
        assert all(u < 4 <= v for u, v in view.edges())

    def test_validation(self, inst):
        with pytest.raises(ValueError, match="2n"):
            RewiredInstance(
                original=inst.original,
                expander=inst.expander,
                total_nodes=9,
                hyperedge_mask=inst.hyperedge_mask,
                schedule=inst.schedule,
            )
        with pytest.raises(ValueError, match="mask"):
            RewiredInstance(
                original=inst.original,
                expander=inst.expander,
                total_nodes=8,
                hyperedge_mask=tuple(not b for b in inst.hyperedge_mask),
                schedule=inst.schedule,
            )
        with pytest.raises(ValueError, match="left side"):
            RewiredInstance(
                original=cycle_graph(5),
                expander=inst.expander,
                total_nodes=10,
                hyperedge_mask=(False,) * 5 + (True,) * 5,
                schedule=inst.schedule,
            )

    def test_envelope_round_trip(self, inst):
        d = inst.to_dict()
        assert d["format"] == REWIRED_FORMAT
        assert d["schedule"] == ["original", "expander"] * 3
        back = rewired_from_dict(d)
        assert back == inst

    def test_envelope_rejects_wrong_format(self, inst):
        d = inst.to_dict()
        d["format"] = "something-else"
        with pytest.raises(ValueError, match="format"):
            rewired_from_dict(d)


class TestReachability:
    """One expander round is two propagation phases, so ceil(diam/2) rounds
    must spread a one-hot signal from any left node to every left node."""

    @pytest.mark.parametrize("n", [4, 9, 16])
    def test_receptive_field_covers_left_side(self, n):
        for seed in (0, 1):
            cfg = GeneratorConfig(n=n, k=min(3, n), seed=seed)
            inst = augment(build_graph(n, []), cfg)
            bip = inst.expander_view()
            assert is_connected(bip)
            diam = bfs_diameter(bip)
            rounds = (diam + 1) // 2
            # biadjacency rows are hyperedge nodes, columns left nodes
            biadj = np.array(inst.expander.biadjacency(), dtype=bool)
            left = np.eye(n, dtype=bool)
            right = np.zeros((n, n), dtype=bool)
            for _ in range(rounds):
                right = right | (left @ biadj.T)
                left = left | (right @ biadj)
            assert left.all()

    def test_one_round_insufficient_on_sparse_overlay(self):
        # k=1 overlay is a single matching: one round reaches only the
        # matched partner, never the whole side
        inst = augment(build_graph(4, []), GeneratorConfig(n=4, k=1, seed=0))
        biadj = np.array(inst.expander.biadjacency(), dtype=bool)
        left = np.eye(4, dtype=bool)
        right = left @ biadj.T
        left = left | (right @ biadj)
        assert not left.all()
