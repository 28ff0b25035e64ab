"""
Training a GIN on Tree-NeighborsMatch, plain and rewired
========================================================

Tree-NeighborsMatch asks the root of a complete binary tree to name the
leaf whose blue-neighbor count matches its own. Information has to travel
from the leaves to the root, so deeper trees squeeze more and more of the
input through the same few root channels. A small numpy GIN trains on the
task here, first on the bare tree, then with the expander overlay.
"""

import time

from hyperexpand.gnn.training import TrainConfig, train
from hyperexpand.gnn.treematch import generate_tree_match, leaf_ids, tree_graph
from hyperexpand.rng import SplitMix64

# ---------------------------------------------------------------------------
# The task at depth 2: seven nodes, four leaves, four classes.

g = tree_graph(2)
inst = generate_tree_match(2, SplitMix64(0))
leaves = list(leaf_ids(2))
print(f"depth-2 tree: {g.n} nodes, edges {g.edges()}")
print(f"leaf neighbor counts {[inst.counts[v] for v in leaves]}")
print(f"leaf labels         {[inst.labels[v] for v in leaves]}")
print(f"root count {inst.counts[inst.root_id]} -> answer is class {inst.target_label}")

# ---------------------------------------------------------------------------
# Depth 1 is easy: a plain GIN gets to 100% train accuracy quickly.

cfg = TrainConfig(depth=1, epochs=150, dataset_size=500, seed=0)
start = time.perf_counter()
res = train(cfg)
first = next((e for e, a in enumerate(res.accuracies, start=1) if a == 1.0), None)
print()
print(
    f"depth 1 plain: hits 100% train accuracy at epoch {first} "
    f"({time.perf_counter() - start:.1f}s)"
)

# ---------------------------------------------------------------------------
# Depth 2, plain versus rewired, same seed and budget. The rewired model
# interleaves expander layers (summation hyperedge mode) with the tree
# layers. At full budget (epochs=1500, dataset_size=500, seeds 1..3) the
# rewired run reaches 100% on every seed while plain GIN stalls short of
# it; the reduced budget below keeps this demo quick.

print()
for rewire in (False, True):
    cfg = TrainConfig(
        depth=2,
        num_layers=3,
        hidden_dim=32,
        learning_rate=0.01,
        epochs=600,
        dataset_size=200,
        seed=1,
        rewire=rewire,
        expander_k=3,
    )
    start = time.perf_counter()
    res = train(cfg)
    label = "rewired" if rewire else "plain  "
    print(
        f"depth 2 {label}: loss {res.final_loss:.4f}, "
        f"accuracy {res.final_accuracy:.3f} ({time.perf_counter() - start:.1f}s)"
    )
