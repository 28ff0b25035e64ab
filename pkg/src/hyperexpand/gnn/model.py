"""Model assembly: layer stack per schedule, readout head, loss, gradients.

The model is a list of layer parameter blocks matched one-to-one with a
layer-kind schedule, plus an affine classifier head. Readout is either
the root node's representation (Tree-NeighborsMatch is a node-level task)
or the hyperedge-masked mean over original nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graphs import Graph
from ..rewire import LayerKind, RewiredInstance
from ..rng import SplitMix64, derive_seed
from .layers import (
    Affine,
    ExpanderLayerParams,
    GinLayerParams,
    HyperedgeMode,
    expander_backward,
    expander_forward,
    gin_backward,
    gin_forward,
    init_affine,
    init_expander_params,
    init_gin_params,
)

PARAM_STREAM = 0x7061



@dataclass
class GinModel:
    schedule: tuple[LayerKind, ...]
    layers: list
    head: Affine
    in_dim: int
    hidden_dim: int
    num_classes: int
    readout: str = "root"  # "root" | "mean"


def build_model(
    in_dim: int,
    hidden_dim: int,
    num_classes: int,
    schedule: tuple[LayerKind, ...],
    mode: HyperedgeMode = HyperedgeMode.SUMMATION,
    seed: int = 0,
    readout: str = "root",
) -> GinModel:
    if readout not in ("root", "mean"):
        raise ValueError(f"unknown readout {readout!r}")
    if not schedule:
        raise ValueError("schedule must contain at least one layer")
    rng = SplitMix64(derive_seed(seed, PARAM_STREAM))
    layers = []
    for i, kind in enumerate(schedule):
        d_in = in_dim if i == 0 else hidden_dim
        if kind is LayerKind.ORIGINAL:
            layers.append(init_gin_params(rng, d_in, hidden_dim, hidden_dim))
        else:
            if d_in != hidden_dim:
                raise ValueError(
                    "an expander layer cannot change width; schedule must open with ORIGINAL"
                )
            layers.append(init_expander_params(rng, mode, hidden_dim, hidden_dim))
    head = init_affine(rng, hidden_dim, num_classes)
    return GinModel(
        schedule=tuple(schedule),
        layers=layers,
        head=head,
        in_dim=in_dim,
        hidden_dim=hidden_dim,
        num_classes=num_classes,
        readout=readout,
    )


def _gin_items(prefix: str, p: GinLayerParams):
    yield prefix + "epsilon", p.epsilon
    yield prefix + "w1", p.w1
    yield prefix + "b1", p.b1
    yield prefix + "w2", p.w2
    yield prefix + "b2", p.b2


def named_parameters(model: GinModel) -> list[tuple[str, np.ndarray]]:
    items: list[tuple[str, np.ndarray]] = []
    for i, layer in enumerate(model.layers):
        prefix = f"layers.{i}."
        if isinstance(layer, GinLayerParams):
            items.extend(_gin_items(prefix, layer))
        else:
            if layer.mode is HyperedgeMode.LEARNED:
                items.extend(_gin_items(prefix + "forward.", layer.forward_gin))
            else:
                items.append((prefix + "summation.w", layer.summation_linear.w))
                items.append((prefix + "summation.b", layer.summation_linear.b))
            items.extend(_gin_items(prefix + "backward.", layer.backward_gin))
    items.append(("head.w", model.head.w))
    items.append(("head.b", model.head.b))
    return items


def zero_gradients(model: GinModel) -> dict[str, np.ndarray]:
    return {name: np.zeros_like(arr) for name, arr in named_parameters(model)}


def forward_batch(
    model: GinModel,
    feats: np.ndarray,
    adj_orig: np.ndarray,
    biadj: np.ndarray | None = None,
    hyperedge_mask: np.ndarray | None = None,
):
    """feats (B, n, in_dim) -> (logits (B, C), caches for backward)."""
    h = feats
    layer_caches = []
    for kind, layer in zip(model.schedule, model.layers):
        if kind is LayerKind.ORIGINAL:
            h, cache = gin_forward(h, adj_orig, layer)
        else:
            if biadj is None:
                raise ValueError("schedule has EXPANDER layers but no expander was given")
            h, cache = expander_forward(h, biadj, layer)
        layer_caches.append(cache)
    if model.readout == "root":
        read = h[:, 0, :]
        readout_cache = None
    else:
        keep = (
            np.ones(h.shape[1], dtype=bool)
            if hyperedge_mask is None
            else ~np.asarray(hyperedge_mask, dtype=bool)
        )
        read = h[:, keep, :].mean(axis=1)
        readout_cache = keep
    logits = read @ model.head.w + model.head.b
    return logits, (layer_caches, read, readout_cache, h.shape)


def backward_batch(model: GinModel, dlogits: np.ndarray, caches) -> dict[str, np.ndarray]:
    layer_caches, read, readout_cache, h_shape = caches
    grads = zero_gradients(model)
    grads["head.w"] += read.T @ dlogits
    grads["head.b"] += dlogits.sum(axis=0)
    dread = dlogits @ model.head.w.T
    dh = np.zeros(h_shape)
    if model.readout == "root":
        dh[:, 0, :] = dread
    else:
        keep = readout_cache
        dh[:, keep, :] = dread[:, None, :] / keep.sum()
    for i in range(len(model.layers) - 1, -1, -1):
        layer = model.layers[i]
        prefix = f"layers.{i}."
        if model.schedule[i] is LayerKind.ORIGINAL:
            dh = gin_backward(dh, layer_caches[i], layer, grads, prefix)
        else:
            dh = expander_backward(dh, layer_caches[i], layer, grads, prefix)
    return grads


def softmax_cross_entropy(logits: np.ndarray, targets: np.ndarray):
    """Mean cross-entropy; returns (loss, dlogits, probabilities)."""
    if not np.isfinite(logits).all():
        raise FloatingPointError("non-finite logits")
    shifted = logits - logits.max(axis=1, keepdims=True)
    expv = np.exp(shifted)
    probs = expv / expv.sum(axis=1, keepdims=True)
    batch = logits.shape[0]
    picked = probs[np.arange(batch), targets]
    loss = float(-np.log(np.maximum(picked, 1e-300)).mean())
    dlogits = probs.copy()
    dlogits[np.arange(batch), targets] -= 1.0
    dlogits /= batch
    return loss, dlogits, probs


def loss_and_gradients(
    model: GinModel,
    feats: np.ndarray,
    targets: np.ndarray,
    adj_orig: np.ndarray,
    biadj: np.ndarray | None = None,
    hyperedge_mask: np.ndarray | None = None,
):
    """Mean cross-entropy loss, accuracy, and exact parameter gradients."""
    logits, caches = forward_batch(model, feats, adj_orig, biadj, hyperedge_mask)
    loss, dlogits, _ = softmax_cross_entropy(logits, targets)
    accuracy = float((logits.argmax(axis=1) == targets).mean())
    grads = backward_batch(model, dlogits, caches)
    return loss, accuracy, grads


def forward(model: GinModel, instance, features: np.ndarray) -> np.ndarray:
    """Single-instance forward. instance is a Graph (plain schedule) or a
    RewiredInstance; features cover the original nodes, and hyperedge rows
    start at zero."""
    features = np.asarray(features, dtype=np.float64)
    if isinstance(instance, RewiredInstance):
        n = instance.original.n
        if features.shape != (n, model.in_dim):
            raise ValueError(f"expected features ({n}, {model.in_dim}), got {features.shape}")
        feats = np.zeros((1, instance.total_nodes, model.in_dim))
        feats[0, :n] = features
        adj = instance.original_view().adjacency_matrix()
        biadj = instance.expander.biadjacency().astype(np.float64)
        mask = np.asarray(instance.hyperedge_mask, dtype=bool)
        logits, _ = forward_batch(model, feats, adj, biadj, mask)
        return logits[0]
    if isinstance(instance, Graph):
        if any(kind is LayerKind.EXPANDER for kind in model.schedule):
            raise ValueError("schedule has EXPANDER layers; a plain Graph cannot provide them")
        if features.shape != (instance.n, model.in_dim):
            raise ValueError(
                f"expected features ({instance.n}, {model.in_dim}), got {features.shape}"
            )
        logits, _ = forward_batch(model, features[None], instance.adjacency_matrix())
        return logits[0]
    raise TypeError(f"instance must be Graph or RewiredInstance, got {type(instance)!r}")


def parameters_to_dict(model: GinModel) -> dict:
    tensors = {}
    for name, arr in named_parameters(model):
        tensors[name] = {"shape": list(arr.shape), "data": [float(x) for x in arr.ravel()]}
    return {"format": "hyperexpand-params-v1", "tensors": tensors}


def load_parameters(model: GinModel, dump: dict) -> None:
    if dump.get("format") != "hyperexpand-params-v1":
        raise ValueError("not a parameter dump")
    tensors = dump["tensors"]
    for name, arr in named_parameters(model):
        entry = tensors[name]
        vals = np.array(entry["data"], dtype=np.float64).reshape(entry["shape"])
        arr[...] = vals
