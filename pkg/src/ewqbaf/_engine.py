"""Compiled graph evaluation shared by semantics, attribution and contest.

A CompiledQbaf turns the immutable graph into index-based adjacency lists
so that repeated evaluations (gradient probes, solver iterations) avoid
re-resolving argument ids. Weights are passed as a plain list aligned with
the canonical edge order, which lets callers perturb single entries
cheaply without rebuilding anything.
"""

from __future__ import annotations

import math
from typing import Optional

from .model import CyclicGraphError, Edge, Qbaf, UnknownArgumentError, topological_order
from .semantics import (
    SemanticsKind,
    SemanticsSpec,
    influence,
    influence_slope,
    uses_product_aggregation,
)


class CompiledQbaf:
    __slots__ = (
        "qbaf",
        "ids",
        "index",
        "base",
        "edges",
        "edge_pos",
        "weights0",
        "in_att",
        "in_sup",
        "children",
        "topo",
        "n",
        "_logit_cache",
    )

    def __init__(self, q: Qbaf):
        self.qbaf = q
        self.ids = [a.id for a in q.arguments]
        self.index = {aid: i for i, aid in enumerate(self.ids)}
        self.base = [a.base_score for a in q.arguments]
        self.edges: list[Edge] = list(q.edges)
        self.edge_pos = {e.key: i for i, e in enumerate(self.edges)}
        self.weights0 = [e.weight for e in self.edges]
        self.n = len(self.ids)
        self.in_att: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        self.in_sup: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        self.children: list[list[int]] = [[] for _ in range(self.n)]
        for ei, e in enumerate(self.edges):
            src = self.index[e.source]
            tgt = self.index[e.target]
            (self.in_att if e.polarity.value == "attack" else self.in_sup)[tgt].append((src, ei))
            self.children[src].append(tgt)
        order = topological_order(q)
        self.topo: Optional[list[int]] = None if order is None else [self.index[a] for a in order]
        self._logit_cache: dict[float, list[float]] = {}

    # -- lookups ----------------------------------------------------------

    def arg_index(self, arg_id: str) -> int:
        try:
            return self.index[arg_id]
        except KeyError:
            raise UnknownArgumentError(f"unknown argument {arg_id!r}") from None

    def require_acyclic(self, what: str) -> list[int]:
        if self.topo is None:
            raise CyclicGraphError(what)
        return self.topo

    def base_logits(self, clamp: float) -> list[float]:
        cached = self._logit_cache.get(clamp)
        if cached is None:
            lo, hi = clamp, 1.0 - clamp
            cached = [math.log(b / (1.0 - b)) for b in (min(max(x, lo), hi) for x in self.base)]
            self._logit_cache[clamp] = cached
        return cached

    def descendants(self, start: list[int]) -> set[int]:
        """Indices reachable from any start index (start excluded unless reached)."""
        seen: set[int] = set()
        stack = list(start)
        while stack:
            i = stack.pop()
            for c in self.children[i]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return seen

    # -- forward evaluation (acyclic) --------------------------------------

    def forward(self, spec: SemanticsSpec, weights: list[float]) -> list[float]:
        kind = spec.kind
        if kind is SemanticsKind.MLP:
            return self._forward_mlp(spec, weights)
        if kind is SemanticsKind.DFQUAD:
            return self._forward_dfquad(weights)
        if kind is SemanticsKind.QE:
            return self._forward_qe(weights)
        return self._forward_reb(weights)

    def _forward_mlp(self, spec: SemanticsSpec, w: list[float]) -> list[float]:
        vals = [0.0] * self.n
        blog = self.base_logits(spec.logit_clamp)
        in_att, in_sup, exp = self.in_att, self.in_sup, math.exp
        for i in self.topo:
            agg = 0.0
            for p, e in in_sup[i]:
                agg += vals[p] * w[e]
            for p, e in in_att[i]:
                agg -= vals[p] * w[e]
            z = blog[i] + agg
            if z >= 0.0:
                vals[i] = 1.0 / (1.0 + exp(-z))
            else:
                t = exp(z)
                vals[i] = t / (1.0 + t)
        return vals

    def _forward_dfquad(self, w: list[float]) -> list[float]:
        vals = [0.0] * self.n
        base, in_att, in_sup = self.base, self.in_att, self.in_sup
        for i in self.topo:
            pa = 1.0
            for p, e in in_att[i]:
                pa *= 1.0 - vals[p] * w[e]
            ps = 1.0
            for p, e in in_sup[i]:
                ps *= 1.0 - vals[p] * w[e]
            agg = pa - ps
            b = base[i]
            if agg >= 0.0:
                vals[i] = b + (1.0 - b) * agg
            else:
                vals[i] = b + b * agg
        return vals

    def _forward_qe(self, w: list[float]) -> list[float]:
        vals = [0.0] * self.n
        base, in_att, in_sup = self.base, self.in_att, self.in_sup
        for i in self.topo:
            agg = 0.0
            for p, e in in_sup[i]:
                agg += vals[p] * w[e]
            for p, e in in_att[i]:
                agg -= vals[p] * w[e]
            b = base[i]
            if agg > 0.0:
                x2 = agg * agg
                vals[i] = b + (1.0 - b) * x2 / (1.0 + x2)
            elif agg < 0.0:
                x2 = agg * agg
                vals[i] = b - b * x2 / (1.0 + x2)
            else:
                vals[i] = b
        return vals

    def _forward_reb(self, w: list[float]) -> list[float]:
        vals = [0.0] * self.n
        base, in_att, in_sup, exp = self.base, self.in_att, self.in_sup, math.exp
        for i in self.topo:
            b = base[i]
            if b == 0.0:
                vals[i] = 0.0
                continue
            agg = 0.0
            for p, e in in_sup[i]:
                agg += vals[p] * w[e]
            for p, e in in_att[i]:
                agg -= vals[p] * w[e]
            if agg > 700.0:
                vals[i] = 1.0
            else:
                vals[i] = 1.0 - (1.0 - b * b) / (1.0 + b * exp(agg))
        return vals

    def forward_with_aggregates(
        self, spec: SemanticsSpec, weights: list[float]
    ) -> tuple[list[float], list[float]]:
        """Generic forward pass that also records each node's aggregate."""
        vals = [0.0] * self.n
        aggs = [0.0] * self.n
        kind, clamp = spec.kind, spec.logit_clamp
        product = uses_product_aggregation(kind)
        for i in self.topo:
            if product:
                pa = 1.0
                for p, e in self.in_att[i]:
                    pa *= 1.0 - vals[p] * weights[e]
                ps = 1.0
                for p, e in self.in_sup[i]:
                    ps *= 1.0 - vals[p] * weights[e]
                agg = pa - ps
            else:
                agg = 0.0
                for p, e in self.in_sup[i]:
                    agg += vals[p] * weights[e]
                for p, e in self.in_att[i]:
                    agg -= vals[p] * weights[e]
            aggs[i] = agg
            vals[i] = influence(kind, self.base[i], agg, clamp)
        return vals, aggs

    # -- reverse accumulation (exact gradients) -----------------------------

    def gradients(self, spec: SemanticsSpec, weights: list[float], topic_idx: int) -> list[float]:
        """d strength(topic) / d weight(edge) for every edge, one forward
        plus one reverse sweep. Edges that cannot reach the topic get an
        exact 0.0."""
        vals, aggs = self.forward_with_aggregates(spec, weights)
        adj = [0.0] * self.n
        adj[topic_idx] = 1.0
        grads = [0.0] * len(self.edges)
        kind = spec.kind
        product = uses_product_aggregation(kind)
        for i in reversed(self.topo):
            a = adj[i]
            if a == 0.0:
                continue
            c0 = a * influence_slope(kind, self.base[i], aggs[i], vals[i])
            if c0 == 0.0:
                continue
            if product:
                self._push_product(c0, self.in_att[i], vals, weights, grads, adj, negate=True)
                self._push_product(c0, self.in_sup[i], vals, weights, grads, adj, negate=False)
            else:
                for p, e in self.in_att[i]:
                    grads[e] -= c0 * vals[p]
                    adj[p] -= c0 * weights[e]
                for p, e in self.in_sup[i]:
                    grads[e] += c0 * vals[p]
                    adj[p] += c0 * weights[e]
        return grads

    @staticmethod
    def _push_product(c0, group, vals, weights, grads, adj, negate):
        # aggregate = prod_att(1 - t) - prod_sup(1 - t), so d agg / d t_j is
        # -prod_{k != j}(1 - t_k) for attacks and +prod for supports.
        k = len(group)
        if k == 0:
            return
        terms = [1.0 - vals[p] * weights[e] for p, e in group]
        left = [1.0] * k
        for j in range(1, k):
            left[j] = left[j - 1] * terms[j - 1]
        right = 1.0
        sign = -1.0 if negate else 1.0
        for j in range(k - 1, -1, -1):
            p, e = group[j]
            c = sign * c0 * left[j] * right
            grads[e] += c * vals[p]
            adj[p] += c * weights[e]
            right *= terms[j]
        return

    # -- synchronous iteration (cyclic graphs) ------------------------------

    def iterate(self, spec: SemanticsSpec, weights: list[float]) -> list[Optional[float]]:
        kind, clamp = spec.kind, spec.logit_clamp
        product = uses_product_aggregation(kind)
        cur = list(self.base)
        deltas = [0.0] * self.n
        for _ in range(spec.max_update_rounds):
            nxt = [0.0] * self.n
            for i in range(self.n):
                if product:
                    pa = 1.0
                    for p, e in self.in_att[i]:
                        pa *= 1.0 - cur[p] * weights[e]
                    ps = 1.0
                    for p, e in self.in_sup[i]:
                        ps *= 1.0 - cur[p] * weights[e]
                    agg = pa - ps
                else:
                    agg = 0.0
                    for p, e in self.in_sup[i]:
                        agg += cur[p] * weights[e]
                    for p, e in self.in_att[i]:
                        agg -= cur[p] * weights[e]
                nxt[i] = influence(kind, self.base[i], agg, clamp)
                deltas[i] = abs(nxt[i] - cur[i])
            cur = nxt
            if max(deltas, default=0.0) < spec.convergence_epsilon:
                return list(cur)
        # Budget exhausted: undefine every non-settled argument and
        # everything downstream of one.
        unsettled = [i for i in range(self.n) if deltas[i] >= spec.convergence_epsilon]
        tainted = self.descendants(unsettled)
        tainted.update(unsettled)
        return [None if i in tainted else cur[i] for i in range(self.n)]


def compile_qbaf(q: Qbaf) -> CompiledQbaf:
    return CompiledQbaf(q)
