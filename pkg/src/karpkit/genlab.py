"""Seeded random instance generators for property tests and growth audits.

Randomness is a splittable counter-based scheme: every generated item
(clause i, vertex pair (i,j), set i, ...) draws from its own Philox stream
keyed on (seed, item label).  A GeneratorSpec therefore always reproduces
the identical instance, and growing a scale parameter extends the instance
without re-rolling the items already present, so element-mode size never
shrinks as scale grows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .instances import (
    CnfFormula,
    DiGraph,
    IntegerList,
    Problem,
    SetFamily,
    SteinerInstance,
    TripleFamily,
    UGraph,
    validate,
)

_MASK = (1 << 64) - 1


def _stream(seed, *label):
    """Philox generator for one item: 128-bit key from seed and label."""
    h = 0
    for part in label:
        if isinstance(part, str):
            for ch in part:
                h = (h * 1000003 + ord(ch)) & _MASK
        else:
            h = (h * 1000003 + (part & _MASK)) & _MASK
    return np.random.Generator(np.random.Philox(key=[seed & _MASK, h]))


def _int(rng, low, high):
    # inclusive bounds
    return int(rng.integers(low, high + 1))


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    seed: int
    params: dict = field(default_factory=dict)

    def with_params(self, **overrides):
        merged = dict(self.params)
        merged.update(overrides)
        return GeneratorSpec(self.kind, self.seed, merged)


def _connected_graph(seed, n, density):
    """Random connected graph: vertex v >= 2 attaches to an earlier anchor,
    then each pair is added independently with the given density."""
    edges = set()
    for v in range(2, n + 1):
        anchor = _int(_stream(seed, "tree", v), 1, v - 1)
        edges.add((anchor, v))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in edges and _stream(seed, "pair", i, j).random() < density:
                edges.add((i, j))
    return tuple(sorted(edges))


def _digraph_with_cycles(seed, n, density):
    """Random digraph containing the rotation cycle 1->2->...->n->1 (every
    vertex keeps in/out degree >= 1) plus density-selected extra arcs."""
    arcs = set((v, v % n + 1) for v in range(1, n + 1))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and (i, j) not in arcs and _stream(seed, "arc", i, j).random() < density:
                arcs.add((i, j))
    return tuple(sorted(arcs))


def _clause(seed, idx, m, size):
    rng = _stream(seed, "clause", idx)
    chosen = rng.choice(np.arange(1, m + 1), size=size, replace=False)
    return tuple(int(v) if rng.random() < 0.5 else -int(v) for v in chosen)


def _random_family(seed, universe, num_sets, max_set, cover=True):
    """Random set family; set i structurally contains element
    ((i-1) mod universe)+1 so families with at least `universe` sets cover
    the whole universe."""
    sets = []
    for i in range(1, num_sets + 1):
        rng = _stream(seed, "set", i)
        size = _int(rng, 1, max(1, min(max_set, universe)))
        members = set(
            int(x) for x in rng.choice(np.arange(1, universe + 1), size=size, replace=False)
        )
        if cover:
            members.add((i - 1) % universe + 1)
        sets.append(tuple(sorted(members)))
    return tuple(sets)


def generate(spec):
    """Build a valid instance from a generator spec; a pure function of the
    (kind, seed, params) triple."""
    kind = spec.kind
    seed = spec.seed
    p = dict(spec.params)
    top = _stream(seed, "top")

    if kind in ("sat", "threesat"):
        n = p.get("clauses", 4)
        m = p.get("literals", max(3, n))
        max_size = 3 if kind == "threesat" else p.get("max_clause", 5)
        clauses = []
        for i in range(1, n + 1):
            if kind == "threesat":
                size = min(3, m)
            else:
                size = min(_int(_stream(seed, "csize", i), 1, max_size), m)
            clauses.append(_clause(seed, i, m, size))
        return validate(Problem(kind, CnfFormula(m, tuple(clauses))))

    if kind in ("clique", "node_cover", "chromatic_number", "clique_cover"):
        n = p.get("vertices", 5)
        density = p.get("density", 0.5)
        g = UGraph(n, _connected_graph(seed, n, density))
        param = p.get("param", _int(top, 1, n))
        return validate(Problem(kind, g, param=param))

    if kind == "hcp":
        n = p.get("vertices", 5)
        density = p.get("density", 0.5)
        return validate(Problem(kind, UGraph(n, _connected_graph(seed, n, density))))

    if kind == "max_cut":
        n = p.get("vertices", 5)
        density = p.get("density", 0.5)
        max_weight = p.get("max_weight", 5)
        edges = _connected_graph(seed, n, density)
        weights = tuple(
            _int(_stream(seed, "weight", i, j), 1, max_weight) for i, j in edges
        )
        total = sum(weights)
        param = p.get("param", _int(top, 0, total))
        return validate(Problem(kind, UGraph(n, edges, weights), param=param))

    if kind in ("dhcp", "feedback_arc_set", "feedback_node_set"):
        n = p.get("vertices", 5)
        density = p.get("density", 0.3)
        g = DiGraph(n, _digraph_with_cycles(seed, n, density))
        if kind == "dhcp":
            return validate(Problem(kind, g))
        param = p.get("param", _int(top, 0, max(1, len(g.arcs) // 2)))
        return validate(Problem(kind, g, param=param))

    if kind in ("set_packing", "set_covering", "exact_cover", "hitting_set"):
        universe = p.get("universe", 5)
        num_sets = p.get("sets", 4)
        max_set = p.get("max_set", 3)
        fam = SetFamily(universe, _random_family(seed, universe, num_sets, max_set))
        if kind in ("set_packing", "set_covering"):
            return validate(
                Problem(kind, fam, param=p.get("param", _int(top, 1, num_sets)))
            )
        return validate(Problem(kind, fam))

    if kind == "steiner_tree":
        n = p.get("vertices", 4)
        density = p.get("density", 0.5)
        max_weight = p.get("max_weight", 4)
        edges = _connected_graph(seed, n, density)
        weights = tuple(
            _int(_stream(seed, "weight", i, j), 1, max_weight) for i, j in edges
        )
        g = UGraph(n, edges, weights)
        num_terminals = p.get("terminals", _int(top, 1, n))
        terminals = sorted(
            int(x)
            for x in _stream(seed, "terminals").choice(
                np.arange(1, n + 1), size=min(num_terminals, n), replace=False
            )
        )
        total = sum(weights)
        if p.get("generous_budget"):
            budget = total + _int(top, 0, max_weight)
        else:
            budget = p.get("budget", _int(top, 0, total))
        return validate(Problem(kind, SteinerInstance(g, tuple(terminals), budget)))

    if kind == "three_dim_matching":
        t = p.get("t_size", 3)
        count = p.get("triples", max(t, 4))
        triples = set()
        i = 0
        while len(triples) < min(count, t ** 3):
            i += 1
            rng = _stream(seed, "triple", i)
            triples.add((_int(rng, 1, t), _int(rng, 1, t), _int(rng, 1, t)))
        return validate(Problem(kind, TripleFamily(t, tuple(sorted(triples)))))

    if kind in ("knapsack", "partition"):
        r = p.get("items", 6)
        max_value = p.get("max_value", 12)
        values = tuple(_int(_stream(seed, "item", i), 1, max_value) for i in range(1, r + 1))
        if kind == "partition":
            return validate(Problem(kind, IntegerList(values)))
        target = p.get("target", _int(top, 0, sum(values)))
        return validate(Problem(kind, IntegerList(values, target)))

    if kind == "ip01":
        from .binprog import BinaryProgram, ConstraintRow, VariableTag

        v = p.get("variables", 6)
        rows = p.get("rows", 3)
        max_terms = p.get("max_terms", min(4, v))
        out_rows = []
        for r in range(1, rows + 1):
            rng = _stream(seed, "row", r)
            count = _int(rng, 1, max_terms)
            idxs = sorted(int(x) for x in rng.choice(np.arange(v), size=count, replace=False))
            terms = tuple((i, _int(rng, -2, 2) or 1) for i in idxs)
            out_rows.append(ConstraintRow(terms, "=", _int(rng, 0, count), None))
        prog = BinaryProgram(
            tuple(VariableTag(("x", i)) for i in range(1, v + 1)), tuple(out_rows)
        )
        return validate(Problem("ip01", prog))

    raise ValueError("no generator for kind %r" % kind)


# the single scale knob each kind exposes to the growth auditor
SCALE_PARAM = {
    "sat": "clauses",
    "threesat": "clauses",
    "clique": "vertices",
    "node_cover": "vertices",
    "chromatic_number": "vertices",
    "clique_cover": "vertices",
    "hcp": "vertices",
    "max_cut": "vertices",
    "dhcp": "vertices",
    "feedback_arc_set": "vertices",
    "feedback_node_set": "vertices",
    "set_packing": "sets",
    "set_covering": "sets",
    "exact_cover": "sets",
    "hitting_set": "sets",
    "steiner_tree": "vertices",
    "three_dim_matching": "t_size",
    "knapsack": "items",
    "partition": "items",
}


def scaled_spec(spec, scale):
    """Re-parameterise a spec at a scale point; auxiliary parameters that
    must track the scale are adjusted alongside."""
    knob = SCALE_PARAM[spec.kind]
    overrides = {knob: scale}
    if spec.kind in ("sat", "threesat"):
        overrides["literals"] = max(3, scale)
    if spec.kind in ("set_packing", "set_covering", "exact_cover", "hitting_set"):
        overrides["universe"] = max(3, scale)
        overrides["sets"] = scale
    if spec.kind == "three_dim_matching":
        overrides["triples"] = 2 * scale
    return spec.with_params(**overrides)
