"""Canonical in-memory representations of Karp's 21 decision problems.

Each problem instance is a `Problem` carrying a kind tag and a payload
(graph, set family, CNF formula, ...).  This module owns validity checks,
certificate verification, and the per-kind input-size measures used by the
growth auditor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

KINDS = (
    "sat",
    "ip01",
    "clique",
    "set_packing",
    "node_cover",
    "set_covering",
    "feedback_node_set",
    "feedback_arc_set",
    "dhcp",
    "hcp",
    "threesat",
    "chromatic_number",
    "clique_cover",
    "exact_cover",
    "hitting_set",
    "steiner_tree",
    "three_dim_matching",
    "knapsack",
    "job_sequencing",
    "partition",
    "max_cut",
)

# Kinds whose payload carries an extra scalar parameter (k, l or W).
PARAM_KINDS = {
    "clique",
    "set_packing",
    "node_cover",
    "set_covering",
    "feedback_node_set",
    "feedback_arc_set",
    "chromatic_number",
    "clique_cover",
    "max_cut",
}


class UnsupportedKindError(ValueError):
    """Raised for kinds with no defined payload (job_sequencing) or unknown tags."""


class InvalidInstanceError(ValueError):
    """Raised when a payload violates its structural invariants."""


class InvalidCertificateError(ValueError):
    """Raised when a certificate is malformed for the instance it claims to witness."""


# ---------------------------------------------------------------------------
# payload carriers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    """CNF formula over literals 1..num_literals; clauses hold signed indices."""

    num_literals: int
    clauses: tuple

    @staticmethod
    def make(num_literals, clauses):
        return CnfFormula(num_literals, tuple(tuple(c) for c in clauses))


@dataclass(frozen=True)
class UGraph:
    """Undirected graph on vertices 1..num_vertices.

    If `complement` is True the stored edge list describes the complement of
    the actual graph (compressed clique-cover representation); use
    `effective_edges` for the semantic edge set.
    """

    num_vertices: int
    edges: tuple
    weights: Optional[tuple] = None
    complement: bool = False

    @staticmethod
    def make(num_vertices, edges, weights=None, complement=False):
        return UGraph(
            num_vertices,
            tuple((min(i, j), max(i, j)) for i, j in edges),
            None if weights is None else tuple(weights),
            complement,
        )

    def effective_edges(self):
        if not self.complement:
            return self.edges
        stored = set(self.edges)
        n = self.num_vertices
        return tuple(
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if (i, j) not in stored
        )

    def weight_of(self):
        return dict(zip(self.edges, self.weights))


@dataclass(frozen=True)
class DiGraph:
    """Directed graph on vertices 1..num_vertices."""

    num_vertices: int
    arcs: tuple

    @staticmethod
    def make(num_vertices, arcs):
        return DiGraph(num_vertices, tuple(tuple(a) for a in arcs))


@dataclass(frozen=True)
class SetFamily:
    """Family of sets over elements 1..universe_size."""

    universe_size: int
    sets: tuple

    @staticmethod
    def make(universe_size, sets):
        return SetFamily(universe_size, tuple(tuple(s) for s in sets))

    @property
    def num_sets(self):
        return len(self.sets)

    def union(self):
        out = set()
        for s in self.sets:
            out.update(s)
        return out


@dataclass(frozen=True)
class TripleFamily:
    """Triples over a ground set 1..t_size (three coordinates)."""

    t_size: int
    triples: tuple

    @staticmethod
    def make(t_size, triples):
        return TripleFamily(t_size, tuple(tuple(t) for t in triples))


@dataclass(frozen=True)
class IntegerList:
    """Positive integers; knapsack instances additionally carry a target sum."""

    values: tuple
    target: Optional[int] = None

    @staticmethod
    def make(values, target=None):
        return IntegerList(tuple(values), target)


@dataclass(frozen=True)
class SteinerInstance:
    graph: UGraph
    terminals: tuple
    budget: int

    @staticmethod
    def make(graph, terminals, budget):
        return SteinerInstance(graph, tuple(sorted(terminals)), budget)


@dataclass(frozen=True)
class Problem:
    """A problem instance: kind tag, payload carrier, optional scalar parameter."""

    kind: str
    payload: object
    param: Optional[int] = None


@dataclass(frozen=True)
class Certificate:
    """A solution witness; `kind` names the witness shape, not the problem."""

    kind: str
    value: object


@dataclass(frozen=True)
class SizeReport:
    kind: str
    element: int
    bits: int


# certificate shape expected for each problem kind
CERT_KIND = {
    "sat": "assignment",
    "threesat": "assignment",
    "ip01": "binary",
    "clique": "vertex_set",
    "node_cover": "vertex_set",
    "feedback_node_set": "vertex_set",
    "max_cut": "vertex_set",
    "set_packing": "set_indices",
    "set_covering": "set_indices",
    "exact_cover": "set_indices",
    "hitting_set": "element_set",
    "feedback_arc_set": "arc_set",
    "dhcp": "cycle",
    "hcp": "cycle",
    "chromatic_number": "coloring",
    "clique_cover": "clique_partition",
    "steiner_tree": "tree",
    "three_dim_matching": "triple_indices",
    "knapsack": "item_indices",
    "partition": "item_indices",
}


# ---------------------------------------------------------------------------
# validity
# ---------------------------------------------------------------------------


def _check(cond, msg):
    if not cond:
        raise InvalidInstanceError(msg)


def _validate_ugraph(g, weighted):
    _check(g.num_vertices >= 0, "negative vertex count")
    seen = set()
    for i, j in g.edges:
        _check(i != j, "self-loop (%d,%d)" % (i, j))
        _check(1 <= i <= g.num_vertices and 1 <= j <= g.num_vertices, "vertex out of range")
        _check((i, j) not in seen, "duplicate edge (%d,%d)" % (i, j))
        seen.add((i, j))
    if weighted:
        _check(g.weights is not None, "weights required")
        _check(len(g.weights) == len(g.edges), "one weight per edge required")
        _check(all(w >= 0 for w in g.weights), "negative edge weight")
    else:
        _check(g.weights is None, "weights not allowed for this kind")


def _validate_digraph(g):
    seen = set()
    for i, j in g.arcs:
        _check(1 <= i <= g.num_vertices and 1 <= j <= g.num_vertices, "vertex out of range")
        _check((i, j) not in seen, "duplicate arc (%d,%d)" % (i, j))
        seen.add((i, j))


def _validate_family(fam):
    for s in fam.sets:
        _check(len(set(s)) == len(s), "duplicate element within one set")
        for x in s:
            _check(1 <= x <= fam.universe_size, "element out of range")


def _validate_cnf(f, max_clause=None):
    _check(f.num_literals >= 0, "negative literal count")
    for c in f.clauses:
        _check(len(c) >= 1, "empty clause")
        if max_clause is not None:
            _check(len(c) <= max_clause, "clause larger than %d" % max_clause)
        for lit in c:
            _check(lit != 0 and 1 <= abs(lit) <= f.num_literals, "literal out of range")


def validate(problem):
    """Raise InvalidInstanceError if the instance violates its invariants."""
    kind = problem.kind
    p = problem.payload
    if kind not in KINDS:
        raise UnsupportedKindError("unknown kind %r" % kind)
    if kind == "job_sequencing":
        _check(p is None, "job_sequencing carries no payload")
        return problem
    if kind in PARAM_KINDS:
        _check(problem.param is not None, "%s requires a scalar parameter" % kind)
        _check(problem.param >= 0, "negative parameter")
    if kind in ("sat", "threesat"):
        _validate_cnf(p, max_clause=3 if kind == "threesat" else None)
    elif kind == "ip01":
        p.validate()
    elif kind in ("clique", "node_cover", "chromatic_number"):
        _validate_ugraph(p, weighted=False)
        _check(p.complement is False, "complement flag reserved for clique_cover")
        _check(problem.param <= p.num_vertices, "parameter exceeds vertex count")
    elif kind == "clique_cover":
        _validate_ugraph(p, weighted=False)
        _check(problem.param <= p.num_vertices, "parameter exceeds vertex count")
    elif kind == "hcp":
        _validate_ugraph(p, weighted=False)
        _check(p.complement is False, "complement flag reserved for clique_cover")
    elif kind == "max_cut":
        _validate_ugraph(p, weighted=True)
    elif kind in ("set_packing", "set_covering", "exact_cover", "hitting_set"):
        _validate_family(p)
        if kind == "set_covering":
            # choosing "exactly k" supersets requires at least k sets to choose from
            _check(problem.param <= p.num_sets, "k exceeds number of sets")
    elif kind in ("feedback_node_set", "feedback_arc_set", "dhcp"):
        _validate_digraph(p)
    elif kind == "steiner_tree":
        _validate_ugraph(p.graph, weighted=True)
        _check(len(p.terminals) >= 1, "terminal set empty")
        _check(
            all(1 <= r <= p.graph.num_vertices for r in p.terminals),
            "terminal out of range",
        )
        _check(p.budget >= 0, "negative weight budget")
    elif kind == "three_dim_matching":
        seen = set()
        for t in p.triples:
            _check(len(t) == 3, "triple must have three coordinates")
            _check(all(1 <= x <= p.t_size for x in t), "coordinate out of range")
            _check(t not in seen, "duplicate triple")
            seen.add(t)
    elif kind in ("knapsack", "partition"):
        _check(all(v >= 1 for v in p.values), "integers must be >= 1")
        if kind == "knapsack":
            _check(p.target is not None and p.target >= 0, "knapsack requires a target")
        else:
            _check(p.target is None, "partition carries no target")
    return problem


# ---------------------------------------------------------------------------
# input-size measures
# ---------------------------------------------------------------------------


def nbits(v):
    """Binary encoding length of an integer: ceil(log2(|v|+1)) + 1."""
    return abs(v).bit_length() + 1


def _graph_bits(g, weighted=False):
    total = 0
    w = g.weights if weighted else None
    for idx, (i, j) in enumerate(g.edges):
        total += nbits(i) + nbits(j)
        if w is not None:
            total += nbits(w[idx])
    return total


def _digraph_bits(g):
    return sum(nbits(i) + nbits(j) for i, j in g.arcs)


def _family_bits(fam):
    return sum(nbits(x) for s in fam.sets for x in s)


def measure_input_size(problem, mode="element"):
    """Input size of an instance under the per-kind counting convention.

    Element mode counts data items (edges, set entries, literals, ...); bits
    mode weighs every number by its binary encoding length.
    """
    if mode not in ("element", "bits"):
        raise ValueError("mode must be 'element' or 'bits'")
    kind = problem.kind
    p = problem.payload
    if kind == "job_sequencing" or kind not in KINDS:
        raise UnsupportedKindError("no input-size measure for kind %r" % kind)

    if kind == "sat":
        if mode == "element":
            return sum(len(c) for c in p.clauses)
        return sum(nbits(lit) for c in p.clauses for lit in c)
    if kind == "threesat":
        if mode == "element":
            return 3 * len(p.clauses)
        return sum(nbits(lit) for c in p.clauses for lit in c)
    if kind == "ip01":
        return p.size(mode)
    if kind in ("clique", "node_cover", "feedback_arc_set", "feedback_node_set",
                "chromatic_number", "clique_cover"):
        if kind in ("feedback_arc_set", "feedback_node_set"):
            e = len(p.arcs)
            b = _digraph_bits(p)
        else:
            e = len(p.edges)  # stored edges; clique_cover compressed counts its stored form
            b = _graph_bits(p)
        if mode == "element":
            return e + 1
        return b + nbits(problem.param)
    if kind in ("set_packing", "set_covering"):
        if mode == "element":
            return 1 + sum(len(s) for s in p.sets)
        return _family_bits(p) + nbits(problem.param)
    if kind in ("dhcp",):
        return len(p.arcs) if mode == "element" else _digraph_bits(p)
    if kind == "hcp":
        return len(p.edges) if mode == "element" else _graph_bits(p)
    if kind in ("exact_cover", "hitting_set"):
        if mode == "element":
            return sum(len(s) for s in p.sets)
        return _family_bits(p)
    if kind == "steiner_tree":
        g = p.graph
        if mode == "element":
            return 2 * len(g.edges) + len(p.terminals) + 1
        return (
            _graph_bits(g, weighted=True)
            + sum(nbits(r) for r in p.terminals)
            + nbits(p.budget)
        )
    if kind == "three_dim_matching":
        if mode == "element":
            return 3 * len(p.triples) + 1
        return sum(nbits(x) for t in p.triples for x in t) + nbits(p.t_size)
    if kind == "knapsack":
        if mode == "element":
            return len(p.values) + 1
        return sum(nbits(v) for v in p.values) + nbits(p.target)
    if kind == "partition":
        if mode == "element":
            return len(p.values)
        return sum(nbits(v) for v in p.values)
    if kind == "max_cut":
        if mode == "element":
            return 2 * len(p.edges) + 1
        return _graph_bits(p, weighted=True) + nbits(problem.param)
    raise UnsupportedKindError(kind)


def size_report(problem):
    return SizeReport(
        problem.kind,
        measure_input_size(problem, "element"),
        measure_input_size(problem, "bits"),
    )


# ---------------------------------------------------------------------------
# certificate verification
# ---------------------------------------------------------------------------


def _cc(cond, msg):
    if not cond:
        raise InvalidCertificateError(msg)


def _adjacency(edges):
    adj = {}
    for i, j in edges:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    return adj


def _is_acyclic(num_vertices, arcs, removed_nodes=(), removed_arcs=()):
    removed_nodes = set(removed_nodes)
    removed_arcs = set(removed_arcs)
    succ = {}
    indeg = {v: 0 for v in range(1, num_vertices + 1) if v not in removed_nodes}
    for a in arcs:
        if a in removed_arcs:
            continue
        u, v = a
        if u in removed_nodes or v in removed_nodes:
            continue
        succ.setdefault(u, []).append(v)
        indeg[v] += 1
    queue = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ.get(v, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(indeg)


def _check_cycle_order(order, num_vertices, minimum):
    _cc(len(order) == num_vertices, "cycle must visit every vertex exactly once")
    _cc(sorted(order) == list(range(1, num_vertices + 1)), "cycle is not a permutation")
    _cc(num_vertices >= minimum, "cycle too short for this convention")


def verify_certificate(problem, cert):
    """True iff the certificate witnesses a YES answer for the instance.

    Raises TypeError on a kind mismatch and InvalidCertificateError on
    out-of-range indices or structurally malformed witnesses.
    """
    kind = problem.kind
    if kind not in CERT_KIND:
        raise UnsupportedKindError("no certificate shape for kind %r" % kind)
    if cert.kind != CERT_KIND[kind]:
        raise TypeError(
            "certificate kind %r does not match problem kind %r" % (cert.kind, kind)
        )
    p = problem.payload
    v = cert.value

    if kind in ("sat", "threesat"):
        _cc(len(v) == p.num_literals, "assignment length mismatch")
        for clause in p.clauses:
            if not any((lit > 0) == bool(v[abs(lit) - 1]) for lit in clause):
                return False
        return True

    if kind == "ip01":
        return p.satisfied_by(v)

    if kind == "clique":
        vs = set(v)
        _cc(all(1 <= x <= p.num_vertices for x in vs), "vertex out of range")
        _cc(len(vs) == len(tuple(v)), "duplicate vertices in clique")
        if len(vs) != problem.param:
            return False
        edges = set(p.effective_edges())
        return all(
            (min(a, b), max(a, b)) in edges
            for a in vs
            for b in vs
            if a < b
        )

    if kind == "node_cover":
        vs = set(v)
        _cc(all(1 <= x <= p.num_vertices for x in vs), "vertex out of range")
        if len(vs) > problem.param:
            return False
        return all(i in vs or j in vs for i, j in p.edges)

    if kind == "set_packing":
        idx = list(v)
        _cc(all(1 <= i <= p.num_sets for i in idx), "set index out of range")
        _cc(len(set(idx)) == len(idx), "duplicate set indices")
        if len(idx) != problem.param:
            return False
        chosen = [set(p.sets[i - 1]) for i in idx]
        for a in range(len(chosen)):
            for b in range(a + 1, len(chosen)):
                if chosen[a] & chosen[b]:
                    return False
        return True

    if kind == "set_covering":
        idx = set(v)
        _cc(all(1 <= i <= p.num_sets for i in idx), "set index out of range")
        if len(idx) > problem.param:
            return False
        covered = set()
        for i in idx:
            covered.update(p.sets[i - 1])
        return covered == p.union()

    if kind == "exact_cover":
        idx = list(v)
        _cc(all(1 <= i <= p.num_sets for i in idx), "set index out of range")
        _cc(len(set(idx)) == len(idx), "duplicate set indices")
        covered = []
        for i in idx:
            covered.extend(p.sets[i - 1])
        return len(covered) == len(set(covered)) and set(covered) == p.union()

    if kind == "hitting_set":
        w = set(v)
        _cc(all(1 <= x <= p.universe_size for x in w), "element out of range")
        return all(len(w & set(s)) == 1 for s in p.sets)

    if kind == "feedback_arc_set":
        arcs = set(tuple(a) for a in v)
        _cc(arcs <= set(p.arcs), "certificate arc not in graph")
        if len(arcs) > problem.param:
            return False
        return _is_acyclic(p.num_vertices, p.arcs, removed_arcs=arcs)

    if kind == "feedback_node_set":
        nodes = set(v)
        _cc(all(1 <= x <= p.num_vertices for x in nodes), "vertex out of range")
        if len(nodes) > problem.param:
            return False
        return _is_acyclic(p.num_vertices, p.arcs, removed_nodes=nodes)

    if kind == "dhcp":
        order = list(v)
        _check_cycle_order(order, p.num_vertices, minimum=2)
        arcs = set(p.arcs)
        return all(
            (order[i], order[(i + 1) % len(order)]) in arcs for i in range(len(order))
        )

    if kind == "hcp":
        order = list(v)
        _check_cycle_order(order, p.num_vertices, minimum=3)
        edges = set(p.effective_edges())
        for i in range(len(order)):
            a, b = order[i], order[(i + 1) % len(order)]
            if (min(a, b), max(a, b)) not in edges:
                return False
        return True

    if kind == "chromatic_number":
        colors = list(v)
        _cc(len(colors) == p.num_vertices, "one colour per vertex required")
        if len(set(colors)) > problem.param:
            return False
        return all(colors[i - 1] != colors[j - 1] for i, j in p.edges)

    if kind == "clique_cover":
        blocks = [list(b) for b in v]
        flat = [x for b in blocks for x in b]
        _cc(all(1 <= x <= p.num_vertices for x in flat), "vertex out of range")
        _cc(len(flat) == len(set(flat)), "cliques overlap")
        if len(blocks) > problem.param:
            return False
        if set(flat) != set(range(1, p.num_vertices + 1)):
            return False
        edges = set(p.effective_edges())
        for b in blocks:
            for x in range(len(b)):
                for y in range(x + 1, len(b)):
                    a, c = sorted((b[x], b[y]))
                    if (a, c) not in edges:
                        return False
        return True

    if kind == "steiner_tree":
        edges = [tuple(sorted(e)) for e in v["edges"]]
        root = v["root"]
        g = p.graph
        _cc(1 <= root <= g.num_vertices, "root out of range")
        stored = set(g.edges)
        _cc(all(e in stored for e in edges), "certificate edge not in graph")
        _cc(len(set(edges)) == len(edges), "duplicate tree edges")
        vertices = {root}
        for i, j in edges:
            vertices.update((i, j))
        # tree: connected and |E| = |V| - 1
        if len(edges) != len(vertices) - 1:
            return False
        adj = _adjacency(edges)
        stack, seen = [root], {root}
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != vertices:
            return False
        if not set(p.terminals) <= vertices:
            return False
        wmap = g.weight_of()
        return sum(wmap[e] for e in edges) <= p.budget

    if kind == "three_dim_matching":
        idx = list(v)
        _cc(all(1 <= i <= len(p.triples) for i in idx), "triple index out of range")
        _cc(len(set(idx)) == len(idx), "duplicate triple indices")
        chosen = [p.triples[i - 1] for i in idx]
        if len(chosen) != p.t_size:
            return False
        for k in range(3):
            if len(set(t[k] for t in chosen)) != len(chosen):
                return False
        return True

    if kind in ("knapsack", "partition"):
        idx = list(v)
        _cc(all(1 <= i <= len(p.values) for i in idx), "item index out of range")
        _cc(len(set(idx)) == len(idx), "duplicate item indices")
        total = sum(p.values[i - 1] for i in idx)
        if kind == "knapsack":
            return total == p.target
        return 2 * total == sum(p.values)

    if kind == "max_cut":
        s = set(v)
        _cc(all(1 <= x <= p.num_vertices for x in s), "vertex out of range")
        wmap = p.weight_of()
        cut = sum(
            w for (i, j), w in wmap.items() if (i in s) != (j in s)
        )
        return cut >= problem.param

    raise UnsupportedKindError(kind)
