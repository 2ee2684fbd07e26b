"""Suborbits, orbital graphs, connectivity, and standard double covers.

A transitive action splits the points into orbits of a point stabilizer
(suborbits); each suborbit other than the fixed ones induces an orbital
digraph whose arc set is one orbit of the group on ordered pairs.  These
graphs are the arc-transitive graphs whose automorphism questions drive the
verification scenarios: connectivity is decided both by plain graph search
and by a generation argument (the two must agree), block systems impose
divisibility constraints on subdegrees, and the valency-127 graphs of the
Mersenne-prime family are linked by a standard double cover that this module
constructs explicitly and checks edge-by-edge.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .config import Budgets, DEFAULT_BUDGETS
from .numbers import is_prime
from .perm import PermGroup, BlockSystem
from .zoo import (GroupAction, MersenneScenario, borel_subgroup, coset_action,
                  projective_line_action)


@dataclass
class SuborbitTable:
    """Orbits of a point stabilizer, with their lengths.

    entries holds (representative point, length) pairs sorted by length then
    representative; representatives are the least point of each suborbit.
    The subdegree multiset always sums to the degree.
    """

    alpha: int
    entries: List[Tuple[int, int]]
    degree: int

    def __post_init__(self):
        assert sum(length for _, length in self.entries) == self.degree

    def multiset(self) -> tuple:
        return tuple(sorted(length for _, length in self.entries))

    def fixed_point_count(self) -> int:
        return sum(1 for _, length in self.entries if length == 1)

    def prime_entries(self) -> list:
        return [(rep, length) for rep, length in self.entries
                if is_prime(length)]

    def __repr__(self) -> str:
        parts = ", ".join(f"{length}@{rep + 1}" for rep, length in self.entries)
        return f"SuborbitTable(alpha={self.alpha + 1}, {parts})"


def suborbits(A: GroupAction, alpha: int = 0) -> SuborbitTable:
    """Suborbit table of a transitive action at base point alpha."""
    G = A.group
    if not G.is_transitive():
        raise ValueError("suborbits require a transitive action")
    stab = G.point_stabilizer(alpha)
    orbs = stab.orbits()
    entries = sorted((min(o), len(o)) for o in orbs)
    entries.sort(key=lambda e: (e[1], e[0]))
    return SuborbitTable(alpha=alpha, entries=entries, degree=A.degree)


@dataclass
class Graph:
    """Plain undirected graph on dense integer vertices."""

    n: int
    adj: Tuple[Tuple[int, ...], ...]

    def edge_set(self) -> set:
        return {(u, v) for u in range(self.n) for v in self.adj[u] if u <= v}

    def arc_count(self) -> int:
        return sum(len(a) for a in self.adj)


@dataclass
class OrbitalGraph:
    """Digraph whose arc set is one orbit of G on ordered point pairs.

    Arc-set invariance under every generator is checked exhaustively at
    construction; a self-paired orbital has a symmetric arc set and is
    treated as an undirected graph.
    """

    n: int
    adj: Tuple[Tuple[int, ...], ...]
    self_paired: bool
    valency: int
    action: GroupAction
    base_arc: Tuple[int, int]

    def arc_count(self) -> int:
        return sum(len(a) for a in self.adj)

    def edge_set(self) -> set:
        if self.self_paired:
            return {(u, v) for u in range(self.n) for v in self.adj[u]
                    if u <= v}
        return {(u, v) for u in range(self.n) for v in self.adj[u]}

    def to_edge_list_text(self) -> str:
        """Edges (arcs when not self-paired) as `u v` lines, 1-indexed."""
        lines = [f"{u + 1} {v + 1}" for u, v in sorted(self.edge_set())]
        return "\n".join(lines) + "\n"

    def is_complete(self) -> bool:
        return self.self_paired and self.valency == self.n - 1

    def __repr__(self) -> str:
        return (f"OrbitalGraph(n={self.n}, valency={self.valency}, "
                f"self_paired={self.self_paired})")


def paired_suborbit(A: GroupAction, alpha: int, beta: int) -> int:
    """Representative of the suborbit paired to that of beta.

    Uses a transversal element g0 with beta^{g0} = alpha and returns
    alpha^{g0}; the suborbit of beta is self-paired exactly when the result
    lies in the G_alpha-orbit of beta.
    """
    if alpha == beta:
        raise ValueError("paired_suborbit needs two distinct points")
    G = A.group
    trans = G.orbit_with_transversal(alpha)
    if beta not in trans:
        raise ValueError("alpha and beta lie in different orbits")
    g0 = trans[beta].inverse()
    return int(g0.images[alpha])


def orbital_graph(A: GroupAction, alpha: int, beta: int) -> OrbitalGraph:
    """Orbital digraph with arc set (alpha, beta)^G, built by BFS on pairs."""
    if alpha == beta:
        raise ValueError("orbital graphs need two distinct points")
    G = A.group
    n = A.degree
    gens = [g.images for g in G.generators]
    seen = set()
    start = alpha * n + beta
    seen.add(start)
    frontier = [(alpha, beta)]
    arcs = [(alpha, beta)]
    while frontier:
        nxt = []
        for u, v in frontier:
            for img in gens:
                a, b = int(img[u]), int(img[v])
                key = a * n + b
                if key not in seen:
                    seen.add(key)
                    nxt.append((a, b))
                    arcs.append((a, b))
        frontier = nxt

    adj = [[] for _ in range(n)]
    for u, v in arcs:
        adj[u].append(v)
    adj = tuple(tuple(sorted(a)) for a in adj)

    # exhaustive arc-set invariance check under every generator
    for img in gens:
        for u, v in arcs:
            assert int(img[u]) * n + int(img[v]) in seen, \
                "arc set is not invariant"

    valencies = {len(a) for a in adj}
    assert len(valencies) == 1, "orbital digraph has non-uniform out-valency"
    valency = valencies.pop()

    stab = G.point_stabilizer(alpha)
    beta_suborbit = stab.orbit(beta)
    assert len(beta_suborbit) == valency
    rep = paired_suborbit(A, alpha, beta)
    self_paired = rep in beta_suborbit
    if self_paired:
        assert all((v * n + u) in seen for u, v in arcs), \
            "self-paired orbital must have a symmetric arc set"
    return OrbitalGraph(n=n, adj=adj, self_paired=self_paired,
                        valency=valency, action=A, base_arc=(alpha, beta))


def is_connected(graph) -> bool:
    """Weak connectivity of a (di)graph via union-find on its arcs."""
    n = graph.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for v in graph.adj[u]:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
    roots = {find(x) for x in range(n)}
    return len(roots) == 1


def connectivity_by_generation(A: GroupAction, alpha: int, beta: int) -> bool:
    """Decide connectivity of the (alpha, beta)-orbital via generation.

    For a self-paired suborbit, an element g interchanging alpha and beta
    exists, and the orbital graph is connected exactly when G_alpha together
    with g generates G.  All interchanging elements lie in one coset of
    G_alpha ∩ G_beta, so the generated group does not depend on the choice.
    """
    if alpha == beta:
        raise ValueError("need two distinct points")
    G = A.group
    stab = G.point_stabilizer(alpha)
    trans = G.orbit_with_transversal(alpha)
    if beta not in trans:
        raise ValueError("alpha and beta lie in different orbits")
    u_beta = trans[beta]
    delta = int(u_beta.inverse().images[alpha])
    sub_trans = stab.orbit_with_transversal(beta)
    if delta not in sub_trans:
        raise ValueError("suborbit of beta is not self-paired; "
                         "no element interchanges alpha and beta")
    g = sub_trans[delta] * u_beta
    assert int(g.images[alpha]) == beta and int(g.images[beta]) == alpha
    generated = PermGroup(list(stab.generators) + [g], degree=A.degree)
    return generated.order() == G.order()


def block_divisibility_check(A: GroupAction, partition: BlockSystem,
                             alpha: int, omega: int) -> bool:
    """Divisibility constraint a block system imposes on a suborbit.

    The G_alpha-orbit length of the block containing omega must divide the
    G_alpha-orbit length of omega itself.  Additionally, when alpha and
    omega share a block of a proper nontrivial system, the corresponding
    orbital digraph must be disconnected; that too is verified here.
    """
    G = A.group
    if not partition.is_invariant(G):
        raise ValueError("partition is not invariant under the action")
    if alpha == omega:
        raise ValueError("need two distinct points")
    stab = G.point_stabilizer(alpha)
    point_orbit = stab.orbit(omega)

    # Orbit of omega's block under G_alpha, acting on blocks via any member.
    start = partition.cell_of(omega)
    seen_blocks = {start}
    frontier = [start]
    cell_reps = [cell[0] for cell in partition.cells]
    while frontier:
        nxt = []
        for cidx in frontier:
            rep_point = cell_reps[cidx]
            for g in stab.generators:
                image_cell = partition.cell_of(int(g.images[rep_point]))
                if image_cell not in seen_blocks:
                    seen_blocks.add(image_cell)
                    nxt.append(image_cell)
        frontier = nxt

    ok = len(point_orbit) % len(seen_blocks) == 0
    if partition.cell_of(alpha) == partition.cell_of(omega) \
            and 1 < len(partition.cells) < A.degree:
        graph = orbital_graph(A, alpha, omega)
        ok = ok and not is_connected(graph)
    return ok


def standard_double_cover(graph) -> Graph:
    """Bipartite double of an undirected graph.

    Vertex (v, i) is indexed v + i*n; (u, 0) is adjacent to (v, 1) exactly
    when u ~ v in the input.  Connected non-bipartite graphs lift to
    connected covers; bipartite ones fall apart into two copies.
    """
    n = graph.n
    for u in range(n):
        for v in graph.adj[u]:
            assert u in graph.adj[v], "double cover needs an undirected graph"
    adj = [[] for _ in range(2 * n)]
    for u in range(n):
        for v in graph.adj[u]:
            adj[u].append(v + n)
            adj[u + n].append(v)
    return Graph(n=2 * n, adj=tuple(tuple(sorted(a)) for a in adj))


@dataclass
class DoubleCoverReport:
    """Outcome of the explicit double-cover identification.

    psi is the vertex bijection from the cover of the half-degree graph onto
    the full-degree orbital graph, recorded for audit; ok means the mapped
    edge set coincides exactly with the arc set of the constructed orbital
    graph.
    """

    ok: bool
    p: int
    s: int
    sigma: OrbitalGraph
    gamma: OrbitalGraph
    psi: Tuple[int, ...]
    edge_count: int

    def __bool__(self) -> bool:
        return self.ok


def verify_double_cover_scenario(scn: MersenneScenario,
                                 budgets: Budgets = DEFAULT_BUDGETS,
                                 actions: Optional[dict] = None) -> DoubleCoverReport:
    """Check that the valency-p graph on (p^2-1)/s points doubles the one on
    (p^2-1)/2s points.

    Builds the coset actions of PSL2(p) and PGL2(p) on the cosets of the
    same subgroup C_p:C_s of PSL2(p), identifies the PSL cosets inside the
    PGL coset space through shared canonical representatives, extends the
    identification to the second half by a normalizing element outside
    PSL2(p), and verifies that the standard double cover of the PSL orbital
    graph maps edge-for-edge onto the PGL orbital graph.

    `actions` may supply prebuilt ingredients keyed "a_half", "a_full",
    "line" to share coset tables with other scenarios.
    """
    p, s = scn.p, scn.s
    if not s < (p - 1) // 2:
        raise ValueError(
            f"s={s} is out of pattern for a double cover: the PGL coset "
            f"space only doubles the PSL one when s < (p-1)/2")
    actions = actions or {}
    if "a_half" in actions:
        a_half = actions["a_half"]
        a_full = actions["a_full"]
        line = actions["line"]
    else:
        line = projective_line_action(p, budgets=budgets)
        psl = line.subgroups["PSL"]
        pgl = line.subgroups["PGL"]
        H = borel_subgroup(scn, "psl", s)
        psl_act = GroupAction(psl, line.point_labels, line.provenance)
        a_half = coset_action(psl_act, H, budgets=budgets)
        a_full = coset_action(GroupAction(pgl, line.point_labels,
                                          line.provenance), H,
                              budgets=budgets)
    n_half = a_half.degree
    assert a_full.degree == 2 * n_half

    # Sigma: a self-paired connected valency-p orbital graph of the PSL action.
    table = suborbits(a_half, 0)
    sigma = None
    for rep, length in table.entries:
        if length == p:
            candidate = orbital_graph(a_half, 0, rep)
            assert candidate.self_paired and is_connected(candidate)
            sigma = candidate
            break
    assert sigma is not None, "no valency-p suborbit found"

    # iota: PSL cosets -> PGL cosets through the shared canonical reps.
    cc_half, cc_full = a_half.parent, a_full.parent
    iota = np.array([cc_full.index_of(cc_half.coset_reps[i])
                     for i in range(n_half)], dtype=np.int64)

    # A normalizer of H outside PSL: the diagonal map with a primitive-root
    # (hence non-square) multiplier normalizes every C_p:C_s above it.
    # Left multiplication by it commutes with the right coset action, so it
    # gives a PSL-equivariant bijection of the first half onto the second.
    g_mult = line.subgroups["PGL"].generators[1]
    H_sub = cc_full.stabilizer
    ginv = g_mult.inverse()
    for h in H_sub.generators:
        assert H_sub.contains(ginv * h * g_mult), \
            "multiplier map must normalize the point stabilizer"
    assert not line.subgroups["PSL"].contains(g_mult)

    psi = np.empty(2 * n_half, dtype=np.int64)
    psi[:n_half] = iota
    psi[n_half:] = [cc_full.index_of(g_mult * cc_half.coset_reps[i])
                    for i in range(n_half)]
    assert len(set(int(x) for x in psi)) == 2 * n_half, "psi is not a bijection"

    cover = standard_double_cover(sigma)
    mapped = {(int(psi[u]), int(psi[v]))
              for u in range(cover.n) for v in cover.adj[u]}
    first = min(mapped)
    gamma = orbital_graph(a_full, first[0], first[1])
    gamma_arcs = {(u, v) for u in range(gamma.n) for v in gamma.adj[u]}
    ok = mapped == gamma_arcs and gamma.self_paired and is_connected(gamma)
    return DoubleCoverReport(ok=ok, p=p, s=s, sigma=sigma, gamma=gamma,
                             psi=tuple(int(x) for x in psi),
                             edge_count=len(gamma_arcs) // 2)
