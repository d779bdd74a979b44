"""Strategy sets: the lcm-sized path construction and the permutation orbit.

The constructed set lives on a layered graph whose nodes are the weight
classes and whose edges join each symbol to the symbols one flipped bit
above it. Integer edge weights spread each node's multiplicity evenly over
its edges; peeling the weights into root-to-top paths yields exactly L
minimal multisymbols that cover every weight-s symbol the same number of
times.
"""

from dataclasses import dataclass
from itertools import permutations
from math import comb, fsum, lcm

import numpy as np

from .frame_space import enumerate_weight_class, state_pmf
from .multisymbol import Multisymbol, basic_multisymbol, permute

PMF_TOL = 1e-12
MAX_PERMUTATION_F = 8


def lcm_binomials(F):
    """Least common multiple of the binomial coefficients C(F, 0..F)."""
    if F < 1:
        raise ValueError("F must be at least 1")
    return lcm(*(comb(F, s) for s in range(F + 1)))


def representative_multiplicity(F, s):
    """How often each weight-s symbol appears across the constructed set."""
    if not 0 <= s <= F:
        raise ValueError(f"state must be in 0..{F}")
    L = lcm_binomials(F)
    return L // comb(F, s)


@dataclass(frozen=True)
class StrategySet:
    """A finite menu of multisymbols with a probability mass over them."""

    multisymbols: tuple
    pmf: tuple

    def __post_init__(self):
        ms = tuple(self.multisymbols)
        pmf = tuple(float(w) for w in self.pmf)
        object.__setattr__(self, "multisymbols", ms)
        object.__setattr__(self, "pmf", pmf)
        if not ms:
            raise ValueError("strategy set cannot be empty")
        if len(pmf) != len(ms):
            raise ValueError("need one probability per multisymbol")
        F = ms[0].F
        if any(m.F != F for m in ms):
            raise ValueError("all multisymbols must share one frame length")
        if any(w < 0.0 for w in pmf) or abs(fsum(pmf) - 1.0) > PMF_TOL:
            raise ValueError("pmf must be nonnegative and sum to 1")

    @property
    def F(self):
        return self.multisymbols[0].F

    def __len__(self):
        return len(self.multisymbols)


@dataclass(frozen=True)
class LayeredGraph:
    """Weight classes joined by covering edges, each carrying an integer weight.

    weights[s] maps an edge (x, x2), with x2 one flipped bit above x, to its
    weight. Outgoing weights at every node sum to that node's multiplicity;
    incoming weights at every next-layer node do the same.
    """

    F: int
    layers: tuple
    weights: tuple


def covering_successors(F, x):
    """Symbols one flipped bit above x, ascending."""
    return [x | (1 << i) for i in range(F) if not (x >> i) & 1]


def build_weighted_graph(F):
    """Assign covering-edge weights so in/out totals hit each node's multiplicity.

    Per layer, every outgoing weight is the floor or ceil of the average
    m_s / (F - s); the nodes needing a ceil edge on the two sides are matched
    by a small augmenting-path flow, so the result is deterministic.
    """
    layers = tuple(tuple(enumerate_weight_class(F, s)) for s in range(F + 1))
    weights = []
    for s in range(F):
        m_out = representative_multiplicity(F, s)
        m_in = representative_multiplicity(F, s + 1)
        out_deg = F - s
        in_deg = s + 1
        w1, b = divmod(m_out, out_deg)
        w1_in, d = divmod(m_in, in_deg)
        if w1 != w1_in or b * comb(F, s) != d * comb(F, s + 1):
            raise RuntimeError(
                f"inconsistent edge weight split at layer {s}: "
                f"{m_out}/{out_deg} vs {m_in}/{in_deg}"
            )
        layer = {}
        for x in layers[s]:
            for x2 in covering_successors(F, x):
                layer[(x, x2)] = w1
        if b:
            for edge in _ceil_edges(F, layers[s], layers[s + 1], b, d):
                layer[edge] += 1
        weights.append(layer)
    return LayeredGraph(F, layers, tuple(weights))


def _ceil_edges(F, left, right, b, d):
    """Covering edges forming a subgraph with out-degree b and in-degree d."""
    need = dict.fromkeys(left, b)
    room = dict.fromkeys(right, d)
    chosen = {x: set() for x in left}
    owners = {x2: set() for x2 in right}
    for x in left:
        for x2 in covering_successors(F, x):
            if need[x] == 0:
                break
            if room[x2] > 0 and x2 not in chosen[x]:
                chosen[x].add(x2)
                owners[x2].add(x)
                need[x] -= 1
                room[x2] -= 1
    for x in left:
        while need[x] > 0:
            if not _augment(F, x, chosen, owners, room):
                raise RuntimeError(
                    f"no degree-({b},{d}) covering subgraph found on {len(left)} nodes"
                )
            need[x] -= 1
    return [(x, x2) for x in left for x2 in sorted(chosen[x])]


def _augment(F, start, chosen, owners, room):
    """Grow the chosen subgraph by one edge at start, rerouting if needed."""
    parent = {}
    seen_left = {start}
    seen_right = set()
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for x2 in covering_successors(F, x):
                if x2 in seen_right or x2 in chosen[x]:
                    continue
                seen_right.add(x2)
                parent[x2] = x
                if room[x2] > 0:
                    room[x2] -= 1
                    _flip_path(x2, parent, chosen, owners)
                    return True
                for x1 in sorted(owners[x2]):
                    if x1 not in seen_left:
                        seen_left.add(x1)
                        parent[x1] = x2
                        nxt.append(x1)
        frontier = nxt
    return False


def _flip_path(end, parent, chosen, owners):
    node = end
    while True:
        x = parent[node]
        chosen[x].add(node)
        owners[node].add(x)
        if x not in parent:
            return
        released = parent[x]
        chosen[x].remove(released)
        owners[released].remove(x)
        node = released


def decompose_paths(graph):
    """Peel the weighted graph into L root-to-top paths, one multisymbol each.

    Always follows the smallest next symbol that still has weight left, so
    the output order is reproducible.
    """
    F = graph.F
    L = lcm_binomials(F)
    residual = [dict(layer) for layer in graph.weights]
    successors = [{x: covering_successors(F, x) for x in graph.layers[s]} for s in range(F)]
    multis = []
    for _ in range(L):
        node = 0
        reps = [0]
        for s in range(F):
            for x2 in successors[s][node]:
                w = residual[s].get((node, x2), 0)
                if w > 0:
                    residual[s][(node, x2)] = w - 1
                    node = x2
                    break
            else:
                raise RuntimeError("path extraction stalled: weight totals inconsistent")
            reps.append(node)
        multis.append(Multisymbol(F, tuple(reps)))
    if any(w != 0 for layer in residual for w in layer.values()):
        raise RuntimeError("edge weight left over after extracting all paths")
    return StrategySet(tuple(multis), tuple(1.0 / L for _ in range(L)))


def full_permutation_set(F):
    """All F! position permutations of the basic multisymbol, equally weighted."""
    if not 1 <= F <= MAX_PERMUTATION_F:
        raise ValueError(f"F must be in 1..{MAX_PERMUTATION_F}; the set grows as F!")
    base = basic_multisymbol(F)
    multis = [permute(base, pi) for pi in permutations(range(F))]
    if len({m.reps for m in multis}) != len(multis):
        raise RuntimeError("distinct permutations produced colliding multisymbols")
    n = len(multis)
    return StrategySet(tuple(multis), tuple(1.0 / n for _ in range(n)))


def induced_input_pmf(sset, config):
    """Input law the set induces: each strategy sends its state-s representative."""
    if sset.F != config.F:
        raise ValueError("strategy set and frame config disagree on F")
    pmf_s = state_pmf(config)
    out = np.zeros(1 << config.F)
    for m, w in zip(sset.multisymbols, sset.pmf):
        for s, x in enumerate(m.reps):
            out[x] += w * pmf_s[s]
    return out
