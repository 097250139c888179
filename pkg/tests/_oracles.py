"""Slow reference implementations used to cross-check the fast code.

Everything here works on plain Python sets and dicts straight from the
definitions, shares no code or data layout with the package internals, and
prefers clarity over speed.
"""

from itertools import combinations, permutations


def ref_adj(n, edges):
    adj = {v: set() for v in range(n)}
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    return adj


def ref_components(adj, vertices):
    """Vertex sets of the components of the subgraph induced on `vertices`."""
    left = set(vertices)
    comps = []
    while left:
        seed = left.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            u = frontier.pop()
            for w in adj[u]:
                if w in left:
                    left.remove(w)
                    comp.add(w)
                    frontier.append(w)
        comps.append(comp)
    return comps


def ref_first_forces(adj, n, blue):
    """All valid forces (forcer, target) for the given blue set.

    A blue u forces the white w iff w is u's only white neighbor inside w's
    component of the white subgraph.
    """
    blue = set(blue)
    white = set(range(n)) - blue
    out = set()
    for comp in ref_components(adj, white):
        for u in blue:
            cand = adj[u] & comp
            if len(cand) == 1:
                out.add((u, next(iter(cand))))
    return out


def ref_round(adj, n, blue):
    """Vertices forced by one synchronous round."""
    return {w for _, w in ref_first_forces(adj, n, blue)}


def ref_pt(adj, n, blue):
    """Rounds until everything is blue, or None if the set never forces."""
    blue = set(blue)
    t = 0
    while len(blue) < n:
        forced = ref_round(adj, n, blue)
        if not forced:
            return None
        blue |= forced
        t += 1
    return t


def ref_z_and_pt(adj, n):
    """(Z+, pt+) by scanning all subsets in ascending size."""
    for k in range(n + 1):
        times = [
            t
            for sub in combinations(range(n), k)
            if (t := ref_pt(adj, n, set(sub))) is not None
        ]
        if times:
            return k, min(times)
    raise AssertionError("the full vertex set always forces")


def ref_isomorphic(n1, edges1, n2, edges2):
    """Brute-force isomorphism test with a degree-sequence quick reject."""
    if n1 != n2:
        return False
    e1 = {frozenset(e) for e in edges1}
    e2 = {frozenset(e) for e in edges2}
    if len(e1) != len(e2):
        return False

    def degrees(es):
        d = [0] * n1
        for e in es:
            for v in e:
                d[v] += 1
        return d

    if sorted(degrees(e1)) != sorted(degrees(e2)):
        return False
    for perm in permutations(range(n1)):
        if all(frozenset({perm[u], perm[w]}) in e2 for u, w in map(tuple, e1)):
            return True
    return False
