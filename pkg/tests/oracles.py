"""Reference implementations the tests trust.

Everything here is deliberately naive: literal subset scans, breadth
first search written out longhand, exact linear algebra from sympy, and
exhaustive subgroup closures.  Nothing is shared with the package's own
algorithms, so agreement is evidence rather than tautology.  The scans
are exponential in the edge count; keep inputs small.
"""

import sympy


def kl_sparse_edge_subsets(edges, k, l):
    """m' <= k n' - l over every nonempty edge subset, by literal scan.

    edges is a list of (u, v) pairs, loops as (v, v).
    """
    m = len(edges)
    for mask in range(1, 1 << m):
        sub = [edges[i] for i in range(m) if mask >> i & 1]
        verts = {x for e in sub for x in e}
        if len(sub) > k * len(verts) - l:
            return False
    return True


def kl_sparse_vertex_subsets(edges, vertices, k, l):
    """The same property checked over vertex subsets with all induced
    edges.  Equivalent to the edge-subset scan: any edge subset E' has
    at most as many edges as the graph induced on the vertices E'
    spans, so the worst violation is always an induced one (subsets
    inducing no edges constrain nothing and are skipped)."""
    vs = sorted(vertices)
    n = len(vs)
    for mask in range(1, 1 << n):
        pick = {vs[i] for i in range(n) if mask >> i & 1}
        m2 = sum(1 for u, v in edges if u in pick and v in pick)
        if m2 == 0:
            continue
        if m2 > k * len(pick) - l:
            return False
    return True


# --- color group helpers --------------------------------------------------
#
# Groups are described by plain tuples so no package types are needed:
#   ("Z",)            the integers
#   ("Z^2",)          pairs of integers
#   ("Z/k", (k,))     integers mod k, k prime
#   ("Z/pq", (p, q))  pairs mod p and q, both prime
# Elements are coordinate tuples.


def describe_group(spec):
    """Read a package GroupSpec into the plain-tuple form above."""
    name = str(spec)
    if name == "Z":
        return ("Z",)
    if name == "Z^2":
        return ("Z^2",)
    if "x" in name:
        return ("Z/pq", tuple(spec.moduli))
    return ("Z/k", tuple(spec.moduli))


def subgroup_closure(moduli, values):
    """Every element generated by values inside Z/m1 x ... x Z/mr,
    found by closing under addition, one generator at a time."""
    zero = tuple(0 for _ in moduli)
    seen = {zero}
    frontier = [zero]
    gens = [tuple(c % m for c, m in zip(v, moduli)) for v in values]
    while frontier:
        cur = frontier.pop()
        for gv in gens:
            nxt = tuple((c + d) % m for c, d, m in zip(cur, gv, moduli))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def span_rank(group, values):
    """Rank of the subgroup the values generate: the number of
    independent directions (0, 1 or 2)."""
    kind = group[0]
    values = list(values)
    if kind == "Z":
        return int(any(v[0] != 0 for v in values))
    if kind == "Z^2":
        if not values:
            return 0
        return sympy.Matrix([list(v) for v in values]).rank()
    if kind == "Z/k":
        (k,) = group[1]
        order = len(subgroup_closure((k,), values))
        return {1: 0, k: 1}[order]
    p, q = group[1]
    order = len(subgroup_closure((p, q), values))
    return {1: 0, p: 1, q: 1, p * q: 2}[order]


def subgroup_index(group, values):
    """Index of the generated subgroup in a finite group; this is the
    number of connected components of the corresponding cover."""
    kind = group[0]
    if kind == "Z/k":
        (k,) = group[1]
        return k // len(subgroup_closure(group[1], values))
    if kind == "Z/pq":
        p, q = group[1]
        return p * q // len(subgroup_closure(group[1], values))
    raise ValueError("index is only defined for the finite groups")


# --- colored sparsity by literal enumeration ------------------------------


def _cycle_values(group, edges, comp_verts):
    """Fundamental cycle values of one connected component, via a
    breadth-first spanning tree and vertex potentials."""
    adj = {}
    for idx, (u, v, c) in enumerate(edges):
        adj.setdefault(u, []).append((idx, v))
        adj.setdefault(v, []).append((idx, u))
    root = min(comp_verts)
    dim = 2 if group[0] in ("Z^2", "Z/pq") else 1
    zero = tuple(0 for _ in range(dim))
    pot = {root: zero}
    tree = set()
    queue = [root]
    while queue:
        x = queue.pop(0)
        for idx, y in adj.get(x, ()):
            if y in pot or idx in tree:
                continue
            u, v, c = edges[idx]
            step = c if (x, y) == (u, v) else tuple(-a for a in c)
            pot[y] = tuple(a + b for a, b in zip(pot[x], step))
            tree.add(idx)
            queue.append(y)
    vals = []
    for idx, (u, v, c) in enumerate(edges):
        if idx in tree:
            continue
        vals.append(tuple(a + pu - pv for a, pu, pv in zip(c, pot[u], pot[v])))
    return vals


def _components(edges, verts):
    comp_of = {v: None for v in verts}
    comps = []
    for start in sorted(verts):
        if comp_of[start] is not None:
            continue
        group_id = len(comps)
        stack = [start]
        comp_of[start] = group_id
        members = {start}
        while stack:
            x = stack.pop()
            for (u, v, c) in edges:
                for a, b in ((u, v), (v, u)):
                    if a == x and comp_of[b] is None:
                        comp_of[b] = group_id
                        members.add(b)
                        stack.append(b)
        comps.append(members)
    return comps


def family_bound(family, n, r, c0, c1, c2):
    if family == "ross":
        return 2 * n - 3 * c0 - 2 * (c1 + c2)
    if family == "cone":
        return 2 * n - 3 * c0 - c1 - c2
    if family == "cylinder":
        return 2 * n + r - 3 * c0 - 2 * (c1 + c2)
    if family == "colored":
        return 2 * n + max(2 * r - 1, 0) - 3 * c0 - 2 * (c1 + c2)
    raise ValueError(family)


def colored_subset_counts(group, sub):
    """(n', r, c0, c1, c2) of one edge subset, all recomputed locally."""
    verts = {x for (u, v, c) in sub for x in (u, v)}
    comps = _components(sub, verts)
    ranks = []
    all_vals = []
    for members in comps:
        inside = [e for e in sub if e[0] in members]
        vals = _cycle_values(group, inside, members)
        all_vals.extend(vals)
        ranks.append(span_rank(group, vals))
    c0 = ranks.count(0)
    c1 = ranks.count(1)
    c2 = ranks.count(2)
    return len(verts), span_rank(group, all_vals), c0, c1, c2


def colored_verdict(g, family):
    """(sparse, tight) for a package ColoredGraph, by checking every
    nonempty edge subset.  Only raw data is read from g; every count is
    recomputed here from scratch."""
    group = describe_group(g.spec)
    raw = [(e.tail, e.head, tuple(e.color.coords)) for e in g.edges]
    m = len(raw)
    sparse = True
    for mask in range(1, 1 << m):
        sub = [raw[i] for i in range(m) if mask >> i & 1]
        n, r, c0, c1, c2 = colored_subset_counts(group, sub)
        if len(sub) > family_bound(family, n, r, c0, c1, c2):
            sparse = False
            break
    if not sparse:
        return False, False
    if m == 0:
        n, r, c0, c1, c2 = 0, 0, 0, 0, 0
    else:
        n, r, c0, c1, c2 = colored_subset_counts(group, raw)
    isolated = len(set(g.vertices)
                   - {x for (u, v, c) in raw for x in (u, v)})
    n += isolated
    c0 += isolated
    tight = (m == family_bound(family, n, r, c0, c1, c2))
    return True, tight
