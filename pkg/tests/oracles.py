"""Independent oracles used by the test suite.

Everything here is implemented from first principles, without calling the
library code under test: naive enumeration by subset filtering, hole
detection via the Euler characteristic, induced-cycle search by subset
inspection, alternating cycle search by DFS over segments, dense linear
algebra for degree-bounded ideal membership, and textbook monomial-order
comparators.
"""

from fractions import Fraction
from itertools import combinations

STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


# ---------------------------------------------------------------------------
# polyomino enumeration and simplicity

def subsets_connected(cells):
    cells = set(cells)
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in STEPS:
            nb = (x + dx, y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def naive_fixed_polyominoes(n):
    """All fixed n-cell polyominoes by filtering n-subsets of an n x n box."""
    box = [(x, y) for x in range(n) for y in range(n)]
    found = set()
    for sub in combinations(box, n):
        if min(x for x, _ in sub) or min(y for _, y in sub):
            continue
        if subsets_connected(sub):
            found.add(tuple(sorted(sub)))
    return sorted(found)


def euler_is_simple(cells):
    """chi(closed cell complex) = 1 - holes, so simple iff V - E + F == 1."""
    verts, edges = set(), set()
    for x, y in cells:
        a, b, c, d = (x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)
        verts.update((a, b, c, d))
        edges.update({(a, b), (a, c), (b, d), (c, d)})
    return len(verts) - len(edges) + len(cells) == 1


def polyomino_edges(cells):
    edges = set()
    for x, y in cells:
        a, b, c, d = (x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)
        edges.update({(a, b), (a, c), (b, d), (c, d)})
    return edges


def polyomino_vertices(cells):
    verts = set()
    for x, y in cells:
        verts.update(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)))
    return verts


# ---------------------------------------------------------------------------
# chordless cycles by subset inspection

def brute_chordless_cycles(nvertices, edge_set, min_len, max_len):
    """Vertex sets of induced cycles: every vertex of the subset has induced
    degree 2 and the subset is connected."""
    adj = {v: set() for v in range(nvertices)}
    for a, b in edge_set:
        adj[a].add(b)
        adj[b].add(a)
    found = []
    for k in range(max(min_len, 3), max_len + 1):
        for sub in combinations(range(nvertices), k):
            ss = set(sub)
            if any(len(adj[v] & ss) != 2 for v in sub):
                continue
            # connected check within the subset
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                v = stack.pop()
                for w in adj[v] & ss:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == k:
                found.append(frozenset(sub))
    return found


# ---------------------------------------------------------------------------
# alternating cycles in a polyomino by DFS over axis segments

def _segment_ok(a, b, edges):
    (x1, y1), (x2, y2) = a, b
    if x1 == x2 and y1 != y2:
        lo, hi = sorted((y1, y2))
        return all(((x1, t), (x1, t + 1)) in edges for t in range(lo, hi))
    if y1 == y2 and x1 != x2:
        lo, hi = sorted((x1, x2))
        return all(((t, y1), (t + 1, y1)) in edges for t in range(lo, hi))
    return False


def alternating_cycles(cells, max_vertices=8):
    """All cycles of grid vertices with alternating horizontal/vertical
    edge-interval segments, canonicalized up to rotation and reflection."""
    edges = polyomino_edges(cells)
    verts = sorted(polyomino_vertices(cells))

    def moves(v, want):
        vx, vy = v
        for w in verts:
            if w == v:
                continue
            horizontal = w[1] == vy and w[0] != vx
            vertical = w[0] == vx and w[1] != vy
            if want == "h" and not horizontal:
                continue
            if want == "v" and not vertical:
                continue
            if want is None and not (horizontal or vertical):
                continue
            if _segment_ok(v, w, edges):
                yield w, ("h" if horizontal else "v")

    found = set()

    def canonical(path):
        forms = []
        p = list(path)
        for _ in range(2):
            for k in range(len(p)):
                forms.append(tuple(p[k:] + p[:k]))
            p = list(reversed(p))
        return min(forms)

    def dfs(path, first_dir, last_dir):
        v = path[-1]
        for w, d in moves(v, "h" if last_dir == "v" else "v" if last_dir == "h" else None):
            if w == path[0]:
                # closing segment must alternate with both neighbors
                if len(path) >= 4 and len(path) % 2 == 0 and d != first_dir:
                    found.add(canonical(path))
                continue
            if w in path or len(path) == max_vertices:
                continue
            dfs(path + [w], first_dir if first_dir else d, d)

    for v0 in verts:
        for w, d in moves(v0, None):
            if w > v0:
                dfs([v0, w], d, d)
    return sorted(found)


# ---------------------------------------------------------------------------
# dense degree-bounded membership for homogeneous binomial ideals

def monomials_of_degree(nvars, deg):
    if nvars == 1:
        yield (deg,)
        return
    for first in range(deg + 1):
        for rest in monomials_of_degree(nvars - 1, deg - first):
            yield (first,) + rest


def dense_member(f_plus, f_minus, gens, nvars):
    """Is the homogeneous binomial f in the ideal generated by homogeneous
    binomial gens? Exact for homogeneous ideals: degree-d membership only
    needs monomial multiples of degree exactly d."""
    deg = sum(f_plus)
    assert deg == sum(f_minus), "oracle needs homogeneous input"
    vectors = []
    for g_plus, g_minus in gens:
        gdeg = sum(g_plus)
        if gdeg > deg:
            continue
        for m in monomials_of_degree(nvars, deg - gdeg):
            vec = {}
            mp = tuple(a + b for a, b in zip(m, g_plus))
            mm = tuple(a + b for a, b in zip(m, g_minus))
            vec[mp] = vec.get(mp, Fraction(0)) + 1
            vec[mm] = vec.get(mm, Fraction(0)) - 1
            vec = {k: v for k, v in vec.items() if v}
            if vec:
                vectors.append(vec)
    target = {}
    target[f_plus] = target.get(f_plus, Fraction(0)) + 1
    target[f_minus] = target.get(f_minus, Fraction(0)) - 1
    target = {k: v for k, v in target.items() if v}

    pivots = {}

    def reduce_row(row):
        row = dict(row)
        while row:
            m = max(row)
            if m not in pivots:
                return m, row
            c = row[m]
            for k, v in pivots[m].items():
                nv = row.get(k, Fraction(0)) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return None, {}

    for vec in vectors:
        m, row = reduce_row(vec)
        if m is not None:
            inv = Fraction(1) / row[m]
            pivots[m] = {k: v * inv for k, v in row.items()}
    m, _ = reduce_row(target)
    return m is None


# ---------------------------------------------------------------------------
# textbook order comparators

def direct_lex(a, b, ranking):
    for i in ranking:
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


def direct_deglex(a, b, ranking):
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    return direct_lex(a, b, ranking)


def direct_degrevlex(a, b, ranking):
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for i in reversed(ranking):
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
    return 0
