"""Pure-Python kernel for the binomial Groebner engine.

Same contract as the compiled kernel in ``_speedups``: monomials are
tuples of non-negative ints (dense exponent vectors), an Order holds the
weight-matrix rows of a monomial order, and a Basis holds oriented
rewrite rules lead -> tail with lead > tail. ``normal_form`` rewrites a
monomial with the first divisible lead in append order, restarting the
scan after every hit, until no lead divides. Both kernels must produce
bit-identical results; the engine picks whichever is available.
"""

BACKEND = "python"


class Order:
    __slots__ = ("rows", "nvars")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.nvars = len(self.rows[0]) if self.rows else 0


def compare(order, a, b):
    """Three-way compare of exponent tuples under the weight-matrix order."""
    if a == b:
        return 0
    for row in order.rows:
        s = 0
        for w, x, y in zip(row, a, b):
            if w:
                s += w * (x - y)
        if s > 0:
            return 1
        if s < 0:
            return -1
    return 0


class Basis:
    __slots__ = ("nvars", "leads", "tails")

    def __init__(self, nvars):
        self.nvars = nvars
        self.leads = []
        self.tails = []

    def __len__(self):
        return len(self.leads)

    def append(self, lead, tail):
        self.leads.append(tuple(lead))
        self.tails.append(tuple(tail))

    def normal_form(self, mono, budget):
        """Fully rewrite ``mono``; returns None if ``budget`` steps were not enough."""
        leads = self.leads
        tails = self.tails
        m = tuple(mono)
        steps = 0
        changed = True
        while changed:
            changed = False
            for i, lead in enumerate(leads):
                ok = True
                for le, me in zip(lead, m):
                    if le > me:
                        ok = False
                        break
                if ok:
                    if steps >= budget:
                        return None
                    steps += 1
                    tail = tails[i]
                    m = tuple(me - le + te for me, le, te in zip(m, lead, tail))
                    changed = True
                    break
        return m
