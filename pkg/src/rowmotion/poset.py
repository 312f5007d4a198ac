"""Finite posets given by cover relations.

Elements are dense integer indices ``0..n-1`` with a display-name table.
Relations supplied to the constructor may be any strict order relations;
they are transitively closed, checked for cycles, and reduced to the
cover relation.  Instances are immutable after construction and safe to
share between concurrent tasks; the maximal-chain index is computed
lazily on first use and cached.
"""

from __future__ import annotations

import random
from .errors import ChainBudgetExceeded, CycleDetected, DanglingElement

DEFAULT_CHAIN_BUDGET = 10**6


class Poset:
    """An immutable finite poset.

    Attributes:
        n: element count.
        element_names: display string per element.
        covers: frozenset of pairs ``(u, v)`` with u covered by v.
        up_adjacency / down_adjacency: per-element sorted cover lists.
        default_linear_extension: the lexicographically smallest
            order-preserving permutation of ``0..n-1``.
        rank: per-element rank list, or None when the poset is ungraded.
    """

    def __init__(self, n, relations, element_names=None,
                 chain_budget=DEFAULT_CHAIN_BUDGET):
        if n < 0:
            raise ValueError("element count must be non-negative")
        self.n = n
        if element_names is None:
            element_names = [str(i) for i in range(n)]
        if len(element_names) != n:
            raise ValueError("need exactly one name per element")
        self.element_names = tuple(element_names)
        self.chain_budget = chain_budget

        for (u, v) in relations:
            if not (0 <= u < n and 0 <= v < n):
                raise DanglingElement(f"relation ({u},{v}) references a missing element")

        lt = [[False] * n for _ in range(n)]
        for (u, v) in relations:
            if u == v:
                raise CycleDetected(f"element {u} declared below itself")
            lt[u][v] = True
        # Warshall closure; n is desk-scale so cubic cost is irrelevant.
        for k in range(n):
            ltk = lt[k]
            for i in range(n):
                if lt[i][k]:
                    lti = lt[i]
                    for j in range(n):
                        if ltk[j]:
                            lti[j] = True
        for i in range(n):
            if lt[i][i]:
                raise CycleDetected(f"element {i} lies on a directed cycle")
        self._lt = tuple(tuple(row) for row in lt)

        covers = set()
        for u in range(n):
            for v in range(n):
                if lt[u][v] and not any(lt[u][w] and lt[w][v] for w in range(n)):
                    covers.add((u, v))
        self.covers = frozenset(covers)
        up = [[] for _ in range(n)]
        down = [[] for _ in range(n)]
        for (u, v) in sorted(covers):
            up[u].append(v)
            down[v].append(u)
        self.up_adjacency = tuple(tuple(sorted(s)) for s in up)
        self.down_adjacency = tuple(tuple(sorted(s)) for s in down)

        self.default_linear_extension = self._lex_first_extension()
        self.rank = self._compute_rank()
        self._chains = None
        self._chains_through = None

    # -- order queries ------------------------------------------------

    def less(self, u, v):
        """True when u < v strictly."""
        return self._lt[u][v]

    def leq(self, u, v):
        return u == v or self._lt[u][v]

    def incomparable(self, u, v):
        return u != v and not self._lt[u][v] and not self._lt[v][u]

    def minimal_elements(self):
        return tuple(v for v in range(self.n) if not self.down_adjacency[v])

    def maximal_elements(self):
        return tuple(v for v in range(self.n) if not self.up_adjacency[v])

    def up_set(self, v):
        """All x with x >= v."""
        return frozenset(x for x in range(self.n) if self.leq(v, x))

    def down_set(self, v):
        """All x with x <= v."""
        return frozenset(x for x in range(self.n) if self.leq(x, v))

    def strict_down_set(self, v):
        return frozenset(x for x in range(self.n) if self._lt[x][v])

    @property
    def is_graded(self):
        return self.rank is not None

    @property
    def top_rank(self):
        if self.rank is None:
            return None
        return max(self.rank, default=0)

    def rank_elements(self, i):
        if self.rank is None:
            return ()
        return tuple(v for v in range(self.n) if self.rank[v] == i)

    # -- construction helpers ------------------------------------------

    def _lex_first_extension(self):
        indeg = [len(self.down_adjacency[v]) for v in range(self.n)]
        ready = sorted(v for v in range(self.n) if indeg[v] == 0)
        out = []
        while ready:
            v = ready.pop(0)
            out.append(v)
            changed = False
            for w in self.up_adjacency[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
                    changed = True
            if changed:
                ready.sort()
        return tuple(out)

    def _compute_rank(self):
        rank = [None] * self.n
        for v in self.default_linear_extension:
            if not self.down_adjacency[v]:
                rank[v] = 0
                continue
            lower = {rank[u] for u in self.down_adjacency[v]}
            if len(lower) != 1:
                return None
            rank[v] = lower.pop() + 1
        tops = {rank[v] for v in self.maximal_elements()}
        if len(tops) > 1:
            return None
        return tuple(rank)

    # -- linear extensions ---------------------------------------------

    def linear_extensions(self, limit):
        """The lexicographically first ``limit`` linear extensions."""
        if limit < 1:
            raise ValueError("limit must be positive")
        n = self.n
        out = []
        indeg = [len(self.down_adjacency[v]) for v in range(n)]
        prefix = []
        used = [False] * n

        def backtrack():
            if len(prefix) == n:
                out.append(tuple(prefix))
                return
            for v in range(n):
                if used[v] or indeg[v] != 0:
                    continue
                used[v] = True
                prefix.append(v)
                for w in self.up_adjacency[v]:
                    indeg[w] -= 1
                backtrack()
                for w in self.up_adjacency[v]:
                    indeg[w] += 1
                prefix.pop()
                used[v] = False
                if len(out) >= limit:
                    return

        backtrack()
        return out

    def count_linear_extensions(self):
        """Brute-force count; intended for desk-scale posets only."""
        return len(self.linear_extensions(limit=10**9))

    # -- maximal chains --------------------------------------------------

    def maximal_chains(self):
        """All maximal chains, bottom-to-top, as tuples of elements."""
        if self._chains is None:
            chains = []
            budget = self.chain_budget

            def extend(chain, v):
                ups = self.up_adjacency[v]
                if not ups:
                    if len(chains) >= budget:
                        raise ChainBudgetExceeded(
                            f"more than {budget} maximal chains")
                    chains.append(tuple(chain))
                    return
                for w in ups:
                    chain.append(w)
                    extend(chain, w)
                    chain.pop()

            for v in self.minimal_elements():
                extend([v], v)
            self._chains = tuple(chains)
        return self._chains

    def chains_through(self, v):
        """Maximal chains containing v, paired with v's position in each."""
        if self._chains_through is None:
            through = [[] for _ in range(self.n)]
            for chain in self.maximal_chains():
                for pos, x in enumerate(chain):
                    through[x].append((chain, pos))
            self._chains_through = tuple(tuple(t) for t in through)
        return self._chains_through[v]

    # -- serialization ----------------------------------------------------

    def serialize(self):
        lines = [f"# poset on {self.n} elements", str(self.n)]
        for (u, v) in sorted(self.covers):
            lines.append(f"{u}<{v}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Poset(n={self.n}, covers={len(self.covers)})"


# -- builders ------------------------------------------------------------


def chain_product(a, b, chain_budget=DEFAULT_CHAIN_BUDGET):
    """The product of chains [a] x [b].

    Elements (i, j) with 1 <= i <= a, 1 <= j <= b, indexed column by
    column so the identity permutation is the lexicographically first
    linear extension: (1,1), (2,1), ..., (a,1), (1,2), ...
    Graded with rank(i, j) = i + j - 2.
    """
    if a < 1 or b < 1:
        raise ValueError("chain lengths must be positive")
    index = {}
    names = []
    for j in range(1, b + 1):
        for i in range(1, a + 1):
            index[(i, j)] = len(names)
            names.append(f"({i},{j})")
    relations = []
    for (i, j), k in index.items():
        if i + 1 <= a:
            relations.append((k, index[(i + 1, j)]))
        if j + 1 <= b:
            relations.append((k, index[(i, j + 1)]))
    return Poset(a * b, relations, names, chain_budget=chain_budget)


def chain_product_index(a, b):
    """Coordinate -> index map matching :func:`chain_product`."""
    index = {}
    k = 0
    for j in range(1, b + 1):
        for i in range(1, a + 1):
            index[(i, j)] = k
            k += 1
    return index


def root_poset_a(m, chain_budget=DEFAULT_CHAIN_BUDGET):
    """The positive root poset of type A_m.

    Elements are the intervals [i, j] with 1 <= i <= j <= m, listed rank
    by rank (rank = j - i), with covers [i,j] < [i,j+1] and [i,j] < [i-1,j].
    """
    if m < 1:
        raise ValueError("m must be positive")
    index = {}
    names = []
    for r in range(m):
        for i in range(1, m - r + 1):
            j = i + r
            index[(i, j)] = len(names)
            names.append(f"[{i},{j}]")
    relations = []
    for (i, j), k in index.items():
        if j + 1 <= m:
            relations.append((k, index[(i, j + 1)]))
        if i - 1 >= 1:
            relations.append((k, index[(i - 1, j)]))
    return Poset(len(names), relations, names, chain_budget=chain_budget)


def root_poset_a_index(m):
    """Interval -> index map matching :func:`root_poset_a`."""
    index = {}
    k = 0
    for r in range(m):
        for i in range(1, m - r + 1):
            index[(i, i + r)] = k
            k += 1
    return index


def parse_poset(text, chain_budget=DEFAULT_CHAIN_BUDGET):
    """Parse the poset text format.

    First non-comment line: element count n.  Subsequent lines "i<j"
    declare relations between 0-based indices (redundant relations are
    reduced away, not rejected).  Lines starting with '#' are comments.
    """
    n = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ValueError(f"line {lineno}: expected element count, got {line!r}")
            if n < 0:
                raise ValueError(f"line {lineno}: element count must be non-negative")
            continue
        if "<" not in line:
            raise ValueError(f"line {lineno}: expected 'i<j', got {line!r}")
        left, _, right = line.partition("<")
        try:
            u, v = int(left), int(right)
        except ValueError:
            raise ValueError(f"line {lineno}: expected integer indices, got {line!r}")
        relations.append((u, v))
    if n is None:
        raise ValueError("missing element count line")
    return Poset(n, relations, chain_budget=chain_budget)


def random_poset(n, seed, density=0.35, chain_budget=DEFAULT_CHAIN_BUDGET):
    """A pseudo-random poset on n elements, deterministic in the seed.

    Relations i < j are proposed on index-increasing pairs with the given
    density and reduced to covers, so the identity is always a linear
    extension.
    """
    rng = random.Random(seed)
    relations = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                relations.append((i, j))
    return Poset(n, relations, chain_budget=chain_budget)


def random_graded_poset(seed, max_rank=3, max_width=3, chain_budget=DEFAULT_CHAIN_BUDGET):
    """A pseudo-random graded poset: ranked levels with covers only
    between adjacent ranks, every non-top element covered and every
    non-bottom element covering something."""
    rng = random.Random(seed)
    r = rng.randint(1, max_rank)
    sizes = [rng.randint(1, max_width) for _ in range(r + 1)]
    offsets = []
    total = 0
    for s in sizes:
        offsets.append(total)
        total += s
    relations = []
    for i in range(r):
        lo = [offsets[i] + k for k in range(sizes[i])]
        hi = [offsets[i + 1] + k for k in range(sizes[i + 1])]
        edges = set()
        for u in lo:
            edges.add((u, rng.choice(hi)))
        for v in hi:
            edges.add((rng.choice(lo), v))
        for u in lo:
            for v in hi:
                if rng.random() < 0.3:
                    edges.add((u, v))
        relations.extend(sorted(edges))
    return Poset(total, relations, chain_budget=chain_budget)
