"""The generic toggle calculus over an algebra backend.

Every formula is written in its noncommutative order; the commutative
birational realm is obtained purely by backend choice (exact rationals),
the skew-field evaluation model by square rational matrices, and the
piecewise-linear realm by the tropical backend.  No realm gets separate
code.

Composition convention: toggle words are stored and applied in
*application order* (first atom acts first).  The classical notation
``T_{x_1} T_{x_2} ... T_{x_n}`` composes right-to-left, so order
rowmotion applies toggles along a linear extension from the top of the
poset downwards, while antichain rowmotion applies them from the bottom
upwards.

Boundary values are injected inside operations and never stored: the
virtual bottom element carries the multiplicative identity, the virtual
top carries it for the plain transfer maps and the central constant C
for toggles and the complement map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .backends import parallel_sum, random_labeling
from .errors import NotCentral, NotGraded, NotInvertible


@dataclass(frozen=True)
class Labeling:
    """One backend value per poset element."""

    backend_name: str
    values: tuple

    def __getitem__(self, v):
        return self.values[v]

    def replace(self, v, value):
        return Labeling(self.backend_name, self.values[:v] + (value,) + self.values[v + 1:])


class Atom(NamedTuple):
    kind: str  # one of T, E, tau, eps, rank_T, rank_tau
    index: int

    def __str__(self):
        return f"{self.kind}[{self.index}]"


ToggleWord = tuple  # of Atom

ATOM_KINDS = ("T", "E", "tau", "eps", "rank_T", "rank_tau")


class Dynamics:
    """Toggle and transfer dynamics for one poset over one backend."""

    def __init__(self, poset, backend):
        self.poset = poset
        self.backend = backend
        self.extension = poset.default_linear_extension

    # -- labelings ---------------------------------------------------------

    def labeling(self, values):
        values = tuple(values)
        if len(values) != self.poset.n:
            raise ValueError(f"expected {self.poset.n} values")
        return Labeling(self.backend.name, values)

    def random_labeling(self, seed):
        return Labeling(self.backend.name, random_labeling(self.backend, self.poset, seed))

    def equal(self, f, g):
        b = self.backend
        return all(b.equals(x, y) for x, y in zip(f.values, g.values))

    # -- transfer maps -------------------------------------------------------

    def theta(self, f):
        """Complement: pointwise C times the inverse."""
        b = self.backend
        out = []
        for v, x in enumerate(f.values):
            try:
                out.append(b.mul(b.constant_c(), b.invert(x)))
            except NotInvertible as exc:
                raise NotInvertible(context=f"complement at {self._name(v)}") from exc
        return self.labeling(out)

    def down_transfer(self, f):
        """f(x) times the inverted sum of lower-cover values."""
        b = self.backend
        out = []
        for x in range(self.poset.n):
            lower = [f[u] for u in self.poset.down_adjacency[x]]
            den = b.sum(lower) if lower else b.one()
            try:
                out.append(b.mul(f[x], b.invert(den)))
            except NotInvertible as exc:
                raise NotInvertible(context=f"down transfer at {self._name(x)}") from exc
        return self.labeling(out)

    def up_transfer(self, f):
        """Inverted sum of upper-cover values times f(x)."""
        b = self.backend
        out = []
        for x in range(self.poset.n):
            upper = [f[w] for w in self.poset.up_adjacency[x]]
            num = b.sum(upper) if upper else b.one()
            try:
                out.append(b.mul(b.invert(num), f[x]))
            except NotInvertible as exc:
                raise NotInvertible(context=f"up transfer at {self._name(x)}") from exc
        return self.labeling(out)

    def inv_down_transfer(self, f):
        """Sum over saturated chains from the bottom, highest label first."""
        b = self.backend
        out = [None] * self.poset.n
        for x in self.extension:
            lower = [out[u] for u in self.poset.down_adjacency[x]]
            tail = b.sum(lower) if lower else b.one()
            out[x] = b.mul(f[x], tail)
        return self.labeling(out)

    def inv_up_transfer(self, f):
        """Sum over saturated chains towards the top, highest label first."""
        b = self.backend
        out = [None] * self.poset.n
        for x in reversed(self.extension):
            upper = [out[w] for w in self.poset.up_adjacency[x]]
            head = b.sum(upper) if upper else b.one()
            out[x] = b.mul(head, f[x])
        return self.labeling(out)

    # -- order toggles ---------------------------------------------------------

    def _order_toggle_parts(self, f, v):
        b = self.backend
        lower = [f[u] for u in self.poset.down_adjacency[v]]
        upper = [f[w] for w in self.poset.up_adjacency[v]]
        lower_sum = b.sum(lower) if lower else b.one()
        upper_par = parallel_sum(b, upper) if upper else b.constant_c()
        return lower_sum, upper_par

    def order_toggle(self, v, f):
        """Lower-cover sum, inverted value, parallel sum of upper covers."""
        b = self.backend
        try:
            lower_sum, upper_par = self._order_toggle_parts(f, v)
            new = b.mul(b.mul(lower_sum, b.invert(f[v])), upper_par)
        except NotInvertible as exc:
            raise NotInvertible(context=f"order toggle at {self._name(v)}") from exc
        return f.replace(v, new)

    def order_elggot(self, v, f):
        """Inverse of the order toggle (same data, mirrored product)."""
        b = self.backend
        try:
            lower_sum, upper_par = self._order_toggle_parts(f, v)
            new = b.mul(b.mul(upper_par, b.invert(f[v])), lower_sum)
        except NotInvertible as exc:
            raise NotInvertible(context=f"order elggot at {self._name(v)}") from exc
        return f.replace(v, new)

    # -- antichain toggles --------------------------------------------------------

    def _chain_sum(self, g, v, through_value_first):
        """Sum over maximal chains through v of the rotated label product.

        Each chain splits at v; labels below v are multiplied top-down,
        then the labels from the top of the chain down to v.  The toggle
        puts v's own label last, the elggot (through_value_first) first.
        """
        b = self.backend
        terms = []
        for chain, pos in self.poset.chains_through(v):
            cut = pos + 1 if through_value_first else pos
            seq = tuple(reversed(chain[:cut])) + tuple(reversed(chain[cut:]))
            terms.append(b.product(g[x] for x in seq))
        return b.sum(terms)

    def antichain_toggle(self, v, g):
        """C over the rotated chain sum through v."""
        b = self.backend
        try:
            total = self._chain_sum(g, v, through_value_first=False)
            new = b.mul(b.constant_c(), b.invert(total))
        except NotInvertible as exc:
            raise NotInvertible(context=f"antichain toggle at {self._name(v)}") from exc
        return g.replace(v, new)

    def antichain_elggot(self, v, g):
        """Inverse of the antichain toggle (opposite rotation split)."""
        b = self.backend
        try:
            total = self._chain_sum(g, v, through_value_first=True)
            new = b.mul(b.constant_c(), b.invert(total))
        except NotInvertible as exc:
            raise NotInvertible(context=f"antichain elggot at {self._name(v)}") from exc
        return g.replace(v, new)

    # -- rowmotion ----------------------------------------------------------------

    def order_rowmotion(self, f, extension=None):
        """Order toggles along a linear extension, applied top-down."""
        ext = self.extension if extension is None else extension
        for v in reversed(ext):
            f = self.order_toggle(v, f)
        return f

    def antichain_rowmotion(self, g, extension=None):
        """Antichain toggles along a linear extension, applied bottom-up."""
        ext = self.extension if extension is None else extension
        for v in ext:
            g = self.antichain_toggle(v, g)
        return g

    def order_rowmotion_via_transfers(self, f):
        return self.theta(self.inv_up_transfer(self.down_transfer(f)))

    def antichain_rowmotion_via_transfers(self, g):
        return self.down_transfer(self.theta(self.inv_up_transfer(g)))

    # -- toggle words -----------------------------------------------------------

    def apply_word(self, word, f):
        for atom in word:
            f = self._apply_atom(atom, f)
        return f

    def _apply_atom(self, atom, f):
        kind, i = atom
        if kind in ("T", "E", "tau", "eps"):
            if not 0 <= i < self.poset.n:
                raise ValueError(f"atom {atom} references a missing element")
        elif kind in ("rank_T", "rank_tau"):
            self._require_graded()
            if not 0 <= i <= self.poset.top_rank:
                raise ValueError(f"atom {atom} references a missing rank")
        if kind == "T":
            return self.order_toggle(i, f)
        if kind == "E":
            return self.order_elggot(i, f)
        if kind == "tau":
            return self.antichain_toggle(i, f)
        if kind == "eps":
            return self.antichain_elggot(i, f)
        if kind == "rank_T":
            return self.rank_toggle("order", i, f)
        if kind == "rank_tau":
            return self.rank_toggle("antichain", i, f)
        raise ValueError(f"unknown toggle-word atom {atom}")

    def _lower_set_in_extension_order(self, v):
        below = self.poset.strict_down_set(v)
        return tuple(x for x in self.extension if x in below)

    def eta_word(self, v):
        """Order toggles clearing the strict lower set of v, top-down."""
        return self.eta_set_word((v,))

    def eta_set_word(self, elements):
        below = set()
        for v in elements:
            below |= self.poset.strict_down_set(v)
        lower = tuple(x for x in self.extension if x in below)
        return tuple(Atom("T", x) for x in reversed(lower))

    def eta_inverse_word(self, elements):
        below = set()
        for v in elements:
            below |= self.poset.strict_down_set(v)
        lower = tuple(x for x in self.extension if x in below)
        return tuple(Atom("E", x) for x in lower)

    def star_order_toggle_word(self, v):
        """Antichain-toggle word that mimics the order toggle at v."""
        cov = self.poset.down_adjacency[v]
        return (tuple(Atom("tau", u) for u in cov)
                + (Atom("tau", v),)
                + tuple(Atom("eps", u) for u in reversed(cov)))

    def star_order_elggot_word(self, v):
        cov = self.poset.down_adjacency[v]
        return (tuple(Atom("tau", u) for u in cov)
                + (Atom("eps", v),)
                + tuple(Atom("eps", u) for u in reversed(cov)))

    def star_antichain_toggle_word(self, v):
        """Order-toggle word conjugated by eta that mimics the antichain toggle."""
        lower = self._lower_set_in_extension_order(v)
        return (tuple(Atom("E", x) for x in lower)
                + (Atom("T", v),)
                + tuple(Atom("T", x) for x in reversed(lower)))

    def star_antichain_elggot_word(self, v):
        lower = self._lower_set_in_extension_order(v)
        return (tuple(Atom("E", x) for x in lower)
                + (Atom("E", v),)
                + tuple(Atom("T", x) for x in reversed(lower)))

    def star_order_toggle(self, v, g):
        return self.apply_word(self.star_order_toggle_word(v), g)

    def star_order_elggot(self, v, g):
        return self.apply_word(self.star_order_elggot_word(v), g)

    def star_antichain_toggle(self, v, f):
        return self.apply_word(self.star_antichain_toggle_word(v), f)

    def star_antichain_elggot(self, v, f):
        return self.apply_word(self.star_antichain_elggot_word(v), f)

    # -- graded machinery -----------------------------------------------------

    def _require_graded(self):
        if not self.poset.is_graded:
            raise NotGraded("this operation needs a graded poset")

    def rank_toggle(self, kind, i, f):
        """Toggle every element of one rank; they commute pairwise."""
        self._require_graded()
        toggle = {"order": self.order_toggle, "antichain": self.antichain_toggle}[kind]
        for v in self.poset.rank_elements(i):
            f = toggle(v, f)
        return f

    def order_gyration_word(self):
        """Even-rank order toggles first, then odd ranks."""
        self._require_graded()
        r = self.poset.top_rank
        ranks = [i for i in range(r + 1) if i % 2 == 0] + \
                [i for i in range(r + 1) if i % 2 == 1]
        return tuple(Atom("rank_T", i) for i in ranks)

    def antichain_gyration_word(self):
        """Odd-rank antichain toggles bottom-up, then even ranks top-down."""
        self._require_graded()
        r = self.poset.top_rank
        ranks = [i for i in range(r + 1) if i % 2 == 1] + \
                [i for i in range(r, -1, -1) if i % 2 == 0]
        return tuple(Atom("rank_tau", i) for i in ranks)

    def starred_antichain_gyration_word(self):
        """Image of order gyration under the toggle-group isomorphism.

        Commutatively this collapses to :meth:`antichain_gyration_word`
        because the conjugating elggots cancel; over a noncommutative
        backend it does not, and this word is the form that makes the
        gyration diagram commute.
        """
        self._require_graded()
        r = self.poset.top_rank
        ranks = [i for i in range(r + 1) if i % 2 == 0] + \
                [i for i in range(r + 1) if i % 2 == 1]
        word = []
        for i in ranks:
            for v in self.poset.rank_elements(i):
                word.extend(self.star_order_toggle_word(v))
        return tuple(word)

    def gyration(self, kind, f):
        if kind == "order":
            return self.apply_word(self.order_gyration_word(), f)
        if kind == "antichain":
            return self.apply_word(self.antichain_gyration_word(), f)
        if kind == "antichain_starred":
            return self.apply_word(self.starred_antichain_gyration_word(), f)
        raise ValueError("gyration kind must be 'order', 'antichain', or 'antichain_starred'")

    def graded_rescale(self, scalars, g):
        """Multiply every rank-i value by the central scalar a_i."""
        self._require_graded()
        b = self.backend
        scalars = tuple(scalars)
        r = self.poset.top_rank
        if len(scalars) != r + 1:
            raise ValueError(f"need {r + 1} scalars, got {len(scalars)}")
        for i, a in enumerate(scalars):
            if not b.is_central(a):
                raise NotCentral(f"rescaling scalar for rank {i} is not central")
        out = [b.mul(scalars[self.poset.rank[v]], g[v]) for v in range(self.poset.n)]
        return self.labeling(out)

    def _name(self, v):
        return self.poset.element_names[v]


def detect_order(step: Callable, start, equal, max_iter=64):
    """Least k <= max_iter with step^k(start) == start, else None.

    Minimality is inherent: the first return is reported, and no smaller
    exponent matched along the way.
    """
    current = start
    for k in range(1, max_iter + 1):
        current = step(current)
        if equal(current, start):
            return k
    return None
