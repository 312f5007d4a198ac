"""Piecewise-linear toggles and transfer maps on exact-rational labelings.

Labelings are tuples of :class:`fractions.Fraction`, one value per poset
element.  Maps are only applied inside their defining polytopes; a
labeling outside the domain raises :class:`DomainViolation` rather than
being clamped.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DomainViolation

ZERO = Fraction(0)
ONE = Fraction(1)


def as_labeling(p, values):
    vals = tuple(Fraction(v) for v in values)
    if len(vals) != p.n:
        raise ValueError(f"expected {p.n} values, got {len(vals)}")
    return vals


def indicator(p, members):
    return tuple(ONE if v in members else ZERO for v in range(p.n))


# -- polytope membership -----------------------------------------------------


def in_unit_cube(f):
    return all(ZERO <= x <= ONE for x in f)


def in_order_polytope(p, f):
    """Order-preserving labelings into [0, 1]."""
    if not in_unit_cube(f):
        return False
    return all(f[u] <= f[v] for (u, v) in p.covers)


def in_order_reversing(p, f):
    """Order-reversing labelings into [0, 1]."""
    if not in_unit_cube(f):
        return False
    return all(f[u] >= f[v] for (u, v) in p.covers)


def in_chain_polytope(p, f):
    """Non-negative labelings whose every maximal-chain sum is at most 1."""
    if any(x < ZERO for x in f):
        return False
    return all(sum(f[v] for v in chain) <= ONE for chain in p.maximal_chains())


def _require(p, f, predicate, name):
    if not predicate(p, f):
        raise DomainViolation(f"labeling is outside the {name}")


# -- toggles -----------------------------------------------------------------


def pl_order_toggle(p, v, f):
    """Reflect f(v) inside the interval allowed by its neighbours.

    Boundary values 0 below the minimal elements and 1 above the maximal
    elements.  An involution on the order polytope.
    """
    _require(p, f, in_order_polytope, "order polytope")
    lower = max((f[u] for u in p.down_adjacency[v]), default=ZERO)
    upper = min((f[w] for w in p.up_adjacency[v]), default=ONE)
    new = lower + upper - f[v]
    return f[:v] + (new,) + f[v + 1:]


def pl_antichain_toggle(p, v, g):
    """Chain polytope toggle: 1 minus the best chain sum through v."""
    _require(p, g, in_chain_polytope, "chain polytope")
    best = max(sum(g[x] for x in chain) for (chain, _) in p.chains_through(v))
    new = ONE - best
    return g[:v] + (new,) + g[v + 1:]


# -- transfer maps -----------------------------------------------------------


def pl_complement(p, f):
    return tuple(ONE - x for x in f)


def pl_down_transfer(p, f):
    """f(x) minus the best lower-cover value; order polytope -> chain polytope."""
    _require(p, f, in_order_polytope, "order polytope")
    return tuple(f[x] - max((f[u] for u in p.down_adjacency[x]), default=ZERO)
                 for x in range(p.n))


def pl_up_transfer(p, f):
    """f(x) minus the best upper-cover value; order-reversing -> chain polytope."""
    _require(p, f, in_order_reversing, "order-reversing polytope")
    return tuple(f[x] - max((f[w] for w in p.up_adjacency[x]), default=ZERO)
                 for x in range(p.n))


def pl_inv_down_transfer(p, f):
    """Best chain sum from the bottom; chain polytope -> order polytope."""
    _require(p, f, in_chain_polytope, "chain polytope")
    out = [None] * p.n
    for x in p.default_linear_extension:
        out[x] = f[x] + max((out[u] for u in p.down_adjacency[x]), default=ZERO)
    return tuple(out)


def pl_inv_up_transfer(p, f):
    """Best chain sum towards the top; chain polytope -> order-reversing."""
    _require(p, f, in_chain_polytope, "chain polytope")
    out = [None] * p.n
    for x in reversed(p.default_linear_extension):
        out[x] = f[x] + max((out[w] for w in p.up_adjacency[x]), default=ZERO)
    return tuple(out)


_TRANSFERS = {
    "complement": pl_complement,
    "down": pl_down_transfer,
    "up": pl_up_transfer,
    "inv_down": pl_inv_down_transfer,
    "inv_up": pl_inv_up_transfer,
}


def pl_transfer(p, op, f):
    """Dispatch one of the five transfer maps by name."""
    try:
        fn = _TRANSFERS[op]
    except KeyError:
        raise ValueError(f"unknown transfer map {op!r}; choose from {sorted(_TRANSFERS)}")
    return fn(p, f)


# -- rowmotion ---------------------------------------------------------------


def pl_order_rowmotion(p, f):
    """Toggle product over a linear extension, applied top-down."""
    for v in reversed(p.default_linear_extension):
        f = pl_order_toggle(p, v, f)
    return f


def pl_antichain_rowmotion(p, g):
    """Toggle product over a linear extension, applied bottom-up."""
    for v in p.default_linear_extension:
        g = pl_antichain_toggle(p, v, g)
    return g


# -- random points ------------------------------------------------------------


def _random_fraction(rng, denominator_bound=64):
    den = rng.randint(1, denominator_bound)
    num = rng.randint(0, den)
    return Fraction(num, den)


def random_chain_polytope_point(p, seed, denominator_bound=64):
    """A generic rational point of the chain polytope (not uniform)."""
    rng = random.Random(seed)
    raw = [_random_fraction(rng, denominator_bound) for _ in range(p.n)]
    worst = max((sum(raw[v] for v in chain) for chain in p.maximal_chains()),
                default=ZERO)
    if worst > ONE:
        scale = Fraction(rng.randint(1, denominator_bound), denominator_bound + 1) / worst
        raw = [x * scale for x in raw]
    return tuple(raw)


def random_order_polytope_point(p, seed, denominator_bound=64):
    """A generic rational point of the order polytope (not uniform)."""
    rng = random.Random(seed)
    raw = [_random_fraction(rng, denominator_bound) for _ in range(p.n)]
    out = [None] * p.n
    for x in p.default_linear_extension:
        out[x] = max([raw[x]] + [out[u] for u in p.down_adjacency[x]])
    return tuple(out)


def random_order_reversing_point(p, seed, denominator_bound=64):
    rng = random.Random(seed)
    raw = [_random_fraction(rng, denominator_bound) for _ in range(p.n)]
    out = [None] * p.n
    for x in reversed(p.default_linear_extension):
        out[x] = max([raw[x]] + [out[w] for w in p.up_adjacency[x]])
    return tuple(out)
