"""Rowmotion on order ideals, filters, and antichains as plain sets.

A :class:`SubsetState` is a frozen set of element indices tagged with a
kind; kinds are enforced at operation boundaries because the complement
map swaps them.  All operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import CompositionMismatch, KindMismatch, OrbitBudgetExceeded

DEFAULT_ORBIT_BUDGET = 10**7


class Kind(str, Enum):
    IDEAL = "ideal"
    FILTER = "filter"
    ANTICHAIN = "antichain"
    RAW = "raw"


@dataclass(frozen=True)
class SubsetState:
    members: frozenset
    kind: Kind

    def __contains__(self, v):
        return v in self.members

    def __len__(self):
        return len(self.members)


def is_ideal(p, members):
    return all(u in members for v in members for u in p.down_adjacency[v])


def is_filter(p, members):
    return all(w in members for v in members for w in p.up_adjacency[v])


def is_antichain(p, members):
    ms = sorted(members)
    return all(p.incomparable(u, v) for i, u in enumerate(ms) for v in ms[i + 1:])


_VALIDATORS = {Kind.IDEAL: is_ideal, Kind.FILTER: is_filter, Kind.ANTICHAIN: is_antichain}


def make_state(p, members, kind):
    members = frozenset(members)
    kind = Kind(kind)
    check = _VALIDATORS.get(kind)
    if check is not None and not check(p, members):
        raise KindMismatch(f"{sorted(members)} is not a valid {kind.value}")
    return SubsetState(members, kind)


def ideal(p, members):
    return make_state(p, members, Kind.IDEAL)


def filter_state(p, members):
    return make_state(p, members, Kind.FILTER)


def antichain(p, members):
    return make_state(p, members, Kind.ANTICHAIN)


def _require(s, kind):
    if s.kind != kind:
        raise KindMismatch(f"expected a {kind.value}, got a {s.kind.value}")


# -- transfer maps ---------------------------------------------------------


def complement(p, s):
    """Complement within P; swaps the ideal and filter kinds."""
    members = frozenset(range(p.n)) - s.members
    if s.kind == Kind.IDEAL:
        kind = Kind.FILTER
    elif s.kind == Kind.FILTER:
        kind = Kind.IDEAL
    else:
        kind = Kind.RAW
    return SubsetState(members, kind)


def up_transfer(p, s):
    """Maximal elements of an ideal, as an antichain."""
    _require(s, Kind.IDEAL)
    members = frozenset(v for v in s.members
                        if not any(w in s.members for w in p.up_adjacency[v]))
    return SubsetState(members, Kind.ANTICHAIN)


def inverse_up_transfer(p, s):
    """Downward saturation of an antichain, as an ideal."""
    _require(s, Kind.ANTICHAIN)
    members = frozenset(x for x in range(p.n)
                        if any(p.leq(x, y) for y in s.members))
    return SubsetState(members, Kind.IDEAL)


def down_transfer(p, s):
    """Minimal elements of a filter, as an antichain."""
    _require(s, Kind.FILTER)
    members = frozenset(v for v in s.members
                        if not any(u in s.members for u in p.down_adjacency[v]))
    return SubsetState(members, Kind.ANTICHAIN)


def inverse_down_transfer(p, s):
    """Upward saturation of an antichain, as a filter."""
    _require(s, Kind.ANTICHAIN)
    members = frozenset(x for x in range(p.n)
                        if any(p.leq(y, x) for y in s.members))
    return SubsetState(members, Kind.FILTER)


# -- toggles ---------------------------------------------------------------


def toggle_ideal(p, v, s):
    """Add or remove v when the result is still an ideal, else fix."""
    _require(s, Kind.IDEAL)
    m = s.members
    if v not in m:
        if all(u in m for u in p.down_adjacency[v]):
            return SubsetState(m | {v}, Kind.IDEAL)
    else:
        if not any(w in m for w in p.up_adjacency[v]):
            return SubsetState(m - {v}, Kind.IDEAL)
    return s


def toggle_filter(p, v, s):
    """Add or remove v when the result is still a filter, else fix."""
    _require(s, Kind.FILTER)
    m = s.members
    if v not in m:
        if all(w in m for w in p.up_adjacency[v]):
            return SubsetState(m | {v}, Kind.FILTER)
    else:
        if not any(u in m for u in p.down_adjacency[v]):
            return SubsetState(m - {v}, Kind.FILTER)
    return s


def toggle_antichain(p, v, s):
    """Remove v if present; add it when it stays an antichain; else fix."""
    _require(s, Kind.ANTICHAIN)
    m = s.members
    if v in m:
        return SubsetState(m - {v}, Kind.ANTICHAIN)
    if all(p.incomparable(v, u) for u in m):
        return SubsetState(m | {v}, Kind.ANTICHAIN)
    return s


# -- rowmotion -------------------------------------------------------------


def rowmotion(p, kind, s):
    """Rowmotion on ideals, antichains, or filters.

    Computes both the transfer-map composition and the toggle product
    along the default linear extension and insists they agree.
    """
    kind = Kind(kind)
    _require(s, kind)
    ext = p.default_linear_extension
    if kind == Kind.IDEAL:
        via_transfer = inverse_up_transfer(p, down_transfer(p, complement(p, s)))
        via_toggles = s
        for v in reversed(ext):
            via_toggles = toggle_ideal(p, v, via_toggles)
    elif kind == Kind.ANTICHAIN:
        via_transfer = down_transfer(p, complement(p, inverse_up_transfer(p, s)))
        via_toggles = s
        for v in ext:
            via_toggles = toggle_antichain(p, v, via_toggles)
    elif kind == Kind.FILTER:
        via_transfer = complement(p, inverse_up_transfer(p, down_transfer(p, s)))
        via_toggles = s
        for v in reversed(ext):
            via_toggles = toggle_filter(p, v, via_toggles)
    else:
        raise KindMismatch("rowmotion is defined on ideals, antichains, and filters")
    if via_transfer != via_toggles:
        raise CompositionMismatch(
            f"toggle product {sorted(via_toggles.members)} != "
            f"transfer composition {sorted(via_transfer.members)}")
    return via_transfer


def rowmotion_ideal(p, s):
    return rowmotion(p, Kind.IDEAL, s)


def rowmotion_antichain(p, s):
    return rowmotion(p, Kind.ANTICHAIN, s)


def rowmotion_filter(p, s):
    return rowmotion(p, Kind.FILTER, s)


# -- state-space enumeration and orbits -------------------------------------


def _all_states(p, validator, kind):
    if p.n > 24:
        raise OrbitBudgetExceeded("state-space enumeration beyond desk scale")
    out = []
    for mask in range(1 << p.n):
        members = frozenset(v for v in range(p.n) if mask >> v & 1)
        if validator(p, members):
            out.append(SubsetState(members, kind))
    return out


def all_ideals(p):
    return _all_states(p, is_ideal, Kind.IDEAL)


def all_filters(p):
    return _all_states(p, is_filter, Kind.FILTER)


def all_antichains(p):
    return _all_states(p, is_antichain, Kind.ANTICHAIN)


def orbit(p, step, start, budget=DEFAULT_ORBIT_BUDGET):
    """The forward orbit of ``start`` under ``step`` up to first return."""
    seen = {start}
    out = [start]
    current = start
    while True:
        current = step(p, current)
        if current == start:
            return out
        if current in seen:
            raise CompositionMismatch("orbit re-entered without closing; step is not invertible")
        seen.add(current)
        out.append(current)
        if len(out) > budget:
            raise OrbitBudgetExceeded(f"orbit exceeds {budget} states")


def orbit_partition(p, step, states, budget=DEFAULT_ORBIT_BUDGET):
    """Partition ``states`` into orbits of ``step``."""
    remaining = set(states)
    orbits = []
    for s in states:
        if s not in remaining:
            continue
        o = orbit(p, step, s, budget=budget)
        orbits.append(o)
        remaining -= set(o)
    return orbits


def map_order(p, step, states, budget=DEFAULT_ORBIT_BUDGET):
    """Least t >= 1 with step^t = identity on all given states."""
    order = 1
    for o in orbit_partition(p, step, states, budget=budget):
        order = math.lcm(order, len(o))
    return order


def cardinality(s):
    return Fraction(len(s.members))


def homomesy_average(p, step, start, statistic=cardinality, budget=DEFAULT_ORBIT_BUDGET):
    """Exact orbit average of a statistic under ``step``."""
    o = orbit(p, step, start, budget=budget)
    total = sum((Fraction(statistic(s)) for s in o), Fraction(0))
    return total / len(o)
