"""Theorem-to-test registry, randomized identity checks, and orbit scans.

Every identity is evaluated pointwise-exactly on random labelings; exact
arithmetic makes this a sound randomized equality test, so no symbolic
normal forms are needed.  Degenerate sample points (singular matrices,
vanishing sums) are resampled with derived seeds up to a retry budget.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .backends import derive_seed, parse_backend
from .dynamics import Dynamics, detect_order
from .errors import GenericityFailure, NotInvertible
from .poset import chain_product, parse_poset, random_poset, root_poset_a

DEFAULT_POINTS = 20
DEFAULT_MAX_RETRIES = 5
DEFAULT_MAX_ITER = 64


@dataclass(frozen=True)
class CheckSpec:
    theorem: str
    poset_spec: str
    backend_spec: str
    points: int = DEFAULT_POINTS
    seed: int = 0
    max_retries: int = DEFAULT_MAX_RETRIES

    def __post_init__(self):
        if self.points < 1:
            raise ValueError("need at least one sample point")
        if self.theorem not in THEOREMS:
            raise KeyError(f"unknown theorem id {self.theorem!r}; "
                           f"known: {', '.join(sorted(THEOREMS))}")


@dataclass
class OrbitReport:
    """Detected order of a map on one labeling, plus degeneracy bookkeeping."""

    map_id: str
    poset: str
    backend: str
    seed: int
    order: int | None
    iterates: int
    returned_to_start: bool
    minimal: bool
    failures: int = 0  # degenerate starts that were resampled
    statistic_averages: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "map": self.map_id,
            "poset": self.poset,
            "backend": self.backend,
            "seed": self.seed,
            "order": self.order if self.order is not None else "exceeded",
            "iterates": self.iterates,
            "returned_to_start": self.returned_to_start,
            "minimal": self.minimal,
            "failures": self.failures,
            "statistic_averages": {k: str(v) for k, v in self.statistic_averages.items()},
        }
        if self.backend.startswith("matrix:") and self.backend != "matrix:1":
            out["model"] = "generic-matrix evaluation (randomized identity testing, not symbolic)"
        return out


# -- poset spec strings --------------------------------------------------------


def build_poset(spec):
    """Builders behind the CLI poset strings.

    "chain AxB" | "rootA M" | "random N SEED" | a file path in the poset
    text format.
    """
    words = spec.split()
    if words and words[0] == "chain" and len(words) == 2 and "x" in words[1]:
        a, b = words[1].split("x", 1)
        return chain_product(int(a), int(b))
    if words and words[0].lower() == "roota" and len(words) == 2:
        return root_poset_a(int(words[1]))
    if words and words[0] == "random" and len(words) == 3:
        return random_poset(int(words[1]), int(words[2]))
    with open(spec, "r", encoding="utf-8") as fh:
        return parse_poset(fh.read())


# -- theorem registry -----------------------------------------------------------


def _theta_invup(dyn, g):
    return dyn.theta(dyn.inv_up_transfer(g))


def _check_involution(dyn, g, rng):
    if dyn.backend.is_commutative or dyn.backend.is_tropical:
        for v in range(dyn.poset.n):
            if not dyn.equal(dyn.order_toggle(v, dyn.order_toggle(v, g)), g):
                return False
            if not dyn.equal(dyn.antichain_toggle(v, dyn.antichain_toggle(v, g)), g):
                return False
        return True
    # NC toggles are not involutions; the analogue is the inverse pair.
    for v in range(dyn.poset.n):
        if not dyn.equal(dyn.order_elggot(v, dyn.order_toggle(v, g)), g):
            return False
        if not dyn.equal(dyn.order_toggle(v, dyn.order_elggot(v, g)), g):
            return False
        if not dyn.equal(dyn.antichain_elggot(v, dyn.antichain_toggle(v, g)), g):
            return False
        if not dyn.equal(dyn.antichain_toggle(v, dyn.antichain_elggot(v, g)), g):
            return False
    return True


def _check_commutation(dyn, g, rng):
    p = dyn.poset
    for u in range(p.n):
        for v in range(u + 1, p.n):
            covering = (u, v) in p.covers or (v, u) in p.covers
            if not covering:
                a = dyn.order_toggle(u, dyn.order_toggle(v, g))
                b = dyn.order_toggle(v, dyn.order_toggle(u, g))
                if not dyn.equal(a, b):
                    return False
            if p.incomparable(u, v):
                a = dyn.antichain_toggle(u, dyn.antichain_toggle(v, g))
                b = dyn.antichain_toggle(v, dyn.antichain_toggle(u, g))
                if not dyn.equal(a, b):
                    return False
    return True


def _check_extension_independence(dyn, g, rng):
    exts = dyn.poset.linear_extensions(limit=2)
    if len(exts) < 2:
        return True
    one, two = exts
    return (dyn.equal(dyn.antichain_rowmotion(g, one), dyn.antichain_rowmotion(g, two))
            and dyn.equal(dyn.order_rowmotion(g, one), dyn.order_rowmotion(g, two)))


def _check_reciprocity(dyn, g, rng):
    from .backends import parallel_sum
    b = dyn.backend
    k = rng.randint(2, max(2, min(5, len(g.values))))
    xs = list(g.values[:k])
    par = parallel_sum(b, xs)
    inv_sum = b.sum([b.invert(x) for x in xs])
    return (b.equals(b.mul(par, inv_sum), b.one())
            and b.equals(b.mul(inv_sum, par), b.one()))


def _check_meteor_gorge(dyn, g, rng):
    b = dyn.backend
    nd = dyn.inv_down_transfer(g)
    du = dyn.inv_up_transfer(g)
    c = b.constant_c()
    for v in range(dyn.poset.n):
        both = b.invert(b.mul(nd[v], du[v]))
        tog = dyn.antichain_toggle(v, g)[v]
        if not b.equals(tog, b.mul(b.mul(c, both), g[v])):
            return False
        if not b.equals(tog, b.product([c, b.invert(du[v]), b.invert(nd[v]), g[v]])):
            return False
        elg = dyn.antichain_elggot(v, g)[v]
        if not b.equals(elg, b.product([c, g[v], both])):
            return False
    return True


def _check_bar_transfer(dyn, g, rng):
    return dyn.equal(dyn.antichain_rowmotion(g), dyn.antichain_rowmotion_via_transfers(g))


def _check_nor_transfer(dyn, g, rng):
    return dyn.equal(dyn.order_rowmotion(g), dyn.order_rowmotion_via_transfers(g))


def _check_t_star(dyn, g, rng):
    side = _theta_invup(dyn, g)
    for v in range(dyn.poset.n):
        if not dyn.equal(_theta_invup(dyn, dyn.star_order_toggle(v, g)),
                         dyn.order_toggle(v, side)):
            return False
        if not dyn.equal(_theta_invup(dyn, dyn.star_order_elggot(v, g)),
                         dyn.order_elggot(v, side)):
            return False
    return True


def _check_tau_star(dyn, g, rng):
    side = _theta_invup(dyn, g)
    for v in range(dyn.poset.n):
        if not dyn.equal(_theta_invup(dyn, dyn.antichain_toggle(v, g)),
                         dyn.star_antichain_toggle(v, side)):
            return False
        if not dyn.equal(_theta_invup(dyn, dyn.antichain_elggot(v, g)),
                         dyn.star_antichain_elggot(v, side)):
            return False
    return True


def _check_gyration(dyn, g, rng):
    kind = "antichain" if (dyn.backend.is_commutative or dyn.backend.is_tropical) \
        else "antichain_starred"
    lhs = _theta_invup(dyn, dyn.gyration(kind, g))
    rhs = dyn.gyration("order", _theta_invup(dyn, g))
    return dyn.equal(lhs, rhs)


def _random_central_scalars(dyn, rng):
    b = dyn.backend
    r = dyn.poset.top_rank
    return [b.central_from_rational(Fraction(rng.randint(1, 9), rng.randint(1, 9)))
            for _ in range(r + 1)]


def _check_rescale_rank(dyn, g, rng):
    b = dyn.backend
    scalars = _random_central_scalars(dyn, rng)
    inv_total = b.invert(b.product(scalars))
    scaled = dyn.graded_rescale(scalars, g)
    for i in range(dyn.poset.top_rank + 1):
        lhs = dyn.rank_toggle("antichain", i, scaled)
        swapped = list(scalars)
        swapped[i] = inv_total
        rhs = dyn.graded_rescale(swapped, dyn.rank_toggle("antichain", i, g))
        if not dyn.equal(lhs, rhs):
            return False
    return True


def _check_rescale_bar(dyn, g, rng):
    b = dyn.backend
    scalars = _random_central_scalars(dyn, rng)
    inv_total = b.invert(b.product(scalars))
    lhs = dyn.antichain_rowmotion(dyn.graded_rescale(scalars, g))
    rotated = [inv_total] + scalars[:-1]
    rhs = dyn.graded_rescale(rotated, dyn.antichain_rowmotion(g))
    return dyn.equal(lhs, rhs)


@dataclass(frozen=True)
class TheoremCheck:
    check: callable
    needs_graded: bool
    default_backends: tuple
    description: str


THEOREMS = {
    "involution": TheoremCheck(
        _check_involution, False, ("rational", "tropical"),
        "order and antichain toggles square to the identity "
        "(inverse pairs on noncommutative backends)"),
    "commutation": TheoremCheck(
        _check_commutation, False, ("rational", "matrix:2"),
        "toggles at non-covering / incomparable pairs commute"),
    "extension-independence": TheoremCheck(
        _check_extension_independence, False, ("rational", "matrix:2"),
        "rowmotion agrees along different linear extensions"),
    "reciprocity": TheoremCheck(
        _check_reciprocity, False, ("rational", "matrix:2", "tropical"),
        "parallel sum times the sum of inverses is the identity, both ways"),
    "meteor-gorge": TheoremCheck(
        _check_meteor_gorge, False, ("rational", "matrix:2"),
        "antichain toggles factor through the inverse transfer values"),
    "bar-transfer": TheoremCheck(
        _check_bar_transfer, False, ("rational", "tropical"),
        "antichain rowmotion = down-transfer o complement o inverse-up-transfer"),
    "nar-transfer": TheoremCheck(
        _check_bar_transfer, False, ("matrix:2",),
        "noncommutative antichain rowmotion = the same transfer composition"),
    "nor-transfer": TheoremCheck(
        _check_nor_transfer, False, ("rational", "matrix:2"),
        "order rowmotion = complement o inverse-up-transfer o down-transfer"),
    "t-star": TheoremCheck(
        _check_t_star, False, ("rational",),
        "starred antichain words mimic order toggles across the transfer bridge"),
    "tau-star": TheoremCheck(
        _check_tau_star, False, ("rational",),
        "conjugated order words mimic antichain toggles across the transfer bridge"),
    "t-star-nc": TheoremCheck(
        _check_t_star, False, ("matrix:2",),
        "noncommutative starred order-toggle diagrams"),
    "tau-star-nc": TheoremCheck(
        _check_tau_star, False, ("matrix:2",),
        "noncommutative starred antichain-toggle diagrams"),
    "gyration": TheoremCheck(
        _check_gyration, True, ("rational", "matrix:2"),
        "gyration commutes with rowmotion's transfer bridge"),
    "rescale-rank": TheoremCheck(
        _check_rescale_rank, True, ("rational", "matrix:2"),
        "rank toggles turn graded rescalings into graded rescalings"),
    "rescale-bar": TheoremCheck(
        _check_rescale_bar, True, ("rational", "matrix:2"),
        "antichain rowmotion rotates graded rescaling vectors"),
}


def run_check(spec: CheckSpec, poset=None, backend=None):
    """Evaluate one theorem on random labelings; exact equality per point."""
    thm = THEOREMS[spec.theorem]
    p = build_poset(spec.poset_spec) if poset is None else poset
    b = parse_backend(spec.backend_spec) if backend is None else backend
    model_note = _model_note(b)
    if thm.needs_graded and not p.is_graded:
        report = {
            "theorem": spec.theorem, "poset": spec.poset_spec,
            "backend": b.describe(), "seed": spec.seed, "points": 0,
            "passes": 0, "failures": 0, "retries": 0, "status": "skipped (ungraded)",
        }
        if model_note:
            report["model"] = model_note
        return report
    dyn = Dynamics(p, b)
    passes = failures = retries = 0
    for i in range(spec.points):
        for attempt in range(spec.max_retries + 1):
            point_seed = derive_seed(spec.seed, i, attempt)
            g = dyn.random_labeling(point_seed)
            rng = random.Random(derive_seed("aux", spec.seed, i, attempt))
            try:
                ok = thm.check(dyn, g, rng)
            except NotInvertible:
                retries += 1
                continue
            break
        else:
            raise GenericityFailure(
                f"{spec.theorem} on {spec.poset_spec}/{b.describe()}: "
                f"point {i} stayed degenerate through {spec.max_retries} retries")
        if ok:
            passes += 1
        else:
            failures += 1
    report = {
        "theorem": spec.theorem, "poset": spec.poset_spec,
        "backend": b.describe(), "seed": spec.seed, "points": spec.points,
        "passes": passes, "failures": failures, "retries": retries,
        "status": "pass" if failures == 0 else "fail",
    }
    if model_note:
        report["model"] = model_note
    return report


def _model_note(backend):
    """Matrix rings only approximate a skew field: generic evaluation, not
    symbolic identity.  Flag that caveat on every noncommutative report."""
    if not backend.is_commutative:
        return "generic-matrix evaluation (randomized identity testing, not symbolic)"
    return None


def default_check_specs(poset_specs=("chain 2x3", "rootA 3"), points=DEFAULT_POINTS, seed=0):
    """One CheckSpec per (theorem, poset, default backend)."""
    out = []
    for theorem in sorted(THEOREMS):
        for ps in poset_specs:
            for bs in THEOREMS[theorem].default_backends:
                out.append(CheckSpec(theorem, ps, bs, points=points, seed=seed))
    return out


def verify_all(poset_specs=("chain 2x3", "rootA 3"), points=DEFAULT_POINTS, seed=0):
    reports = [run_check(s) for s in default_check_specs(poset_specs, points, seed)]
    reports.sort(key=lambda r: (r["theorem"], r["poset"], r["backend"], r["seed"]))
    return reports


# -- orbit scans ------------------------------------------------------------------


_MAP_STEPS = {
    "bar": lambda dyn: dyn.antichain_rowmotion,
    "bor": lambda dyn: dyn.order_rowmotion,
}


def labeling_orbit_report(poset, backend, map_id, seed, poset_name=None,
                          max_iter=DEFAULT_MAX_ITER, max_retries=DEFAULT_MAX_RETRIES):
    """Detected order of a rowmotion map from a random labeling.

    Resamples the start with derived seeds when the orbit hits a
    degenerate labeling; raises GenericityFailure past the budget.
    """
    dyn = Dynamics(poset, backend)
    step = _MAP_STEPS[map_id](dyn)
    failures = 0
    for attempt in range(max_retries + 1):
        start = dyn.random_labeling(derive_seed("orbit", seed, attempt))
        try:
            order = detect_order(step, start, dyn.equal, max_iter=max_iter)
        except NotInvertible:
            failures += 1
            continue
        return OrbitReport(
            map_id=map_id, poset=poset_name or repr(poset), backend=backend.describe(),
            seed=seed, order=order, iterates=order if order is not None else max_iter,
            returned_to_start=order is not None,
            minimal=order is not None, failures=failures)
    raise GenericityFailure(
        f"orbit of {map_id} stayed degenerate through {max_retries} retries")


def scan_conjecture(a_max, b_max, backend_spec, seeds=(0, 1, 2), map_id="bor",
                    max_iter=DEFAULT_MAX_ITER, element_budget=12):
    """Observed rowmotion orders on chain products, reported not asserted."""
    rows = []
    for a in range(1, a_max + 1):
        for b in range(a, b_max + 1):
            expected = a + b
            if a * b > element_budget:
                rows.append({"a": a, "b": b, "backend": backend_spec,
                             "observed": "skipped", "expected": expected,
                             "status": "skipped"})
                continue
            p = chain_product(a, b)
            observed = []
            for s in seeds:
                backend = parse_backend(backend_spec)
                rep = labeling_orbit_report(p, backend, map_id, s,
                                            poset_name=f"chain {a}x{b}",
                                            max_iter=max_iter)
                observed.append(rep.order)
            if any(o is None for o in observed):
                status, shown = "exceeded", "exceeded"
            elif all(o == expected for o in observed):
                status, shown = "consistent", observed[0]
            else:
                status, shown = "inconsistent", "/".join(str(o) for o in observed)
            rows.append({"a": a, "b": b, "backend": backend_spec,
                         "observed": shown, "expected": expected, "status": status})
    return rows


# -- report emission -----------------------------------------------------------------


def emit_report(reports, format="json"):
    """Serialize report rows deterministically; returns bytes."""
    reports = list(reports)
    if format == "json":
        return (json.dumps(reports, indent=2, sort_keys=True, default=str) + "\n").encode()
    if format == "csv":
        buf = io.StringIO()
        if reports and {"a", "b", "backend"} <= set(reports[0]):
            fieldnames = ["a", "b", "backend", "observed", "expected", "status"]
        else:
            fieldnames = sorted({k for r in reports for k in r})
        writer = csv.DictWriter(buf, fieldnames=fieldnames, extrasaction="ignore")
        writer.writeheader()
        for r in reports:
            writer.writerow(r)
        return buf.getvalue().encode()
    if format == "text":
        if not reports:
            return b"(no reports)\n"
        keys = []
        for r in reports:
            for k in r:
                if k not in keys:
                    keys.append(k)
        widths = {k: max(len(str(k)), *(len(str(r.get(k, ""))) for r in reports))
                  for k in keys}
        lines = ["  ".join(str(k).ljust(widths[k]) for k in keys)]
        for r in reports:
            lines.append("  ".join(str(r.get(k, "")).ljust(widths[k]) for k in keys))
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {format!r}")
