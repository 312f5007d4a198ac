"""Value algebras behind the generic toggle calculus.

One abstract interface with three instances: exact rationals (the
commutative birational realm), square rational matrices (the evaluation
model for the skew-field realm), and the max-plus tropical semiring
(the bridge to the piecewise-linear realm).

Backends are stateless descriptors: sampling takes an explicit seed, so
concurrent use is deterministic and race-free by construction.
"""

from __future__ import annotations

import hashlib
import random
from abc import ABC, abstractmethod
from fractions import Fraction

from .errors import NotInvertible
from .matrices import RationalMatrix

DEFAULT_SAMPLE_RANGE = (1, 50)


def derive_seed(*parts):
    """Stable integer seed from arbitrary labelled parts."""
    text = ":".join(str(p) for p in parts)
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _sample_fraction(rng, lo, hi):
    num = rng.randint(lo, hi)
    while num == 0:
        num = rng.randint(lo, hi)
    den = rng.randint(max(1, lo), hi)
    return Fraction(num, den)


class AlgebraBackend(ABC):
    """Addition, multiplication, inversion, and seeded generic sampling."""

    is_commutative = True
    is_tropical = False
    name = "abstract"

    @abstractmethod
    def add(self, x, y): ...

    @abstractmethod
    def mul(self, x, y): ...

    @abstractmethod
    def one(self): ...

    @abstractmethod
    def invert(self, x): ...

    @abstractmethod
    def constant_c(self): ...

    @abstractmethod
    def sample_generic(self, seed): ...

    def equals(self, x, y):
        return x == y

    def is_central(self, x):
        return True

    def central_from_rational(self, q):
        """Embed a nonzero rational as a central element."""
        return Fraction(q)

    def sum(self, values):
        it = iter(values)
        try:
            total = next(it)
        except StopIteration:
            raise ValueError("empty sum has no backend value")
        for v in it:
            total = self.add(total, v)
        return total

    def product(self, values):
        """Left-to-right product; order matters for noncommutative backends."""
        out = self.one()
        for v in values:
            out = self.mul(out, v)
        return out

    def describe(self):
        return self.name

    def __repr__(self):
        return f"<backend {self.describe()}>"


class RationalField(AlgebraBackend):
    """Arbitrary-precision rationals; a commutative field."""

    name = "rational"

    def __init__(self, const_c=Fraction(2), sample_range=DEFAULT_SAMPLE_RANGE):
        self._c = Fraction(const_c)
        if self._c == 0:
            raise ValueError("the constant C must be nonzero")
        self.sample_range = sample_range

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def one(self):
        return Fraction(1)

    def invert(self, x):
        if x == 0:
            raise NotInvertible(context="rational zero")
        return 1 / x

    def constant_c(self):
        return self._c

    def sample_generic(self, seed):
        rng = random.Random(seed)
        lo, hi = self.sample_range
        return _sample_fraction(rng, lo, hi)


class MatrixRing(AlgebraBackend):
    """Square exact-rational matrices; noncommutative for d >= 2.

    Inversion is partial (singular matrices model the degenerate labels
    where the skew-field maps are undefined).  The constant C is a scalar
    matrix, hence central by construction.
    """

    def __init__(self, d, const_c=Fraction(2), sample_range=DEFAULT_SAMPLE_RANGE):
        if d < 1:
            raise ValueError("matrix dimension must be positive")
        self.d = d
        c = Fraction(const_c)
        if c == 0:
            raise ValueError("the constant C must be nonzero")
        self._c = RationalMatrix.scalar(d, c)
        self.sample_range = sample_range
        self.name = f"matrix:{d}"

    @property
    def is_commutative(self):
        return self.d == 1

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x @ y

    def one(self):
        return RationalMatrix.identity(self.d)

    def invert(self, x):
        return x.inverse()

    def constant_c(self):
        return self._c

    def is_central(self, x):
        return x.is_scalar()

    def central_from_rational(self, q):
        return RationalMatrix.scalar(self.d, Fraction(q))

    def sample_generic(self, seed):
        rng = random.Random(seed)
        lo, hi = self.sample_range
        return RationalMatrix(tuple(tuple(_sample_fraction(rng, lo, hi)
                                          for _ in range(self.d))
                                    for _ in range(self.d)))


class TropicalSemiring(AlgebraBackend):
    """Max-plus algebra on exact rationals: add = max, mul = +, one = 0.

    Inversion (negation) is total, so the piecewise-linear identities
    that involve no subtraction evaluate exactly here.
    """

    name = "tropical"
    is_tropical = True

    def __init__(self, const_c=Fraction(1), sample_denominator_bound=50):
        self._c = Fraction(const_c)
        self.sample_denominator_bound = sample_denominator_bound

    def add(self, x, y):
        return max(x, y)

    def mul(self, x, y):
        return x + y

    def one(self):
        return Fraction(0)

    def invert(self, x):
        return -x

    def constant_c(self):
        return self._c

    def sample_generic(self, seed):
        rng = random.Random(seed)
        den = rng.randint(1, self.sample_denominator_bound)
        num = rng.randint(0, den)
        return Fraction(num, den)


def parallel_sum(backend, values):
    """Inverse of the sum of inverses: the harmonic combination."""
    values = list(values)
    if not values:
        raise ValueError("parallel sum of an empty sequence")
    inverses = []
    for i, v in enumerate(values):
        try:
            inverses.append(backend.invert(v))
        except NotInvertible:
            raise NotInvertible(context=f"parallel-sum operand {i}")
    try:
        return backend.invert(backend.sum(inverses))
    except NotInvertible:
        raise NotInvertible(context="parallel-sum of inverses")


def random_labeling(backend, p, seed):
    """One independent generic sample per element, deterministic in the seed."""
    return tuple(backend.sample_generic(derive_seed("label", seed, v))
                 for v in range(p.n))


def parse_backend(spec, const_c=None):
    """Parse a backend descriptor: rational | matrix:d | tropical."""
    spec = spec.strip().lower()
    kwargs = {}
    if const_c is not None:
        kwargs["const_c"] = Fraction(const_c)
    if spec == "rational":
        return RationalField(**kwargs)
    if spec == "tropical":
        return TropicalSemiring(**kwargs)
    if spec.startswith("matrix:"):
        d = int(spec.split(":", 1)[1])
        return MatrixRing(d, **kwargs)
    raise ValueError(f"unknown backend {spec!r}; choose rational, matrix:d, or tropical")
