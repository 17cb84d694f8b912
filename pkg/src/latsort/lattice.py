"""Lattice interface, derived order, folds, and executable law checks.

A lattice here is an object carrying a binary meet and join over some
payload domain.  Elements are plain Python values (ints, bit masks held
in ints, pairs as tuples); the lattice object is what gives them meaning
and validates that they belong to its domain.
"""

from __future__ import annotations

import abc
import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Hashable, Iterable, Sequence

from .errors import DomainError, EmptySequenceError

Element = Hashable

#: Samples up to this size are checked exhaustively over all triples.
EXHAUSTIVE_SAMPLE_LIMIT = 32
#: Number of random triples drawn when the sample is larger than the limit.
SUBSAMPLE_TRIPLES = 4096
LAW_SEED = 0


class Lattice(abc.ABC):
    """Base class for lattice descriptors.

    Subclasses are frozen dataclasses and implement ``_meet``/``_join`` on
    already-validated payloads.  The public ``meet``/``join``/``leq`` validate
    their arguments first; the sorting code validates a whole sequence once
    and then calls the underscore versions directly.
    """

    kind: str = "abstract"
    #: Declared distributivity; gates the dynamic-programming sort.
    distributive: bool = False

    @abc.abstractmethod
    def contains(self, a: Any) -> bool:
        """Return True if ``a`` is a payload of this lattice."""

    @abc.abstractmethod
    def _meet(self, a, b):
        ...

    @abc.abstractmethod
    def _join(self, a, b):
        ...

    @abc.abstractmethod
    def law_sample(self) -> list:
        """A deterministic list of at most 32 elements used for law checks,
        or every element when the lattice is finite."""

    @abc.abstractmethod
    def random_element(self, rng: random.Random):
        ...

    @abc.abstractmethod
    def format(self, a) -> str:
        ...

    @abc.abstractmethod
    def parse(self, text: str):
        ...

    def elements(self) -> list | None:
        """All elements for finite lattices, ``None`` otherwise."""
        return None

    def check(self, a) -> None:
        if not self.contains(a):
            raise DomainError(f"{a!r} is not an element of {self}")

    def meet(self, a, b):
        self.check(a)
        self.check(b)
        return self._meet(a, b)

    def join(self, a, b):
        self.check(a)
        self.check(b)
        return self._join(a, b)

    def leq(self, a, b) -> bool:
        self.check(a)
        self.check(b)
        return self._meet(a, b) == a

    def meet_all(self, items: Iterable):
        return self._fold(self._meet, items, "meet")

    def join_all(self, items: Iterable):
        return self._fold(self._join, items, "join")

    def _fold(self, op, items, name):
        it = iter(items)
        try:
            acc = next(it)
        except StopIteration:
            raise EmptySequenceError(f"{name} of an empty collection is undefined") from None
        self.check(acc)
        for item in it:
            self.check(item)
            acc = op(acc, item)
        return acc

    @cached_property
    def is_chain(self) -> bool:
        """True if every pair of sampled elements is comparable."""
        sample = self.law_sample()
        for a, b in itertools.combinations(sample, 2):
            m = self._meet(a, b)
            if m != a and m != b:
                return False
        return True


def meet(d: Lattice, a, b):
    return d.meet(a, b)


def join(d: Lattice, a, b):
    return d.join(a, b)


def leq(d: Lattice, a, b) -> bool:
    return d.leq(a, b)


def meet_all(d: Lattice, items: Iterable):
    return d.meet_all(items)


def join_all(d: Lattice, items: Iterable):
    return d.join_all(items)


@dataclass(frozen=True)
class LawReport:
    passed: bool
    checked: int
    law: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.passed

    def describe(self, d: Lattice) -> str:
        if self.passed:
            return f"pass ({self.checked} cases)"
        shown = ", ".join(d.format(w) for w in self.witness)
        return f"fail: {self.law} violated at ({shown})"


def _triples(sample: Sequence, seed: int):
    """All triples of a small sample, else a seeded uniform subsample."""
    if len(sample) <= EXHAUSTIVE_SAMPLE_LIMIT:
        yield from itertools.product(sample, repeat=3)
        return
    rng = random.Random(seed)
    for _ in range(SUBSAMPLE_TRIPLES):
        yield rng.choice(sample), rng.choice(sample), rng.choice(sample)


def _prepare(d: Lattice, sample) -> list:
    sample = list(sample)
    if not sample:
        raise EmptySequenceError("law checks need a nonempty sample")
    for a in sample:
        d.check(a)
    return sample


def check_axioms(d: Lattice, sample: Iterable, seed: int = LAW_SEED) -> LawReport:
    """Check idempotence, commutativity, associativity and both absorption
    laws of ``d`` on ``sample``; report the first counterexample."""
    sample = _prepare(d, sample)
    meet_, join_ = d._meet, d._join
    # Every law is phrased over (x, y) or (x, y, z); unary and binary laws are
    # checked on the leading components of each triple, once per distinct key.
    seen_x: set = set()
    seen_xy: set = set()
    checked = 0
    for x, y, z in _triples(sample, seed):
        if x not in seen_x:
            seen_x.add(x)
            checked += 1
            if meet_(x, x) != x:
                return LawReport(False, checked, "meet idempotence", (x,))
            if join_(x, x) != x:
                return LawReport(False, checked, "join idempotence", (x,))
        if (x, y) not in seen_xy:
            seen_xy.add((x, y))
            checked += 1
            if meet_(x, y) != meet_(y, x):
                return LawReport(False, checked, "meet commutativity", (x, y))
            if join_(x, y) != join_(y, x):
                return LawReport(False, checked, "join commutativity", (x, y))
            if join_(x, meet_(x, y)) != x:
                return LawReport(False, checked, "absorption x | (x & y) = x", (x, y))
            if meet_(x, join_(x, y)) != x:
                return LawReport(False, checked, "absorption x & (x | y) = x", (x, y))
        checked += 1
        if meet_(meet_(x, y), z) != meet_(x, meet_(y, z)):
            return LawReport(False, checked, "meet associativity", (x, y, z))
        if join_(join_(x, y), z) != join_(x, join_(y, z)):
            return LawReport(False, checked, "join associativity", (x, y, z))
    return LawReport(True, checked)


def check_distributive(d: Lattice, sample: Iterable, seed: int = LAW_SEED) -> LawReport:
    """Check x & (y | z) = (x & y) | (x & z) on sampled triples."""
    sample = _prepare(d, sample)
    meet_, join_ = d._meet, d._join
    checked = 0
    for x, y, z in _triples(sample, seed):
        checked += 1
        if meet_(x, join_(y, z)) != join_(meet_(x, y), meet_(x, z)):
            return LawReport(False, checked, "distributivity", (x, y, z))
    return LawReport(True, checked)
