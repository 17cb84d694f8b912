"""Sorting sequences in a lattice.

The k-th entry of the sorted sequence is the meet, over all k-element index
sets I, of the join of the entries selected by I.  On a chain this is the
ordinary sorted rearrangement.  In a general lattice it is still
nondecreasing, idempotent, invariant under permutations of the input and
bounded by any bounds of the input, but its entries need not occur in the
input at all.

Three evaluators are provided:

* :func:`weak_sort_bruteforce` enumerates every index subset (exponential).
* :func:`weak_sort_distributive_dp` uses the elementary-symmetric recurrence
  ``E[k] <- E[k] & (E[k-1] | x_j)``, O(n^2) operations, valid only when join
  distributes over meet.
* :func:`classical_sort` is a comparison sort for chains.

The nonincreasing variant is the same construction with meet and join swapped.
"""

from __future__ import annotations

import functools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .combinatorics import DEFAULT_CAP, k_subsets
from .errors import DomainError, EmptySequenceError, NotDistributiveError, NotTotalOrderError
from .instances import split_top
from .lattice import Lattice

BRUTE_FORCE = "brute-force"
DISTRIBUTIVE_DP = "distributive-dp"
CLASSICAL = "classical"

ALGORITHMS = {"brute": BRUTE_FORCE, "dp": DISTRIBUTIVE_DP, "classical": CLASSICAL}


@dataclass(frozen=True)
class Sequence:
    """A finite sequence of elements of one lattice."""

    lattice: Lattice
    items: tuple = ()

    def __post_init__(self):
        items = tuple(self.items)
        for a in items:
            self.lattice.check(a)
        object.__setattr__(self, "items", items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def format(self, sep: str = ",") -> str:
        return sep.join(self.lattice.format(a) for a in self.items)

    @classmethod
    def parse(cls, lattice: Lattice, text: str) -> "Sequence":
        """Parse a comma-separated list; commas inside braces or parentheses
        belong to the element."""
        text = text.strip()
        if not text:
            return cls(lattice, ())
        return cls(lattice, tuple(lattice.parse(part) for part in split_top(text, ",")))


@dataclass(frozen=True)
class Permutation:
    """A bijection of [1, n] stored as the 1-based image list."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise DomainError(f"{mapping} is not a permutation of [1,{len(mapping)}]")
        object.__setattr__(self, "mapping", mapping)

    def __len__(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Permutation":
        m = list(range(1, n + 1))
        rng.shuffle(m)
        return cls(tuple(m))


def apply_permutation(x: Sequence, p: Permutation) -> Sequence:
    """Return the sequence whose i-th entry is x[p(i)]."""
    if len(p) != len(x):
        raise DomainError(f"permutation of length {len(p)} applied to sequence of length {len(x)}")
    return Sequence(x.lattice, tuple(x.items[i - 1] for i in p.mapping))


@dataclass(frozen=True)
class SortReport:
    output: Sequence
    algorithm: str
    meet_count: int = 0
    join_count: int = 0
    checks: "PropertyReport | None" = None

    @property
    def op_count(self) -> int:
        return self.meet_count + self.join_count


class _Tally:
    """Counts the lattice operations of one sort call."""

    def __init__(self, lattice: Lattice):
        self._meet = lattice._meet
        self._join = lattice._join
        self.meets = 0
        self.joins = 0

    def meet(self, a, b):
        self.meets += 1
        return self._meet(a, b)

    def join(self, a, b):
        self.joins += 1
        return self._join(a, b)


def _report(x: Sequence, out, algorithm: str, tally: _Tally | None = None) -> SortReport:
    meets = tally.meets if tally else 0
    joins = tally.joins if tally else 0
    return SortReport(Sequence(x.lattice, tuple(out)), algorithm, meets, joins)


def _require_nonempty(x: Sequence) -> None:
    if not len(x):
        raise EmptySequenceError("cannot sort an empty sequence with an explicit algorithm")


def weak_sort_bruteforce(x: Sequence, cap: int | None = DEFAULT_CAP) -> SortReport:
    """Evaluate the meet-of-joins formula by enumerating every index subset.

    Uses ``C(n,k) - 1`` meets and ``C(n,k) * (k - 1)`` joins for each k.
    """
    _require_nonempty(x)
    items, n = x.items, len(x)
    tally = _Tally(x.lattice)
    out = []
    for k in range(1, n + 1):
        acc = None
        for subset in k_subsets(n, k, cap):
            v = items[subset[0] - 1]
            for i in subset[1:]:
                v = tally.join(v, items[i - 1])
            acc = v if acc is None else tally.meet(acc, v)
        out.append(acc)
    return _report(x, out, BRUTE_FORCE, tally)


def weak_sort_distributive_dp(x: Sequence, *, force: bool = False) -> SortReport:
    """Sort with the elementary-symmetric recurrence in O(n^2) operations.

    After processing x_1..x_j, ``E[k]`` is the meet over k-subsets of
    {1..j} of the joins; ``None`` stands for "no such subset yet".  The
    update is only sound in a distributive lattice: the diamond M3 is a
    counterexample.  ``force=True`` skips the distributivity gate and exists
    so that failure can be demonstrated.
    """
    if not (force or x.lattice.distributive):
        raise NotDistributiveError(f"{x.lattice} is not declared distributive")
    _require_nonempty(x)
    tally = _Tally(x.lattice)
    n = len(x)
    E = [None] * (n + 1)
    for j, xj in enumerate(x.items, 1):
        for k in range(j, 0, -1):
            cand = xj if k == 1 else tally.join(E[k - 1], xj)
            E[k] = cand if E[k] is None else tally.meet(E[k], cand)
    return _report(x, E[1:], DISTRIBUTIVE_DP, tally)


def _cmp(lattice: Lattice, a, b) -> int:
    if a == b:
        return 0
    return -1 if lattice._meet(a, b) == a else 1


def classical_sort(x: Sequence) -> SortReport:
    """Comparison-sort a sequence from a chain."""
    d = x.lattice
    if not d.is_chain:
        raise NotTotalOrderError(f"{d} is not totally ordered")
    if d.kind == "int":
        out = sorted(x.items)
    else:
        out = sorted(x.items, key=functools.cmp_to_key(functools.partial(_cmp, d)))
    return _report(x, out, CLASSICAL)


def choose_algorithm(d: Lattice) -> str:
    if d.is_chain:
        return CLASSICAL
    if d.distributive:
        return DISTRIBUTIVE_DP
    return BRUTE_FORCE


def sort_auto(x: Sequence, cap: int | None = DEFAULT_CAP) -> SortReport:
    """Pick the cheapest sound evaluator for the lattice of ``x``."""
    algorithm = choose_algorithm(x.lattice)
    if not len(x):
        return SortReport(x, algorithm)
    if algorithm == CLASSICAL:
        return classical_sort(x)
    if algorithm == DISTRIBUTIVE_DP:
        return weak_sort_distributive_dp(x)
    return weak_sort_bruteforce(x, cap)


def sort_sequence(x: Sequence, algorithm: str = "auto", cap: int | None = DEFAULT_CAP) -> SortReport:
    """Sort with an algorithm named ``auto``, ``brute``, ``dp`` or ``classical``."""
    if algorithm == "auto":
        return sort_auto(x, cap)
    if algorithm == "brute":
        return weak_sort_bruteforce(x, cap)
    if algorithm == "dp":
        return weak_sort_distributive_dp(x)
    if algorithm == "classical":
        return classical_sort(x)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def is_nondecreasing(x: Sequence) -> bool:
    m = x.lattice._meet
    return all(m(a, b) == a for a, b in zip(x.items, x.items[1:]))


def preserves_multiset(x: Sequence, y: Sequence) -> bool:
    return Counter(x.items) == Counter(y.items)


@dataclass
class PropertyReport:
    output: Sequence
    algorithm: str
    nondecreasing: bool
    idempotent: bool
    permutation_invariant: bool
    bounded: bool
    multiset_preserved: bool
    trials: int
    failures: list[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.nondecreasing and self.idempotent and self.permutation_invariant and self.bounded

    def __bool__(self) -> bool:
        return self.all_passed


def check_sorting_properties(
    x: Sequence,
    trials: int = 10,
    seed: int = 0,
    bounds: Iterable[tuple] = (),
    cap: int | None = DEFAULT_CAP,
    algorithm: str = "auto",
) -> PropertyReport:
    """Check the four sorting lemmas on ``x``.

    Bounds always include ``(meet_all(x), join_all(x))``; extra ``(a, b)``
    pairs must bound every input entry or a :class:`DomainError` is raised.
    Multiset preservation is recorded but not part of ``all_passed``, since
    it fails outside chains.
    """
    d = x.lattice
    run = functools.partial(sort_sequence, algorithm=algorithm, cap=cap)
    report = run(x)
    y = report.output
    failures = []

    nondecreasing = is_nondecreasing(y)
    if not nondecreasing:
        failures.append(f"output {y.format()} is not nondecreasing")

    idempotent = not len(x) or run(y).output.items == y.items
    if not idempotent:
        failures.append(f"sorting {y.format()} again changes it")

    rng = random.Random(seed)
    invariant = True
    if len(x):
        for _ in range(trials):
            p = Permutation.random(len(x), rng)
            got = run(apply_permutation(x, p)).output
            if got.items != y.items:
                invariant = False
                failures.append(f"permutation {p.mapping} sorts to {got.format()}")
                break

    bounded = True
    pairs = list(bounds)
    if len(x):
        pairs.insert(0, (d.meet_all(x), d.join_all(x)))
    for a, b in pairs:
        if not all(d.leq(a, e) and d.leq(e, b) for e in x):
            raise DomainError(f"({d.format(a)}, {d.format(b)}) does not bound the input")
        if not all(d.leq(a, e) and d.leq(e, b) for e in y):
            bounded = False
            failures.append(f"output leaves [{d.format(a)}, {d.format(b)}]")

    return PropertyReport(
        output=y,
        algorithm=report.algorithm,
        nondecreasing=nondecreasing,
        idempotent=idempotent,
        permutation_invariant=invariant,
        bounded=bounded,
        multiset_preserved=preserves_multiset(x, y),
        trials=trials,
        failures=failures,
    )
