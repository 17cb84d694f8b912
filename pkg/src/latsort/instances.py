"""Concrete lattice families, the lattice spec grammar, and table files.

Spec grammar (as accepted by :func:`parse_lattice_spec`)::

    int | div | m3 | n5 | powerset:<name,...> | table:<path>
    product:<spec>+<spec>        (wrap a side in parentheses to nest)

Element text: integers in decimal, powerset members as ``{x,z}`` or ``{}``,
product elements as ``(lhs|rhs)``, table nodes by name or index.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass, field
from functools import cache
from pathlib import Path

from .errors import AxiomError, DomainError, LatticeOverflowError, LatticeParseError
from .lattice import Lattice, check_axioms, check_distributive

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1
UINT64_MAX = 2**64 - 1
MAX_UNIVERSE = 64

_NAME_RE = re.compile(r"[^\s,{}()|+:=]+")
_OPEN = "({"
_CLOSE = ")}"


def split_top(text: str, sep: str) -> list[str]:
    """Split ``text`` on ``sep`` occurring outside parentheses and braces."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                raise LatticeParseError(f"unbalanced {ch!r} in {text!r}")
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise LatticeParseError(f"unbalanced brackets in {text!r}")
    parts.append(text[start:])
    return parts


def _parse_int(text: str) -> int:
    try:
        return int(text.strip(), 10)
    except ValueError:
        raise LatticeParseError(f"not a decimal integer: {text!r}") from None


def _is_int(a) -> bool:
    return isinstance(a, int) and not isinstance(a, bool)


@dataclass(frozen=True)
class IntLattice(Lattice):
    """Signed 64-bit integers under min and max."""

    kind = "int"
    distributive = True

    def contains(self, a) -> bool:
        return _is_int(a) and INT64_MIN <= a <= INT64_MAX

    def _meet(self, a, b):
        return a if a <= b else b

    def _join(self, a, b):
        return a if a >= b else b

    def law_sample(self) -> list:
        return list(range(-16, 16))

    def random_element(self, rng: random.Random):
        return rng.randint(-50, 50)

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        a = _parse_int(text)
        self.check(a)
        return a

    def __str__(self) -> str:
        return "int"


@dataclass(frozen=True)
class DivisibilityLattice(Lattice):
    """Positive 64-bit integers ordered by divisibility (gcd, lcm).

    Zero is excluded, and an lcm above ``2**64 - 1`` raises
    :class:`LatticeOverflowError`.
    """

    kind = "div"
    distributive = True

    def contains(self, a) -> bool:
        return _is_int(a) and 1 <= a <= UINT64_MAX

    def _meet(self, a, b):
        return math.gcd(a, b)

    def _join(self, a, b):
        c = a // math.gcd(a, b) * b
        if c > UINT64_MAX:
            raise LatticeOverflowError(f"lcm({a}, {b}) exceeds 64 bits")
        return c

    def law_sample(self) -> list:
        return list(range(1, 33))

    def random_element(self, rng: random.Random):
        return rng.randint(1, 30)

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        a = _parse_int(text)
        if not self.contains(a):
            raise DomainError(f"{a} is not a positive 64-bit integer")
        return a

    def __str__(self) -> str:
        return "div"


@dataclass(frozen=True)
class PowersetLattice(Lattice):
    """Subsets of a named universe of at most 64 members, as bit masks.

    Bit ``i`` of a mask stands for ``universe[i]``.
    """

    universe: tuple[str, ...]

    kind = "powerset"
    distributive = True

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        if len(self.universe) > MAX_UNIVERSE:
            raise DomainError(f"powerset universe has {len(self.universe)} members, max is {MAX_UNIVERSE}")
        if len(set(self.universe)) != len(self.universe):
            raise DomainError(f"duplicate names in powerset universe {self.universe}")
        for name in self.universe:
            if not _NAME_RE.fullmatch(name):
                raise LatticeParseError(f"invalid member name {name!r}")

    @property
    def size(self) -> int:
        return len(self.universe)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def contains(self, a) -> bool:
        return _is_int(a) and 0 <= a <= self.full

    def _meet(self, a, b):
        return a & b

    def _join(self, a, b):
        return a | b

    def elements(self) -> list | None:
        return list(range(1 << self.size)) if self.size <= 16 else None

    def law_sample(self) -> list:
        if self.size <= 5:
            return list(range(1 << self.size))
        rng = random.Random(0)
        picked = {0, self.full}
        while len(picked) < 32:
            picked.add(rng.getrandbits(self.size))
        return sorted(picked)

    def random_element(self, rng: random.Random):
        return rng.getrandbits(self.size) if self.size else 0

    def format(self, a) -> str:
        return "{" + ",".join(n for i, n in enumerate(self.universe) if a >> i & 1) + "}"

    def parse(self, text: str):
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise LatticeParseError(f"powerset element must be braced, got {text!r}")
        body = text[1:-1].strip()
        mask = 0
        if body:
            index = {n: i for i, n in enumerate(self.universe)}
            for name in body.split(","):
                name = name.strip()
                if name not in index:
                    raise DomainError(f"unknown member {name!r}; universe is {','.join(self.universe)}")
                mask |= 1 << index[name]
        return mask

    def __str__(self) -> str:
        return "powerset:" + ",".join(self.universe)


@dataclass(frozen=True)
class ProductLattice(Lattice):
    """Componentwise product of two lattices; elements are pairs."""

    left: Lattice
    right: Lattice

    kind = "product"

    @property
    def distributive(self) -> bool:
        return self.left.distributive and self.right.distributive

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.left.contains(a[0])
            and self.right.contains(a[1])
        )

    def _meet(self, a, b):
        return (self.left._meet(a[0], b[0]), self.right._meet(a[1], b[1]))

    def _join(self, a, b):
        return (self.left._join(a[0], b[0]), self.right._join(a[1], b[1]))

    def elements(self) -> list | None:
        le, re_ = self.left.elements(), self.right.elements()
        if le is None or re_ is None or len(le) * len(re_) > 4096:
            return None
        return list(itertools.product(le, re_))

    def law_sample(self) -> list:
        pairs = list(itertools.product(self.left.law_sample(), self.right.law_sample()))
        if len(pairs) <= 32:
            return pairs
        return random.Random(0).sample(pairs, 32)

    def random_element(self, rng: random.Random):
        return (self.left.random_element(rng), self.right.random_element(rng))

    def format(self, a) -> str:
        return f"({self.left.format(a[0])}|{self.right.format(a[1])})"

    def parse(self, text: str):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise LatticeParseError(f"product element must look like (lhs|rhs), got {text!r}")
        parts = split_top(text[1:-1], "|")
        if len(parts) != 2:
            raise LatticeParseError(f"product element needs exactly one top-level '|': {text!r}")
        return (self.left.parse(parts[0]), self.right.parse(parts[1]))

    def __str__(self) -> str:
        return f"product:({self.left})+({self.right})"


@dataclass(frozen=True)
class FiniteLattice(Lattice):
    """A lattice given by explicit meet and join tables over nodes 0..n-1.

    Tables are checked against the lattice laws on construction and an
    :class:`AxiomError` is raised on the first violation.  The
    ``distributive`` flag is computed by an exhaustive triple check.
    Pass ``validate=False`` only to inspect a broken table.
    """

    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None
    validate: bool = field(default=True, compare=False, repr=False)
    label: str | None = field(default=None, compare=False, repr=False)
    distributive: bool = field(init=False, compare=False)

    kind = "table"

    def __post_init__(self):
        meet_t = tuple(tuple(row) for row in self.meet_table)
        join_t = tuple(tuple(row) for row in self.join_table)
        object.__setattr__(self, "meet_table", meet_t)
        object.__setattr__(self, "join_table", join_t)
        n = len(meet_t)
        if n == 0:
            raise AxiomError("a lattice table needs at least one element")
        for label, table in (("meet", meet_t), ("join", join_t)):
            if len(table) != n or any(len(row) != n for row in table):
                raise AxiomError(f"{label} table is not {n}x{n}")
            for row in table:
                for v in row:
                    if not (_is_int(v) and 0 <= v < n):
                        raise AxiomError(f"{label} table entry {v!r} is not a node index in [0,{n})")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n or len(set(names)) != n:
                raise AxiomError(f"need {n} distinct names, got {names}")
            for name in names:
                if not _NAME_RE.fullmatch(name) or name.isdigit():
                    raise LatticeParseError(f"invalid node name {name!r}")
            object.__setattr__(self, "names", names)
        distributive = False
        if self.validate:
            report = check_axioms(self, range(n))
            if not report:
                raise AxiomError(f"table is not a lattice: {report.describe(self)}")
            distributive = check_distributive(self, range(n)).passed
        object.__setattr__(self, "distributive", distributive)

    @classmethod
    def from_order(cls, names, below, label: str | None = None) -> "FiniteLattice":
        """Build the tables from a strict order given as ``(lower, upper)`` name pairs."""
        names = tuple(names)
        n = len(names)
        idx = {name: i for i, name in enumerate(names)}
        le = [[i == j for j in range(n)] for i in range(n)]
        for lo, hi in below:
            le[idx[lo]][idx[hi]] = True
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    le[i][j] = le[i][j] or (le[i][k] and le[k][j])

        def extremum(i, j, bound, better):
            cands = [c for c in range(n) if bound(c, i) and bound(c, j)]
            best = [c for c in cands if all(better(d, c) for d in cands)]
            if len(best) != 1:
                raise AxiomError(f"{names[i]} and {names[j]} have no unique bound")
            return best[0]

        meet_t = [[extremum(i, j, lambda c, x: le[c][x], lambda d, c: le[d][c]) for j in range(n)] for i in range(n)]
        join_t = [[extremum(i, j, lambda c, x: le[x][c], lambda d, c: le[c][d]) for j in range(n)] for i in range(n)]
        return cls(meet_t, join_t, names, label=label)

    @property
    def size(self) -> int:
        return len(self.meet_table)

    def contains(self, a) -> bool:
        return _is_int(a) and 0 <= a < self.size

    def _meet(self, a, b):
        return self.meet_table[a][b]

    def _join(self, a, b):
        return self.join_table[a][b]

    def elements(self) -> list | None:
        return list(range(self.size))

    def law_sample(self) -> list:
        return self.elements()

    def random_element(self, rng: random.Random):
        return rng.randrange(self.size)

    def format(self, a) -> str:
        return self.names[a] if self.names else str(a)

    def parse(self, text: str):
        text = text.strip()
        if self.names and text in self.names:
            return self.names.index(text)
        if text.isdigit():
            a = int(text)
            self.check(a)
            return a
        raise DomainError(f"unknown node {text!r}")

    def __str__(self) -> str:
        return self.label or f"table[{self.size}]"


@cache
def m3() -> FiniteLattice:
    """The diamond: bottom, three pairwise incomparable atoms, top."""
    atoms = ("a", "b", "c")
    below = [("bot", x) for x in atoms] + [(x, "top") for x in atoms]
    return FiniteLattice.from_order(("bot", "a", "b", "c", "top"), below, label="m3")


@cache
def n5() -> FiniteLattice:
    """The pentagon: bottom < a < c < top, and b incomparable to a and c."""
    below = [("bot", "a"), ("a", "c"), ("c", "top"), ("bot", "b"), ("b", "top")]
    return FiniteLattice.from_order(("bot", "a", "b", "c", "top"), below, label="n5")


BUILTIN_TABLES = {"m3": m3, "n5": n5}


# -- table files ------------------------------------------------------------

def parse_table(text: str, label: str | None = None) -> FiniteLattice:
    """Parse the text table format.

    ``n=<count>``, an optional ``names=<a,b,...>``, then ``meet:`` and
    ``join:`` each followed by n rows of n space-separated 0-based indices.
    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("n="):
        raise LatticeParseError("table file must start with n=<count>")
    n = _parse_int(lines[0][2:])
    if n < 1:
        raise LatticeParseError("n must be positive")
    pos = 1
    names = None
    if pos < len(lines) and lines[pos].startswith("names="):
        names = tuple(s.strip() for s in lines[pos][6:].split(","))
        pos += 1
    tables = {}
    for section in ("meet", "join"):
        if pos >= len(lines) or lines[pos] != f"{section}:":
            raise LatticeParseError(f"expected '{section}:' section")
        rows = lines[pos + 1 : pos + 1 + n]
        if len(rows) != n:
            raise LatticeParseError(f"{section} section has {len(rows)} rows, expected {n}")
        tables[section] = [[_parse_int(tok) for tok in row.split()] for row in rows]
        pos += 1 + n
    if pos != len(lines):
        raise LatticeParseError(f"trailing content after join table: {lines[pos]!r}")
    return FiniteLattice(tables["meet"], tables["join"], names, label=label)


def format_table(d: FiniteLattice) -> str:
    out = [f"n={d.size}"]
    if d.names:
        out.append("names=" + ",".join(d.names))
    for label, table in (("meet", d.meet_table), ("join", d.join_table)):
        out.append(f"{label}:")
        out.extend(" ".join(map(str, row)) for row in table)
    return "\n".join(out) + "\n"


def load_table(path) -> FiniteLattice:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise LatticeParseError(f"cannot read table file {path}: {exc}") from None
    return parse_table(text, label=f"table:{path}")


# -- spec grammar -------------------------------------------------------------

@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    universe: tuple[str, ...] = ()
    children: tuple["InstanceSpec", ...] = ()
    source: str | None = None


def _strip_parens(text: str) -> str:
    """Remove parentheses that enclose the whole of ``text``."""
    text = text.strip()
    while text.startswith("("):
        depth = 0
        for i, ch in enumerate(text):
            depth += ch in _OPEN
            depth -= ch in _CLOSE
            if depth == 0:
                break
        if i != len(text) - 1:
            break
        text = text[1:-1].strip()
    return text


def parse_lattice_spec(text: str) -> InstanceSpec:
    text = _strip_parens(text)
    head, _, rest = text.partition(":")
    head = head.strip().lower()
    if head in ("int", "div") and not rest:
        return InstanceSpec(head)
    if head in BUILTIN_TABLES and not rest:
        return InstanceSpec("table", source=head)
    if head == "powerset":
        names = tuple(s.strip() for s in rest.split(",")) if rest.strip() else ()
        return InstanceSpec("powerset", universe=names)
    if head == "table" and rest:
        return InstanceSpec("table", source=rest.strip())
    if head == "product":
        sides = split_top(rest, "+")
        if len(sides) < 2:
            raise LatticeParseError(f"product needs two specs joined by '+': {text!r}")
        # split at the first '+': the left side must be parenthesized if it is itself a product
        sides = [sides[0], "+".join(sides[1:])]
        return InstanceSpec("product", children=tuple(parse_lattice_spec(s) for s in sides))
    raise LatticeParseError(f"unknown lattice spec {text!r}")


def build_descriptor(spec: InstanceSpec) -> Lattice:
    if spec.kind == "int":
        return IntLattice()
    if spec.kind == "div":
        return DivisibilityLattice()
    if spec.kind == "powerset":
        return PowersetLattice(spec.universe)
    if spec.kind == "product":
        left, right = spec.children
        return ProductLattice(build_descriptor(left), build_descriptor(right))
    if spec.kind == "table":
        if spec.source in BUILTIN_TABLES:
            return BUILTIN_TABLES[spec.source]()
        return load_table(spec.source)
    raise LatticeParseError(f"unknown lattice kind {spec.kind!r}")


def lattice_from_spec(text: str) -> Lattice:
    return build_descriptor(parse_lattice_spec(text))


def parse_element(d: Lattice, text: str):
    if not text.strip():
        raise LatticeParseError("empty element text")
    return d.parse(text)


def format_element(d: Lattice, a) -> str:
    return d.format(a)
