"""k-element subsets of [1, n] in lexicographic order, and binomials."""

from __future__ import annotations

from .errors import CapExceededError, LatticeOverflowError

DEFAULT_CAP = 20
BINOMIAL_MAX_N = 62
_INT64_MAX = 2**63 - 1


class KSubsetCursor:
    """Iterator over the k-subsets of {1, ..., n} as increasing tuples.

    Uses the lexicographic successor rule: bump the rightmost position that
    still has room, then reset everything to its right to consecutive values.
    """

    def __init__(self, n: int, k: int, cap: int | None = DEFAULT_CAP):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if not 1 <= k <= n:
            raise ValueError(f"k must lie in [1, {n}], got {k}")
        if cap is not None and n > cap:
            raise CapExceededError(
                f"n={n} exceeds the enumeration cap {cap}; raise the cap or use the distributive path"
            )
        self.n = n
        self.k = k
        self.current = list(range(1, k + 1))
        self.exhausted = False

    def __iter__(self):
        return self

    def __next__(self) -> tuple[int, ...]:
        if self.exhausted:
            raise StopIteration
        out = tuple(self.current)
        self._advance()
        return out

    def _advance(self) -> None:
        cur, n, k = self.current, self.n, self.k
        # position i may hold at most n - k + i + 1 (0-based i)
        i = k - 1
        while i >= 0 and cur[i] == n - k + i + 1:
            i -= 1
        if i < 0:
            self.exhausted = True
            return
        cur[i] += 1
        for j in range(i + 1, k):
            cur[j] = cur[j - 1] + 1


def k_subsets(n: int, k: int, cap: int | None = DEFAULT_CAP) -> KSubsetCursor:
    """All k-element subsets of [1, n], lexicographically ascending."""
    return KSubsetCursor(n, k, cap)


def binomial(n: int, k: int) -> int:
    if not 0 <= k <= n <= BINOMIAL_MAX_N:
        raise ValueError(f"binomial({n}, {k}) needs 0 <= k <= n <= {BINOMIAL_MAX_N}")
    k = min(k, n - k)
    r = 1
    for i in range(1, k + 1):
        # r == C(n - k + i - 1, i - 1) here, so the division is exact
        r = r * (n - k + i) // i
        if r > _INT64_MAX:
            raise LatticeOverflowError(f"binomial({n}, {k}) overflows 64 bits")
    return r
