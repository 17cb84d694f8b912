# %% [markdown]
# # Exponential versus quadratic
#
# Operation tallies on (1, ..., n) under gcd/lcm.  The same numbers come out
# of `latsort bench` as CSV.

# %%
from math import comb

from latsort import DivisibilityLattice, Sequence, weak_sort_bruteforce, weak_sort_distributive_dp

d = DivisibilityLattice()
print(f"{'n':>3} {'brute ops':>10} {'dp ops':>7}")
for n in range(1, 15):
    x = Sequence(d, range(1, n + 1))
    brute = weak_sort_bruteforce(x)
    dp = weak_sort_distributive_dp(x)
    assert brute.output == dp.output
    assert brute.join_count == sum(comb(n, k) * (k - 1) for k in range(1, n + 1))
    print(f"{n:>3} {brute.op_count:>10} {dp.op_count:>7}")
