# %% [markdown]
# # Meets of joins on a chain
#
# For integers the k-th smallest value equals the minimum, over every
# k-element group of positions, of the largest value in that group.
# `weak_sort_bruteforce` evaluates exactly that; `classical_sort` is an
# ordinary comparison sort.  They agree on every input.

# %%
import random

from latsort import IntLattice, Sequence, classical_sort, k_subsets, weak_sort_bruteforce

d = IntLattice()
x = Sequence(d, (7, -3, 7, 0, 12))
print("input      ", x.format())
print("brute force", weak_sort_bruteforce(x).output.format())
print("sorted()   ", classical_sort(x).output.format())

# %% [markdown]
# The index groups are enumerated in lexicographic order:

# %%
print(list(k_subsets(5, 2)))

# %%
rng = random.Random(0)
for _ in range(5):
    x = Sequence(d, tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 8))))
    rep = weak_sort_bruteforce(x)
    assert rep.output == classical_sort(x).output
    print(f"{x.format():<24} -> {rep.output.format():<24} ({rep.join_count} joins, {rep.meet_count} meets)")
