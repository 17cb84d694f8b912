# %% [markdown]
# # Sorting where the order is only partial
#
# Replace min/max by meet/join and the same formula sorts sequences in any
# lattice.  The result is still nondecreasing, but its entries can be new.

# %%
from latsort import DivisibilityLattice, PowersetLattice, Sequence, check_sorting_properties, sort_auto

subsets = PowersetLattice(("x", "y", "z"))
a = Sequence.parse(subsets, "{x},{y},{z}")
print(a.format(), "->", sort_auto(a).output.format())

# %% [markdown]
# Positive integers under gcd and lcm, ordered by divisibility:

# %%
div = DivisibilityLattice()
for n in range(1, 9):
    x = Sequence(div, range(1, n + 1))
    print(f"({x.format()})".ljust(20), f"({sort_auto(x).output.format()})")

# %% [markdown]
# Sorting is still idempotent, indifferent to input order, and stays
# between the meet and the join of the input.

# %%
rep = check_sorting_properties(Sequence(div, (12, 18, 8, 30)), trials=50)
print(rep.output.format(), rep.nondecreasing, rep.idempotent, rep.permutation_invariant, rep.bounded)
print("same multiset as input:", rep.multiset_preserved)
