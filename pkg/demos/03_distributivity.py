# %% [markdown]
# # The quadratic fast path and why it needs distributivity
#
# Processing items left to right with `E[k] <- E[k] & (E[k-1] | x_j)` is
# the elementary-symmetric-polynomial recurrence with meet as sum and join
# as product.  It needs join to distribute over meet.

# %%
from latsort import (
    NotDistributiveError,
    Sequence,
    check_distributive,
    m3,
    n5,
    weak_sort_bruteforce,
    weak_sort_distributive_dp,
)

for d in (m3(), n5()):
    report = check_distributive(d, d.elements())
    print(d, report.describe(d))

# %% [markdown]
# On the diamond the recurrence gives the wrong middle entry:

# %%
atoms = Sequence.parse(m3(), "a,b,c")
print("brute force:", weak_sort_bruteforce(atoms).output.format())
print("forced dp:  ", weak_sort_distributive_dp(atoms, force=True).output.format())
try:
    weak_sort_distributive_dp(atoms)
except NotDistributiveError as exc:
    print("refused:", exc)
